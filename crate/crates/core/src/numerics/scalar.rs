use std::cell::{Cell, RefCell};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::NumericsError;

/// Smallest working precision accepted, in decimal digits.
pub const MIN_DIGITS: usize = 30;
/// Working precision used when nothing else is configured.
pub const DEFAULT_DIGITS: usize = 50;
/// Largest working precision accepted.
pub const MAX_DIGITS: usize = 2000;

// Extra binary digits carried beyond the requested decimal precision.
const GUARD_BITS: usize = 64;
const RM: RoundingMode = RoundingMode::ToEven;

static GLOBAL_DIGITS: AtomicUsize = AtomicUsize::new(DEFAULT_DIGITS);

thread_local! {
    static SCOPED_DIGITS: Cell<Option<usize>> = const { Cell::new(None) };
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

fn check_digits(digits: usize) -> Result<(), NumericsError> {
    if (MIN_DIGITS..=MAX_DIGITS).contains(&digits) {
        Ok(())
    } else {
        Err(NumericsError::Precision(digits))
    }
}

/// Current working precision in decimal digits.
pub fn digits() -> usize {
    SCOPED_DIGITS
        .with(|d| d.get())
        .unwrap_or_else(|| GLOBAL_DIGITS.load(AtomicOrdering::Relaxed))
}

/// Sets the process-wide working precision.
pub fn set_digits(digits: usize) -> Result<(), NumericsError> {
    check_digits(digits)?;
    GLOBAL_DIGITS.store(digits, AtomicOrdering::Relaxed);
    Ok(())
}

/// Runs `f` with the working precision overridden on the current thread.
pub fn with_digits<R>(digits: usize, f: impl FnOnce() -> R) -> Result<R, NumericsError> {
    check_digits(digits)?;
    let previous = SCOPED_DIGITS.with(|d| d.replace(Some(digits)));
    struct Restore(Option<usize>);
    impl Drop for Restore {
        fn drop(&mut self) {
            SCOPED_DIGITS.with(|d| d.set(self.0));
        }
    }
    let _restore = Restore(previous);
    Ok(f())
}

fn bits() -> usize {
    (digits() as f64 * std::f64::consts::LOG2_10).ceil() as usize + GUARD_BITS
}

fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

/// Real number carried at the working precision.
#[derive(Clone)]
pub struct Scalar(BigFloat);

impl Scalar {
    pub fn zero() -> Self {
        Self::from(0)
    }

    pub fn one() -> Self {
        Self::from(1)
    }

    pub fn pi() -> Self {
        let p = bits();
        Scalar(with_consts(|cc| cc.pi(p, RM)))
    }

    /// `10^-(digits() - slack)`: the tolerance family used throughout the crate.
    pub fn eps(slack: usize) -> Self {
        let exp = digits().saturating_sub(slack).max(1);
        Self::ten_pow_neg(exp)
    }

    pub fn ten_pow_neg(exp: usize) -> Self {
        let p = bits();
        let ten = BigFloat::from_u8(10, p);
        Scalar(ten.powi(exp, p, RM).reciprocal(p, RM))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::from(num) / Scalar::from(den)
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        let p = bits();
        let text = n.to_string();
        Scalar(with_consts(|cc| BigFloat::parse(&text, Radix::Dec, p, RM, cc)))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::from_bigint(r.numer()) / Self::from_bigint(r.denom())
    }

    /// Parses a decimal literal (`-0.25`) or an exact ratio (`3/7`).
    pub fn parse(text: &str) -> Result<Self, NumericsError> {
        parse_rational(text)
            .map(|r| Self::from_rational(&r))
            .ok_or_else(|| NumericsError::Literal(text.to_string()))
    }

    pub fn from_f64(value: f64) -> Self {
        Scalar(BigFloat::from_f64(value, bits()))
    }

    pub fn to_f64(&self) -> f64 {
        self.decimal_parts()
            .map(|(neg, digits, exp)| {
                let s = format!("{}0.{}e{}", if neg { "-" } else { "" }, digits, exp + 1);
                s.parse().unwrap_or(f64::NAN)
            })
            .unwrap_or(0.0)
    }

    pub fn is_finite(&self) -> bool {
        !(self.0.is_nan() || self.0.is_inf())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        !self.0.is_zero() && self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        !self.0.is_zero() && self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    pub fn sqr(&self) -> Self {
        self * self
    }

    /// Square root; tiny negative round-off below `eps(8)` is treated as zero.
    pub fn sqrt(&self) -> Self {
        if self.is_negative() {
            if self.abs() < Scalar::eps(8) {
                return Scalar::zero();
            }
            return Scalar(BigFloat::nan(None));
        }
        Scalar(self.0.sqrt(bits(), RM))
    }

    pub fn sin(&self) -> Self {
        let p = bits();
        Scalar(with_consts(|cc| self.0.sin(p, RM, cc)))
    }

    pub fn cos(&self) -> Self {
        let p = bits();
        Scalar(with_consts(|cc| self.0.cos(p, RM, cc)))
    }

    pub fn tan(&self) -> Self {
        let p = bits();
        Scalar(with_consts(|cc| self.0.tan(p, RM, cc)))
    }

    pub fn asin(&self) -> Self {
        let p = bits();
        Scalar(with_consts(|cc| self.0.asin(p, RM, cc)))
    }

    pub fn acos(&self) -> Self {
        let p = bits();
        Scalar(with_consts(|cc| self.0.acos(p, RM, cc)))
    }

    pub fn atan(&self) -> Self {
        let p = bits();
        Scalar(with_consts(|cc| self.0.atan(p, RM, cc)))
    }

    /// Four-quadrant arctangent of `self / x`, in (-pi, pi].
    pub fn atan2(&self, x: &Scalar) -> Self {
        let y = self;
        if x.is_zero() {
            return match y.sign() {
                Ordering::Greater => Scalar::pi() / Scalar::from(2),
                Ordering::Less => -(Scalar::pi() / Scalar::from(2)),
                Ordering::Equal => Scalar::zero(),
            };
        }
        // Keep the atan argument at most 1 in magnitude.
        if y.abs() > x.abs() {
            let half_pi = Scalar::pi() / Scalar::from(2);
            let base = (x / y).atan();
            return if y.is_positive() {
                half_pi - base
            } else {
                -half_pi - base
            };
        }
        let base = (y / x).atan();
        if x.is_positive() {
            base
        } else if y.is_negative() {
            base - Scalar::pi()
        } else {
            base + Scalar::pi()
        }
    }

    pub fn floor(&self) -> Self {
        Scalar(self.0.floor())
    }

    pub fn round(&self) -> Self {
        (self + &Scalar::from_ratio(1, 2)).floor()
    }

    pub fn to_degrees(&self) -> Self {
        self * &Scalar::from(180) / Scalar::pi()
    }

    pub fn to_radians(&self) -> Self {
        self * &Scalar::pi() / Scalar::from(180)
    }

    pub fn sign(&self) -> Ordering {
        if self.is_zero() {
            Ordering::Equal
        } else if self.0.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    pub fn max(self, other: Scalar) -> Scalar {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: Scalar) -> Scalar {
        if other < self {
            other
        } else {
            self
        }
    }

    /// Integer value of an integral scalar (callers round first).
    pub fn to_bigint(&self) -> BigInt {
        let Some((neg, digits, exp)) = self.decimal_parts() else {
            return BigInt::zero();
        };
        if exp < 0 {
            return BigInt::zero();
        }
        let keep = (exp + 1) as usize;
        let mut int_digits: String = digits.chars().take(keep).collect();
        while int_digits.len() < keep {
            int_digits.push('0');
        }
        let n: BigInt = int_digits.parse().unwrap_or_default();
        if neg {
            -n
        } else {
            n
        }
    }

    /// Decimal digits and exponent: value = ±d1.d2d3... × 10^exp. `None` for zero.
    fn decimal_parts(&self) -> Option<(bool, String, i64)> {
        if self.is_zero() || !self.is_finite() {
            return None;
        }
        let text = with_consts(|cc| self.0.format(Radix::Dec, RM, cc)).ok()?;
        let (neg, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text.as_str()),
        };
        let (mantissa, exp) = body.split_once('e')?;
        let exp: i64 = exp.parse().ok()?;
        let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
        let mut digits = format!("{int_part}{frac_part}");
        // Normalise so that the first digit is non-zero.
        let lead = digits.chars().take_while(|&c| c == '0').count();
        if lead == digits.len() {
            return None;
        }
        digits.drain(..lead);
        let exp = exp + int_part.len() as i64 - 1 - lead as i64;
        let digits = digits.trim_end_matches('0').to_string();
        Some((neg, digits, exp))
    }

    /// Plain decimal rendering rounded to `sig` significant digits, trailing
    /// zeros trimmed. Magnitudes below `eps(8)` print as `0`.
    pub fn to_sig_string(&self, sig: usize) -> String {
        assert!(sig > 0);
        if self.abs() < Scalar::eps(8) {
            return "0".to_string();
        }
        let Some((neg, digits, mut exp)) = self.decimal_parts() else {
            return "0".to_string();
        };
        let mut kept: Vec<u8> = digits.bytes().map(|b| b - b'0').collect();
        let round_up = kept.len() > sig && kept[sig] >= 5;
        kept.truncate(sig);
        if round_up {
            let mut i = kept.len();
            loop {
                if i == 0 {
                    kept.insert(0, 1);
                    kept.truncate(sig);
                    exp += 1;
                    break;
                }
                i -= 1;
                if kept[i] == 9 {
                    kept[i] = 0;
                } else {
                    kept[i] += 1;
                    break;
                }
            }
        }
        while kept.len() > 1 && kept.last() == Some(&0) {
            kept.pop();
        }
        let digits: String = kept.iter().map(|d| char::from(b'0' + d)).collect();
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        if exp < 0 {
            out.push_str("0.");
            out.extend(std::iter::repeat('0').take((-exp - 1) as usize));
            out.push_str(&digits);
        } else {
            let int_len = exp as usize + 1;
            if digits.len() <= int_len {
                out.push_str(&digits);
                out.extend(std::iter::repeat('0').take(int_len - digits.len()));
            } else {
                out.push_str(&digits[..int_len]);
                out.push('.');
                out.push_str(&digits[int_len..]);
            }
        }
        out
    }
}

/// Parses `[-]digits[.digits]` or `[-]int/int` into an exact rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: BigInt = parse_integer(num)?;
        let den: BigInt = parse_integer(den)?;
        if den.is_zero() {
            return None;
        }
        return Some(BigRational::new(num, den));
    }
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() || !int_part.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if body.contains('.') && (frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()))
    {
        return None;
    }
    let num: BigInt = format!("{int_part}{frac_part}").parse().ok()?;
    let den = BigInt::from(10).pow(frac_part.len() as u32);
    let r = BigRational::new(num, den);
    Some(if neg { -r } else { r })
}

fn parse_integer(text: &str) -> Option<BigInt> {
    let text = text.trim();
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let n: BigInt = digits.parse().ok()?;
    Some(if text.starts_with('-') { -n } else { n })
}

impl From<i32> for Scalar {
    fn from(value: i32) -> Self {
        Scalar(BigFloat::from_i32(value, bits()))
    }
}

impl From<i64> for Scalar {
    fn from(value: i64) -> Self {
        Scalar(BigFloat::from_i64(value, bits()))
    }
}

impl From<u64> for Scalar {
    fn from(value: u64) -> Self {
        Scalar(BigFloat::from_u64(value, bits()))
    }
}

impl From<usize> for Scalar {
    fn from(value: usize) -> Self {
        Scalar(BigFloat::from_u64(value as u64, bits()))
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.0.cmp(&other.0) == Some(0)
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.cmp(&other.0).map(|c| c.cmp(&0))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self.to_sig_string(digits()))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = f.precision().unwrap_or(super::DISPLAY_DIGITS);
        f.write_str(&self.to_sig_string(sig))
    }
}

/// Decimal string at display precision.
impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(self.0.neg())
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(self.0.clone().neg())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar(self.0.$inner(&rhs.0, bits(), RM))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);
binop!(Div, div, div);
