use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Serialize, Serializer};

use super::Scalar;

// Rendered seconds keep at most this many fractional digits.
const SECOND_DECIMALS: u32 = 5;

/// Angle split into whole degrees, whole arcminutes and fractional arcseconds.
#[derive(Clone, Debug, PartialEq)]
pub struct DmsAngle {
    pub negative: bool,
    pub degrees: u64,
    pub minutes: u8,
    pub seconds: Scalar,
}

/// Decomposes an angle given in degrees.
pub fn to_dms(degrees: &Scalar) -> DmsAngle {
    let negative = degrees.is_negative();
    let abs = degrees.abs();
    let whole = abs.floor();
    let rest_minutes = (&abs - &whole) * Scalar::from(60);
    let minutes = rest_minutes.floor();
    let seconds = (&rest_minutes - &minutes) * Scalar::from(60);
    DmsAngle {
        negative,
        degrees: u64::try_from(whole.to_bigint()).unwrap_or(u64::MAX),
        minutes: u8::try_from(minutes.to_bigint()).unwrap_or(59).min(59),
        seconds,
    }
}

impl DmsAngle {
    pub fn to_degrees(&self) -> Scalar {
        let value = Scalar::from(self.degrees)
            + Scalar::from(u64::from(self.minutes)) / Scalar::from(60)
            + &self.seconds / &Scalar::from(3600);
        if self.negative {
            -value
        } else {
            value
        }
    }

    pub fn to_arcsec(&self) -> Scalar {
        self.to_degrees() * Scalar::from(3600)
    }
}

impl fmt::Display for DmsAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let scale = BigInt::from(10u32).pow(SECOND_DECIMALS);
        let units = (self.to_degrees().abs()
            * Scalar::from(3600)
            * Scalar::from_bigint(&scale))
        .round()
        .to_bigint();
        let (whole_sec, frac) = units.div_rem(&scale);
        let (whole_min, sec) = whole_sec.div_rem(&BigInt::from(60));
        let (deg, min) = whole_min.div_rem(&BigInt::from(60));
        let mut frac = format!("{:0>width$}", frac, width = SECOND_DECIMALS as usize);
        while frac.ends_with('0') {
            frac.pop();
        }
        let zero = deg == BigInt::from(0) && min == BigInt::from(0) && sec == BigInt::from(0);
        let sign = if self.negative && !(zero && frac.is_empty()) {
            "-"
        } else {
            ""
        };
        if frac.is_empty() {
            write!(f, "{sign}{deg}° {min}' {sec}\"")
        } else {
            write!(f, "{sign}{deg}° {min}' {sec}.{frac}\"")
        }
    }
}

impl Serialize for DmsAngle {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dms(x: Scalar) -> String {
        to_dms(&x).to_string()
    }

    #[test]
    fn renders_known_angles() {
        assert_eq!(dms(Scalar::from_ratio(100, 3)), "33° 20' 0\"");
        assert_eq!(dms(Scalar::zero()), "0° 0' 0\"");
        let theta = (Scalar::from(2) * Scalar::from_ratio(9, 32).asin()).to_degrees();
        assert_eq!(dms(theta), "32° 40' 10.72402\"");
        assert_eq!(dms(Scalar::from_ratio(360, 13)), "27° 41' 32.30769\"");
        assert_eq!(dms(Scalar::from_ratio(360, 11)), "32° 43' 38.18182\"");
        assert_eq!(dms(Scalar::from_ratio(-3, 2)), "-1° 30' 0\"");
    }

    #[test]
    fn carries_rounded_seconds() {
        // 59.999999" rounds up into the next minute and degree.
        let x = Scalar::from(10) - Scalar::from_ratio(1, 3_600_000_000);
        assert_eq!(dms(x), "10° 0' 0\"");
        let y = Scalar::from(1) + Scalar::from_ratio(1, 4) / Scalar::from(3600);
        assert_eq!(dms(y), "1° 0' 0.25\"");
    }

    #[test]
    fn fields_reconstruct_input() {
        let x = Scalar::from_ratio(123_456_789, 1_000_000);
        let d = to_dms(&x);
        assert_eq!(d.degrees, 123);
        assert_eq!(d.minutes, 27);
        assert!((d.to_degrees() - x).abs() < Scalar::eps(4));
    }
}
