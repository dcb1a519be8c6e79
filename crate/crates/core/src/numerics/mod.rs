//! Arbitrary-precision scalars, the working-precision setting and DMS angles.

mod dms;
mod scalar;

pub use dms::{to_dms, DmsAngle};
pub use scalar::{
    digits, parse_rational, set_digits, with_digits, Scalar, DEFAULT_DIGITS, MAX_DIGITS,
    MIN_DIGITS,
};

/// Significant digits used when printing coordinates and lengths.
pub const DISPLAY_DIGITS: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumericsError {
    #[error("precision {0} is outside the supported range {MIN_DIGITS}..={MAX_DIGITS} digits")]
    Precision(usize),
    #[error("invalid numeric literal `{0}`")]
    Literal(String),
    #[error("a polygon needs at least 3 sides, got {0}")]
    TooFewSides(u64),
    #[error("radius must be positive")]
    NonPositiveRadius,
    #[error("chord length must be positive")]
    NonPositiveChord,
    #[error("chord is longer than the diameter")]
    ChordTooLong,
}

/// Side of the regular `n`-gon inscribed in a circle of the given radius: `2 r sin(pi/n)`.
pub fn side_from_radius(radius: &Scalar, n: u64) -> Result<Scalar, NumericsError> {
    if n < 3 {
        return Err(NumericsError::TooFewSides(n));
    }
    if !radius.is_positive() {
        return Err(NumericsError::NonPositiveRadius);
    }
    let half_angle = Scalar::pi() / Scalar::from(n);
    Ok(Scalar::from(2) * radius * half_angle.sin())
}

/// Central angle in degrees subtended by a chord: `2 asin(side / 2r)`.
pub fn chord_central_angle(side: &Scalar, radius: &Scalar) -> Result<Scalar, NumericsError> {
    if !radius.is_positive() {
        return Err(NumericsError::NonPositiveRadius);
    }
    if !side.is_positive() {
        return Err(NumericsError::NonPositiveChord);
    }
    let mut ratio = side / &(Scalar::from(2) * radius);
    let one = Scalar::one();
    if ratio > one {
        if &ratio - &one > Scalar::eps(8) {
            return Err(NumericsError::ChordTooLong);
        }
        ratio = one;
    }
    Ok((Scalar::from(2) * ratio.asin()).to_degrees())
}
