//! Richmond's pentagon and 17-gon, Gauss's radical for cos(2π/17), and the
//! Gauss–Wantzel test.

use std::fmt;

use serde::Serialize;

use crate::engine::ConstructionScript;
use crate::geometry::{distance, intersect_circle_circle, Circle, Point};
use crate::numerics::Scalar;
use crate::polygon::VertexList;

pub const FERMAT_PRIMES: [u64; 5] = [3, 5, 17, 257, 65537];

pub const RICHMOND_PENTAGON_SCRIPT: &str = include_str!("../corpus/richmond-5.geo");
pub const RICHMOND_17GON_SCRIPT: &str = include_str!("../corpus/richmond-17.geo");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "factor", rename_all = "snake_case")]
pub enum Obstruction {
    NonFermatPrime(u64),
    RepeatedFactor(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructibilityVerdict {
    pub n: u64,
    pub constructible: bool,
    pub power_of_two: u32,
    pub fermat_factors: Vec<u64>,
    pub obstruction: Option<Obstruction>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("a polygon needs at least 3 sides, got {0}")]
pub struct TooFewSides(pub u64);

impl fmt::Display for ConstructibilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.constructible {
            write!(f, "{}: constructible (2^{}", self.n, self.power_of_two)?;
            for p in &self.fermat_factors {
                write!(f, " · {p}")?;
            }
            f.write_str(")")
        } else {
            write!(f, "{}: NOT constructible", self.n)?;
            match self.obstruction {
                Some(Obstruction::NonFermatPrime(p)) => write!(f, " ({p} is not a Fermat prime)"),
                Some(Obstruction::RepeatedFactor(p)) => write!(f, " ({p} repeated)"),
                None => Ok(()),
            }
        }
    }
}

pub fn is_constructible(n: u64) -> Result<ConstructibilityVerdict, TooFewSides> {
    if n < 3 {
        return Err(TooFewSides(n));
    }
    let power_of_two = n.trailing_zeros();
    let mut rest = n >> power_of_two;
    let mut fermat_factors = Vec::new();
    let mut obstruction = None;
    let mut p = 3;
    while rest > 1 {
        if p * p > rest {
            p = rest;
        }
        if rest % p == 0 {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            let fermat = FERMAT_PRIMES.contains(&p);
            if fermat {
                fermat_factors.push(p);
            }
            if obstruction.is_none() {
                if !fermat {
                    obstruction = Some(Obstruction::NonFermatPrime(p));
                } else if e > 1 {
                    obstruction = Some(Obstruction::RepeatedFactor(p));
                }
            }
        }
        p += 2;
    }
    Ok(ConstructibilityVerdict {
        n,
        constructible: obstruction.is_none(),
        power_of_two,
        fermat_factors,
        obstruction,
    })
}

/// (16 cos 2π/17 = −1 + √17 + √(34 − 2√17) + 2√(17 + 3√17 − √(34 − 2√17) − 2√(34 + 2√17))) / 16
pub fn gauss_cos_2pi_17() -> Scalar {
    let s = |v: i64| Scalar::from(v);
    let r17 = s(17).sqrt();
    let minus = (s(34) - s(2) * &r17).sqrt();
    let plus = (s(34) + s(2) * &r17).sqrt();
    let inner = (s(17) + s(3) * &r17 - &minus - s(2) * plus).sqrt();
    (s(-1) + r17 + minus + s(2) * inner) / s(16)
}

/// Chord-steps counterclockwise round the unit circle from `start`.
fn step_round(start: Point, chord: &Scalar, n: usize) -> Vec<Point> {
    let unit = Circle::unit();
    let mut out = vec![start];
    while out.len() < n {
        let last = out.last().unwrap().clone();
        let swing = Circle { center: last, radius: chord.clone() };
        let (left, _) = intersect_circle_circle(&unit, &swing).expect("chord shorter than the diameter");
        out.push(left);
    }
    out
}

/// Point of the unit circle above `x` on the horizontal axis.
fn above(x: &Scalar) -> Point {
    Point::new(x.clone(), (Scalar::one() - x.sqr()).sqrt())
}

pub fn richmond_pentagon() -> VertexList {
    // A = (0, 1/2); the bisector of OAP meets the axis at tan(x)/2.
    let half = Scalar::from_ratio(1, 2);
    let bx = &half * &(Scalar::from(2).atan() * &half).tan();
    let v2 = above(&bx);
    let p = Point::new(Scalar::one(), Scalar::zero());
    let chord = distance(&p, &v2);
    VertexList::new(step_round(p, &chord, 5), true)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Richmond17 {
    pub a: Point,
    pub b: Point,
    pub c: Point,
    pub d: Point,
    /// Where the circle on CP as diameter crosses the vertical axis.
    pub k: Point,
    pub v4: Point,
    pub v5: Point,
    pub v6: Point,
}

pub fn richmond_17gon_trace() -> Richmond17 {
    let quarter = Scalar::from_ratio(1, 4);
    let zero = Scalar::zero;
    let a = Point::new(zero(), quarter.clone());
    // angle OAP = atan 4, quartered by two bisections
    let t = (Scalar::from(4).atan() * &quarter).tan();
    let b = Point::new(&quarter * &t, zero());
    // angle CAB = 45°, so angle OAC = 45° − x on the other side of the axis
    let c = Point::new(-(&quarter * &((Scalar::one() - &t) / (Scalar::one() + &t))), zero());
    let p = Point::new(Scalar::one(), zero());
    let d = c.midpoint(&p);
    let k = Point::new(zero(), (-c.x.clone()).sqrt());
    let rho = distance(&b, &k);
    let v4 = above(&(&b.x + &rho));
    let v6 = above(&(&b.x - &rho));
    let mid = v4.midpoint(&v6);
    let v5 = mid.scale(&(Scalar::one() / mid.norm()));
    Richmond17 { a, b, c, d, k, v4, v5, v6 }
}

pub fn richmond_17gon() -> VertexList {
    let t = richmond_17gon_trace();
    let chord = distance(&t.v4, &t.v5);
    VertexList::new(step_round(Point::new(Scalar::one(), Scalar::zero()), &chord, 17), true)
}

pub fn richmond_pentagon_script() -> ConstructionScript {
    crate::lang::parse(RICHMOND_PENTAGON_SCRIPT).expect("shipped script parses")
}

pub fn richmond_17gon_script() -> ConstructionScript {
    crate::lang::parse(RICHMOND_17GON_SCRIPT).expect("shipped script parses")
}
