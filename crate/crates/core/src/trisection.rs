//! Dürer's approximate angle trisection.
//!
//! On the unit circle about `O`, with `A` at the start of the arc and `B` at
//! `theta` from it: `D` divides `AB` at one third from `A`; the perpendicular
//! to `AB` at `D` meets the arc at `H`; the compass about `A` through `H` cuts
//! `AB` at `K`; `X` lies a third of the way from `K` to `D`. The angle `AOX`
//! approximates `theta / 3`.

use serde::Serialize;

use crate::engine::{build, ConstructionScript, Selector, TrisectPart};
use crate::geometry::{distance, perpendicular_at, reflect, intersect_line_circle, Circle, Line, Point};
use crate::numerics::{Scalar, DISPLAY_DIGITS};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TrisectionError {
    #[error("angle must lie strictly between 0 and 180 degrees")]
    OutOfRange,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrisectionTrace {
    pub a: Point,
    pub b: Point,
    pub o: Point,
    pub d: Point,
    pub h: Point,
    pub k: Point,
    pub x: Point,
    pub theta_in: Scalar,
    pub theta_out: Scalar,
    pub error_arcsec: Scalar,
}

fn check(theta: &Scalar) -> Result<(), TrisectionError> {
    if theta.is_positive() && *theta < Scalar::from(180) {
        Ok(())
    } else {
        Err(TrisectionError::OutOfRange)
    }
}

/// Runs the chain from `a` towards `b` on the unit circle about the origin.
fn chain(a: &Point, b: &Point) -> (Point, Point, Point, Point) {
    let o = Point::origin();
    let ab = Line { p: a.clone(), q: b.clone() };
    let d = a.lerp(b, &Scalar::from_ratio(1, 3));
    let upright = perpendicular_at(&d, &ab);
    let (h1, h2) = intersect_line_circle(&upright, &Circle::unit()).expect("the upright meets the circle");
    // H is on the arc side of the chord, away from the center.
    let outward = d.sub(&o);
    let h = if h1.sub(&d).dot(&outward) > h2.sub(&d).dot(&outward) { h1 } else { h2 };
    let along = b.sub(a).scale(&(Scalar::one() / distance(a, b)));
    let k = a.add(&along.scale(&distance(a, &h)));
    let x = k.lerp(&d, &Scalar::from_ratio(1, 3));
    (d, h, k, x)
}

/// Trisects the arc of `theta` degrees that starts at `start` degrees.
pub fn trisect_at(theta: &Scalar, start: &Scalar) -> Result<TrisectionTrace, TrisectionError> {
    check(theta)?;
    let a = Point::on_unit_circle_deg(start);
    let b = Point::on_unit_circle_deg(&(start + theta));
    let (d, h, k, x) = chain(&a, &b);
    let theta_out = (a.cross(&x)).atan2(&a.dot(&x)).to_degrees();
    let error_arcsec = ((theta / &Scalar::from(3)) - &theta_out).abs() * Scalar::from(3600);
    Ok(TrisectionTrace {
        a,
        b,
        o: Point::origin(),
        d,
        h,
        k,
        x,
        theta_in: theta.clone(),
        theta_out,
        error_arcsec,
    })
}

/// Trisects the arc of `theta` degrees starting on the positive x-axis.
pub fn trisect(theta: &Scalar) -> Result<TrisectionTrace, TrisectionError> {
    trisect_at(theta, &Scalar::zero())
}

/// Both trisection points on the arc: `l` from the chain run out of `A`,
/// projected from the center onto the arc, and `m` from the chain run out of `B`.
pub fn trisect_full(theta: &Scalar, start: &Scalar) -> Result<(Point, Point), TrisectionError> {
    let trace = trisect_at(theta, start)?;
    let (_, _, _, x_back) = chain(&trace.b, &trace.a);
    let project = |p: &Point| p.scale(&(Scalar::one() / p.norm()));
    Ok((project(&trace.x), project(&x_back)))
}

/// Mirror line of the arc: the bisector of angle `AOB`.
pub fn bisector(trace: &TrisectionTrace) -> Line {
    let mid = trace.a.midpoint(&trace.b);
    Line { p: trace.o.clone(), q: mid }
}

/// Same chain as a `.geo` script; `a` and `b` are given to the working precision.
pub fn trisection_script(theta: &Scalar, start: &Scalar) -> Result<ConstructionScript, TrisectionError> {
    check(theta)?;
    let a = Point::on_unit_circle_deg(start);
    let b = Point::on_unit_circle_deg(&(start + theta));
    let sig = crate::numerics::digits().max(DISPLAY_DIGITS);
    let lit = |v: &Scalar| v.to_sig_string(sig);
    use build::*;
    let steps = vec![
        given("o", "0", "0"),
        given("a", &lit(&a.x), &lit(&a.y)),
        given("b", &lit(&b.x), &lit(&b.y)),
        circle("arc", "o", "a"),
        line("ab", "a", "b"),
        trisect("d", "a", "b", TrisectPart::One),
        perp("upright", "d", "ab"),
        intersect("h", "upright", "arc", Some(Selector::Near("a".into()))),
        circle("swing", "a", "h"),
        intersect("k", "ab", "swing", Some(Selector::Near("b".into()))),
        trisect("x", "k", "d", TrisectPart::One),
        line("ox", "o", "x"),
        intersect("l", "ox", "arc", Some(Selector::Near("x".into()))),
    ];
    Ok(ConstructionScript::new(steps))
}

/// Image of `p` in the bisector of the traced arc.
pub fn mirror(trace: &TrisectionTrace, p: &Point) -> Point {
    reflect(p, &bisector(trace))
}
