//! Comparison of vertex lists against the regular polygon.

use serde::Serialize;

use crate::geometry::{distance, Point};
use crate::numerics::{side_from_radius, to_dms, DmsAngle, Scalar};
use crate::polygon::{circumcenter, VertexList};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AnalysisError {
    #[error("a polygon needs at least 3 vertices")]
    TooFewVertices,
    #[error("vertices {0} and {1} coincide")]
    RepeatedVertex(usize, usize),
    #[error("sides {0} and {1} cross")]
    SelfIntersecting(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PolygonReport {
    pub n: usize,
    /// Side `k` joins vertex `k` to vertex `k + 1`.
    pub sides: Vec<Scalar>,
    #[serde(rename = "central_angles_dms")]
    pub central_angles: Vec<DmsAngle>,
    #[serde(rename = "interior_angles_dms")]
    pub interior_angles: Vec<DmsAngle>,
    #[serde(skip)]
    pub central_degrees: Vec<Scalar>,
    #[serde(skip)]
    pub interior_degrees: Vec<Scalar>,
    /// Against the regular side for the circumradius, or the mean side when
    /// the vertices are not concyclic.
    pub max_side_dev: Scalar,
    /// Largest interior angle deviation; central angles count too when concyclic.
    pub max_angle_dev_arcsec: Scalar,
    pub equilateral: bool,
    pub equiangular: bool,
    pub concyclic: bool,
    /// Central angles were taken about the vertex centroid.
    pub central_about_centroid: bool,
}

fn spread(values: &[Scalar]) -> Scalar {
    let max = values.iter().fold(values[0].clone(), |m, v| m.max(v.clone()));
    let min = values.iter().fold(values[0].clone(), |m, v| m.min(v.clone()));
    max - min
}

fn max_dev(values: &[Scalar], target: &Scalar) -> Scalar {
    values.iter().fold(Scalar::zero(), |m, v| m.max((v - target).abs()))
}

fn orient(a: &Point, b: &Point, c: &Point) -> Scalar {
    b.sub(a).cross(&c.sub(a))
}

fn check_simple(v: &[Point]) -> Result<(), AnalysisError> {
    let n = v.len();
    if n < 3 {
        return Err(AnalysisError::TooFewVertices);
    }
    let scale = v.iter().fold(Scalar::one(), |m, p| m.max(p.norm()));
    let tol = Scalar::eps(8) * &scale;
    for i in 0..n {
        for j in i + 1..n {
            if distance(&v[i], &v[j]) < tol {
                return Err(AnalysisError::RepeatedVertex(i, j));
            }
        }
    }
    let tol2 = &tol * &scale;
    let sign = |s: Scalar| if s > tol2 { 1 } else if s < -tol2.clone() { -1 } else { 0 };
    for i in 0..n {
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let (a, b) = (&v[i], &v[(i + 1) % n]);
            let (c, d) = (&v[j], &v[(j + 1) % n]);
            let crosses = sign(orient(a, b, c)) * sign(orient(a, b, d)) < 0
                && sign(orient(c, d, a)) * sign(orient(c, d, b)) < 0;
            if crosses {
                return Err(AnalysisError::SelfIntersecting(i, j));
            }
        }
    }
    Ok(())
}

/// Angle from `u` to `w` in degrees, counterclockwise, in (-180, 180].
fn turn(u: &Point, w: &Point) -> Scalar {
    u.cross(w).atan2(&u.dot(w)).to_degrees()
}

pub fn report(v: &VertexList) -> Result<PolygonReport, AnalysisError> {
    check_simple(&v.vertices)?;
    let v = v.counterclockwise();
    let pts = &v.vertices;
    let n = pts.len();
    let nn = Scalar::from(n);
    let sides = v.sides();

    let circle = circumcenter(&pts[0], &pts[n / 3], &pts[2 * n / 3]).and_then(|c| {
        let radius = distance(&pts[0], &c);
        pts.iter()
            .all(|p| (distance(p, &c) - &radius).abs() < Scalar::eps(10) * &radius)
            .then_some((c, radius))
    });
    let concyclic = circle.is_some();
    let (center, radius) = circle.unwrap_or_else(|| {
        let sum = pts.iter().fold(Point::origin(), |s, p| s.add(p));
        (sum.scale(&(Scalar::one() / &nn)), Scalar::zero())
    });

    let full = Scalar::from(360);
    let central_degrees: Vec<Scalar> = (0..n)
        .map(|i| {
            let a = turn(&pts[i].sub(&center), &pts[(i + 1) % n].sub(&center));
            if a.is_negative() { a + &full } else { a }
        })
        .collect();
    let interior_degrees: Vec<Scalar> = (0..n)
        .map(|i| {
            let before = pts[i].sub(&pts[(i + n - 1) % n]);
            let after = pts[(i + 1) % n].sub(&pts[i]);
            Scalar::from(180) - turn(&before, &after)
        })
        .collect();

    let regular_side = if concyclic {
        side_from_radius(&radius, n as u64).expect("n >= 3")
    } else {
        sides.iter().fold(Scalar::zero(), |s, x| s + x) / &nn
    };
    let regular_central = &full / &nn;
    let regular_interior = Scalar::from(180 * (n as i64 - 2)) / &nn;
    let mut angle_dev = max_dev(&interior_degrees, &regular_interior);
    if concyclic {
        angle_dev = angle_dev.max(max_dev(&central_degrees, &regular_central));
    }

    let tol = Scalar::eps(10);
    let mean_side = sides.iter().fold(Scalar::zero(), |s, x| s + x) / &nn;
    Ok(PolygonReport {
        n,
        max_side_dev: max_dev(&sides, &regular_side),
        max_angle_dev_arcsec: angle_dev * Scalar::from(3600),
        equilateral: spread(&sides) < &tol * &mean_side,
        equiangular: spread(&interior_degrees) < &tol * &Scalar::from(180),
        concyclic,
        central_about_centroid: !concyclic,
        central_angles: central_degrees.iter().map(to_dms).collect(),
        interior_angles: interior_degrees.iter().map(to_dms).collect(),
        sides,
        central_degrees,
        interior_degrees,
    })
}

/// Largest deviation from the regular polygon of unit circumradius:
/// `(side error, central angle error in arcsec)`.
pub fn compare_to_regular(v: &VertexList) -> Result<(Scalar, Scalar), AnalysisError> {
    let r = report(v)?;
    let side = side_from_radius(&Scalar::one(), r.n as u64).expect("n >= 3");
    let central = Scalar::from(360) / Scalar::from(r.n);
    Ok((
        max_dev(&r.sides, &side),
        max_dev(&r.central_degrees, &central) * Scalar::from(3600),
    ))
}

/// As [`compare_to_regular`], but for the first side only. In the stepped
/// figures that is the generating chord.
pub fn compare_first_edge(v: &VertexList) -> Result<(Scalar, Scalar), AnalysisError> {
    let r = report(v)?;
    let side = side_from_radius(&Scalar::one(), r.n as u64).expect("n >= 3");
    let central = Scalar::from(360) / Scalar::from(r.n);
    Ok((
        (&r.sides[0] - &side).abs(),
        (&r.central_degrees[0] - &central).abs() * Scalar::from(3600),
    ))
}
