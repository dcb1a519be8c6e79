//! Vertex lists and the normalization that puts a polygon in the unit-circle
//! frame with its first vertex at the top.

use serde::Serialize;

use crate::geometry::{distance, rotate, signed_area2, Point};
use crate::numerics::{side_from_radius, Scalar};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VertexList {
    pub vertices: Vec<Point>,
    /// True when the construction is exact rather than approximate.
    pub exact_regular: bool,
}

impl VertexList {
    pub fn new(vertices: Vec<Point>, exact_regular: bool) -> Self {
        VertexList { vertices, exact_regular }
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    /// Closed polygon side lengths, starting with `v0 v1`.
    pub fn sides(&self) -> Vec<Scalar> {
        let n = self.n();
        (0..n)
            .map(|i| distance(&self.vertices[i], &self.vertices[(i + 1) % n]))
            .collect()
    }

    /// Same polygon listed counterclockwise, keeping the first vertex first.
    pub fn counterclockwise(&self) -> VertexList {
        if signed_area2(&self.vertices).is_negative() {
            let n = self.n();
            let vertices = (0..n).map(|k| self.vertices[(n - k) % n].clone()).collect();
            VertexList::new(vertices, self.exact_regular)
        } else {
            self.clone()
        }
    }
}

/// `p -> offset + scale * R(angle) (p - pivot)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Similarity {
    pub pivot: Point,
    pub scale: Scalar,
    /// Radians, counterclockwise.
    pub angle: Scalar,
    pub offset: Point,
}

impl Similarity {
    pub fn identity() -> Self {
        Similarity {
            pivot: Point::origin(),
            scale: Scalar::one(),
            angle: Scalar::zero(),
            offset: Point::origin(),
        }
    }

    pub fn apply(&self, p: &Point) -> Point {
        let local = p.sub(&self.pivot).scale(&self.scale);
        let turned = if self.angle.is_zero() {
            local
        } else {
            rotate(&local, &self.angle, &Point::origin())
        };
        self.offset.add(&turned)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PolygonError {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
}

/// Center of the circle through three points, `None` when they are collinear.
pub fn circumcenter(a: &Point, b: &Point, c: &Point) -> Option<Point> {
    let d = Scalar::from(2) * (&a.x * &(&b.y - &c.y) + &b.x * &(&c.y - &a.y) + &c.x * &(&a.y - &b.y));
    if d.abs() <= Scalar::eps(8) {
        return None;
    }
    let (a2, b2, c2) = (a.dot(a), b.dot(b), c.dot(c));
    let x = (&a2 * &(&b.y - &c.y) + &b2 * &(&c.y - &a.y) + &c2 * &(&a.y - &b.y)) / &d;
    let y = (&a2 * &(&c.x - &b.x) + &b2 * &(&a.x - &c.x) + &c2 * &(&b.x - &a.x)) / &d;
    Some(Point::new(x, y))
}

/// Circumcenter and radius when every vertex lies on one circle within
/// `10^-(P-8)` relative to the radius.
pub fn circumcircle(vertices: &[Point]) -> Option<(Point, Scalar)> {
    if vertices.len() < 3 {
        return None;
    }
    let n = vertices.len();
    let center = circumcenter(&vertices[0], &vertices[n / 3], &vertices[2 * n / 3])?;
    let radius = distance(&center, &vertices[0]);
    let tol = Scalar::eps(8) * Scalar::one().max(radius.clone());
    vertices
        .iter()
        .all(|v| (distance(&center, v) - &radius).abs() <= tol)
        .then_some((center, radius))
}

/// Puts a polygon in the standard frame: counterclockwise, first vertex at
/// `{0, 1}`, circumradius 1. A polygon that is not concyclic is instead scaled
/// so its first side equals the regular side for radius 1 and translated so
/// its first vertex lands on `{0, 1}`.
pub fn normalize_to_convention(v: &VertexList) -> Result<(VertexList, Similarity), PolygonError> {
    let n = v.n();
    if n < 3 {
        return Err(PolygonError::TooFewVertices(n));
    }
    let v = v.counterclockwise();
    let top = Point::new(Scalar::zero(), Scalar::one());
    let map = match circumcircle(&v.vertices) {
        Some((center, radius)) => {
            let half_pi = Scalar::pi() / Scalar::from(2);
            let angle = half_pi - v.vertices[0].sub(&center).angle();
            Similarity {
                pivot: center,
                scale: Scalar::one() / radius,
                angle,
                offset: Point::origin(),
            }
        }
        None => {
            let target = side_from_radius(&Scalar::one(), n as u64).expect("n >= 3");
            Similarity {
                pivot: v.vertices[0].clone(),
                scale: target / distance(&v.vertices[0], &v.vertices[1]),
                angle: Scalar::zero(),
                offset: top.clone(),
            }
        }
    };
    let mut vertices: Vec<Point> = v.vertices.iter().map(|p| map.apply(p)).collect();
    // The first vertex is exact by construction; drop round-off there.
    vertices[0] = top;
    Ok((VertexList::new(vertices, v.exact_regular), map))
}

/// Regular n-gon on the unit circle with vertex 0 at `{0, 1}`, counterclockwise.
pub fn regular_polygon(n: usize) -> VertexList {
    let step = Scalar::from(2) * Scalar::pi() / Scalar::from(n);
    let start = Scalar::pi() / Scalar::from(2);
    let vertices = (0..n)
        .map(|k| Point::polar(&Scalar::one(), &(&start + &(&step * &Scalar::from(k)))))
        .collect();
    VertexList::new(vertices, true)
}
