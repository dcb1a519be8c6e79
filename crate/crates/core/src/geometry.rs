//! Points, lines and circles over [`Scalar`], with the three intersection
//! primitives and the rigid motions used by the constructions.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::numerics::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("the objects do not intersect")]
    NoIntersection,
    #[error("the objects are tangent")]
    Tangency,
    #[error("the lines are parallel")]
    Parallel,
    #[error("a line needs two distinct points")]
    DegenerateLine,
    #[error("a circle needs a positive radius")]
    DegenerateCircle,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point { x, y }
    }

    pub fn origin() -> Self {
        Point::new(Scalar::zero(), Scalar::zero())
    }

    /// Point at `radius` and polar angle `theta` (radians) about the origin.
    pub fn polar(radius: &Scalar, theta: &Scalar) -> Self {
        Point::new(radius * &theta.cos(), radius * &theta.sin())
    }

    /// Unit-circle point at `degrees`.
    pub fn on_unit_circle_deg(degrees: &Scalar) -> Self {
        Point::polar(&Scalar::one(), &degrees.to_radians())
    }

    pub fn add(&self, other: &Point) -> Point {
        Point::new(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn scale(&self, k: &Scalar) -> Point {
        Point::new(&self.x * k, &self.y * k)
    }

    pub fn dot(&self, other: &Point) -> Scalar {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn cross(&self, other: &Point) -> Scalar {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn norm(&self) -> Scalar {
        self.dot(self).sqrt()
    }

    /// Polar angle in radians, in (-pi, pi].
    pub fn angle(&self) -> Scalar {
        self.y.atan2(&self.x)
    }

    /// `self + t (other - self)`.
    pub fn lerp(&self, other: &Point, t: &Scalar) -> Point {
        self.add(&other.sub(self).scale(t))
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        self.lerp(other, &Scalar::from_ratio(1, 2))
    }

    pub fn approx_eq(&self, other: &Point, tol: &Scalar) -> bool {
        distance(self, other) <= *tol
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.x, self.y)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Point", 2)?;
        s.serialize_field("x", &self.x.to_string())?;
        s.serialize_field("y", &self.y.to_string())?;
        s.end()
    }
}

/// Straightedge line through two points, directed from `p` to `q`.
#[derive(Clone, Debug, PartialEq)]
pub struct Line {
    pub p: Point,
    pub q: Point,
}

impl Line {
    pub fn new(p: Point, q: Point) -> Result<Self, GeometryError> {
        if distance(&p, &q) <= Scalar::eps(6) {
            return Err(GeometryError::DegenerateLine);
        }
        Ok(Line { p, q })
    }

    pub fn direction(&self) -> Point {
        self.q.sub(&self.p)
    }

    /// Orthogonal projection of `point` onto the line.
    pub fn foot(&self, point: &Point) -> Point {
        let d = self.direction();
        let t = point.sub(&self.p).dot(&d) / d.dot(&d);
        self.p.add(&d.scale(&t))
    }

    /// Distance from `point` to the line.
    pub fn distance_to(&self, point: &Point) -> Scalar {
        let d = self.direction();
        (d.cross(&point.sub(&self.p)) / d.norm()).abs()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Circle {
    pub center: Point,
    pub radius: Scalar,
}

impl Circle {
    pub fn new(center: Point, radius: Scalar) -> Result<Self, GeometryError> {
        if radius <= Scalar::eps(6) {
            return Err(GeometryError::DegenerateCircle);
        }
        Ok(Circle { center, radius })
    }

    /// Circle about `center` passing through `through`.
    pub fn through(center: Point, through: &Point) -> Result<Self, GeometryError> {
        let radius = distance(&center, through);
        Circle::new(center, radius)
    }

    pub fn unit() -> Self {
        Circle {
            center: Point::origin(),
            radius: Scalar::one(),
        }
    }
}

pub fn distance(p: &Point, q: &Point) -> Scalar {
    q.sub(p).norm()
}

fn margin(scale: &Scalar) -> Scalar {
    Scalar::eps(8) * Scalar::one().max(scale.clone())
}

/// Both intersections of two circles; the first lies left of the directed
/// line from `c1.center` to `c2.center`.
pub fn intersect_circle_circle(c1: &Circle, c2: &Circle) -> Result<(Point, Point), GeometryError> {
    let delta = c2.center.sub(&c1.center);
    let d = delta.norm();
    let big_r = &c1.radius;
    let r = &c2.radius;
    let tol = margin(&(big_r + r));
    if d <= tol {
        return Err(GeometryError::NoIntersection);
    }
    let outer = &d - &(big_r + r);
    let inner = &d - &(big_r - r).abs();
    if outer.abs() <= tol || inner.abs() <= tol {
        return Err(GeometryError::Tangency);
    }
    if outer.is_positive() || inner.is_negative() {
        return Err(GeometryError::NoIntersection);
    }
    let a = (d.sqr() - r.sqr() + big_r.sqr()) / (Scalar::from(2) * &d);
    let h = (big_r.sqr() - a.sqr()).sqrt();
    let u = delta.scale(&(Scalar::one() / &d));
    let normal = Point::new(-&u.y, u.x.clone());
    let base = c1.center.add(&u.scale(&a));
    Ok((base.add(&normal.scale(&h)), base.sub(&normal.scale(&h))))
}

/// Both intersections of a line and a circle, ordered along the line's direction.
pub fn intersect_line_circle(l: &Line, c: &Circle) -> Result<(Point, Point), GeometryError> {
    let dist = l.distance_to(&c.center);
    let gap = &c.radius - &dist;
    if gap.abs() <= margin(&c.radius) {
        return Err(GeometryError::Tangency);
    }
    if gap.is_negative() {
        return Err(GeometryError::NoIntersection);
    }
    let foot = l.foot(&c.center);
    let d = l.direction();
    let unit = d.scale(&(Scalar::one() / d.norm()));
    let h = (c.radius.sqr() - dist.sqr()).sqrt();
    Ok((foot.sub(&unit.scale(&h)), foot.add(&unit.scale(&h))))
}

pub fn intersect_line_line(l1: &Line, l2: &Line) -> Result<Point, GeometryError> {
    let d1 = l1.direction();
    let d2 = l2.direction();
    let cross = d1.cross(&d2);
    if cross.abs() <= Scalar::eps(8) * d1.norm() * d2.norm() {
        return Err(GeometryError::Parallel);
    }
    let t = l2.p.sub(&l1.p).cross(&d2) / cross;
    Ok(l1.p.add(&d1.scale(&t)))
}

/// Rotates `p` by `theta` radians counterclockwise about `center`.
pub fn rotate(p: &Point, theta: &Scalar, center: &Point) -> Point {
    let v = p.sub(center);
    let (s, c) = (theta.sin(), theta.cos());
    let x = &v.x * &c - &v.y * &s;
    let y = &v.x * &s + &v.y * &c;
    center.add(&Point::new(x, y))
}

/// Mirror image of `p` in the line `l`.
pub fn reflect(p: &Point, l: &Line) -> Point {
    let foot = l.foot(p);
    foot.scale(&Scalar::from(2)).sub(p)
}

/// Line through `p` perpendicular to `l`; its direction is `l`'s turned clockwise.
pub fn perpendicular_at(p: &Point, l: &Line) -> Line {
    let d = l.direction();
    let q = p.add(&Point::new(d.y.clone(), -&d.x));
    Line { p: p.clone(), q }
}

/// Twice the signed area; positive for counterclockwise order.
pub fn signed_area2(vertices: &[Point]) -> Scalar {
    let n = vertices.len();
    (0..n).fold(Scalar::zero(), |acc, i| {
        acc + vertices[i].cross(&vertices[(i + 1) % n])
    })
}
