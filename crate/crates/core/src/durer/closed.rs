use super::{FifteenPentagon, FigureId, ThirteenVariant, Variant};
use crate::geometry::{reflect, rotate, Line, Point};
use crate::numerics::{to_dms, DmsAngle, Scalar};
use crate::polygon::{normalize_to_convention, regular_polygon, VertexList};

fn half_pi() -> Scalar {
    Scalar::pi() / Scalar::from(2)
}

fn two_pi() -> Scalar {
    Scalar::from(2) * Scalar::pi()
}

/// Central angle of a chord of the unit circle, in radians.
fn chord_angle(chord: &Scalar) -> Scalar {
    Scalar::from(2) * (chord / &Scalar::from(2)).asin()
}

/// Angles of a chain of equal chords laid `left` times counterclockwise and
/// `right` times clockwise from the top, listed counterclockwise.
fn symmetric_chain(theta: &Scalar, left: usize, right: usize) -> Vec<Scalar> {
    let top = half_pi();
    let ccw = (0..=left).map(|k| &top + &(theta * &Scalar::from(k)));
    let cw = (1..=right).rev().map(|k| &top + &two_pi() - theta * Scalar::from(k));
    ccw.chain(cw).collect()
}

/// Inserts the midpoint of every arc between consecutive (increasing) angles,
/// including the arc that closes the circle.
fn bisect_arcs(angles: &[Scalar]) -> Vec<Scalar> {
    let n = angles.len();
    let mut out = Vec::with_capacity(2 * n);
    for i in 0..n {
        let next = if i + 1 == n { &angles[0] + &two_pi() } else { angles[i + 1].clone() };
        out.push(angles[i].clone());
        out.push((&angles[i] + &next) / Scalar::from(2));
    }
    out
}

fn on_circle(angles: &[Scalar], exact: bool) -> VertexList {
    let one = Scalar::one();
    VertexList::new(angles.iter().map(|t| Point::polar(&one, t)).collect(), exact)
}

fn heptagon_angles() -> Vec<Scalar> {
    let side = Scalar::from(3).sqrt() / Scalar::from(2);
    symmetric_chain(&chord_angle(&side), 3, 3)
}

/// Vertices `k, i, a, b, h` (counterclockwise) of the fixed-opening pentagon
/// in its construction frame `a = {0,0}`, `b = {1,0}`.
pub fn rusty_pentagon_frame() -> [Point; 5] {
    let theta = (Scalar::from(3).sqrt() * Scalar::from(15).to_radians().sin()).asin();
    let t = Scalar::pi() / Scalar::from(4) + theta;
    let (c, s) = (t.cos(), t.sin());
    let half = Scalar::from_ratio(1, 2);
    let ky = &s + &(Scalar::one() - (&c + &half).sqr()).sqrt();
    [
        Point::new(half, ky),
        Point::new(-&c, s.clone()),
        Point::origin(),
        Point::new(Scalar::one(), Scalar::zero()),
        Point::new(Scalar::one() + &c, s),
    ]
}

fn rusty_pentagon() -> VertexList {
    let raw = VertexList::new(rusty_pentagon_frame().to_vec(), false);
    normalize_to_convention(&raw).expect("five vertices").0
}

fn fifteen(variant: FifteenPentagon) -> VertexList {
    match variant {
        FifteenPentagon::Exact => regular_polygon(15),
        FifteenPentagon::Rusty => {
            // The pentagon side from b at the top lands at the direction of
            // the fixed-opening pentagon's next vertex instead of at 18°.
            let d = rusty_pentagon().vertices[4].angle();
            let c = -Scalar::from(30).to_radians();
            // |ec| subtends half of the arc from d down to c.
            let side_angle = (&d - &c) / Scalar::from(2);
            on_circle(&symmetric_chain(&side_angle, 7, 7), false)
        }
    }
}

/// The nine-gon vertices `e`, `f` and `p1` on the inner circle.
pub fn nine_gon_points() -> (Point, Point, Point) {
    // Inner circle r = 1 about the origin meets a bladder circle R = 3 whose
    // center is 3 away: 1/6 along the center direction, sqrt(35)/6 across.
    let p1 = Point::new(-(Scalar::from(35).sqrt() / Scalar::from(6)), -Scalar::from_ratio(1, 6));
    let f = rotate(&p1, &-(two_pi() / Scalar::from(3)), &Point::origin());
    let y_axis = Line { p: Point::origin(), q: Point::new(Scalar::zero(), Scalar::one()) };
    let e = reflect(&f, &y_axis);
    (e, f, p1)
}

fn nine_gon() -> VertexList {
    let (e, f, p1) = nine_gon_points();
    let bottom = Point::new(Scalar::zero(), -Scalar::one());
    let third = two_pi() / Scalar::from(3);
    let mut vertices = Vec::with_capacity(9);
    for p in [e, f, p1, bottom] {
        vertices.push(rotate(&p, &third, &Point::origin()));
        vertices.push(rotate(&p, &-&third, &Point::origin()));
        vertices.push(p);
    }
    // e, f and p1 are rotations of each other; keep one copy of each position.
    let mut unique: Vec<Point> = Vec::new();
    for v in vertices {
        if !unique.iter().any(|u| u.approx_eq(&v, &Scalar::eps(10))) {
            unique.push(v);
        }
    }
    let key = |p: &Point| {
        let a = p.angle();
        if a.is_negative() { a + two_pi() } else { a }
    };
    unique.sort_by(|a, b| key(a).partial_cmp(&key(b)).expect("finite angles"));
    VertexList::new(unique, false)
}

/// Edge of a 13-gon reading and the closing edge left over after twelve of them.
pub fn thirteen_gon_report(variant: ThirteenVariant) -> (Scalar, Scalar) {
    let (num, den) = variant.edge_ratio();
    let edge = Scalar::from_ratio(num, den);
    let theta = chord_angle(&edge);
    let rest = two_pi() - Scalar::from(12) * theta;
    let closing = Scalar::from(2) * (rest / Scalar::from(2)).sin();
    (edge, closing)
}

fn thirteen(variant: ThirteenVariant) -> VertexList {
    let (num, den) = variant.edge_ratio();
    on_circle(&symmetric_chain(&chord_angle(&Scalar::from_ratio(num, den)), 6, 6), false)
}

/// Interior angles of the fixed-opening pentagon: `alpha` at a and b,
/// `beta` at h and i, `gamma` at k.
#[derive(Clone, Debug, PartialEq)]
pub struct RustyAngles {
    pub alpha: DmsAngle,
    pub beta: DmsAngle,
    pub gamma: DmsAngle,
}

pub fn pentagon_rusty_angles() -> RustyAngles {
    let theta = (Scalar::from(3).sqrt() * Scalar::from(15).to_radians().sin()).asin();
    let alpha = Scalar::from(135) - theta.to_degrees();
    let [k, _, _, b, h] = rusty_pentagon_frame();
    let (u, w) = (b.sub(&h), k.sub(&h));
    let beta = u.cross(&w).abs().atan2(&u.dot(&w)).to_degrees();
    let gamma = Scalar::from(540) - Scalar::from(2) * &alpha - Scalar::from(2) * &beta;
    RustyAngles { alpha: to_dms(&alpha), beta: to_dms(&beta), gamma: to_dms(&gamma) }
}

pub(super) fn generate(fig: FigureId, variant: Variant) -> VertexList {
    match fig {
        FigureId::Hexagon9
        | FigureId::Triangle10
        | FigureId::Square13
        | FigureId::Octagon14
        | FigureId::Sixteen14
        | FigureId::PentagonExact15
        | FigureId::Decagon15 => regular_polygon(fig.sides()),
        FigureId::Heptagon11 => on_circle(&heptagon_angles(), false),
        FigureId::Fourteen12 => on_circle(&bisect_arcs(&heptagon_angles()), false),
        FigureId::TwentyEight12 => on_circle(&bisect_arcs(&bisect_arcs(&heptagon_angles())), false),
        FigureId::PentagonRusty16 => rusty_pentagon(),
        FigureId::Fifteen17 => fifteen(variant.fifteen.unwrap_or_default()),
        FigureId::Nine18 => nine_gon(),
        FigureId::Eleven19 => on_circle(&symmetric_chain(&chord_angle(&Scalar::from_ratio(9, 16)), 5, 5), false),
        FigureId::Thirteen19 => thirteen(variant.thirteen.unwrap_or_default()),
    }
}
