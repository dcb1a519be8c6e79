use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::{validate, ConstructionScript, Name, Selector, Step, StepKind, TrisectPart, ValidationErrorKind};
use crate::geometry::{
    distance, intersect_circle_circle, intersect_line_circle, intersect_line_line, perpendicular_at, rotate,
    Circle, GeometryError, Line, Point,
};
use crate::numerics::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub enum Object {
    Point(Point),
    Line(Line),
    Circle(Circle),
}

impl Object {
    pub fn as_point(&self) -> Option<&Point> {
        match self {
            Object::Point(p) => Some(p),
            _ => None,
        }
    }

    /// Geometric equality: lines compare as point sets, not by defining points.
    pub fn approx_eq(&self, other: &Object, tol: &Scalar) -> bool {
        match (self, other) {
            (Object::Point(a), Object::Point(b)) => a.approx_eq(b, tol),
            (Object::Circle(a), Object::Circle(b)) => {
                a.center.approx_eq(&b.center, tol) && (&a.radius - &b.radius).abs() <= *tol
            }
            (Object::Line(a), Object::Line(b)) => a.distance_to(&b.p) <= *tol && a.distance_to(&b.q) <= *tol,
            _ => false,
        }
    }

    fn describe(&self) -> String {
        match self {
            Object::Point(p) => format!("point({}, {})", p.x, p.y),
            Object::Line(l) => format!("line(({}, {}), ({}, {}))", l.p.x, l.p.y, l.q.x, l.q.y),
            Object::Circle(c) => format!("circle(({}, {}), {})", c.center.x, c.center.y, c.radius),
        }
    }
}

impl Serialize for Object {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut m = serializer.serialize_map(None)?;
        match self {
            Object::Point(p) => {
                m.serialize_entry("kind", "point")?;
                m.serialize_entry("x", &p.x.to_string())?;
                m.serialize_entry("y", &p.y.to_string())?;
            }
            Object::Line(l) => {
                m.serialize_entry("kind", "line")?;
                m.serialize_entry("p", &l.p)?;
                m.serialize_entry("q", &l.q)?;
            }
            Object::Circle(c) => {
                m.serialize_entry("kind", "circle")?;
                m.serialize_entry("center", &c.center)?;
                m.serialize_entry("radius", &c.radius.to_string())?;
            }
        }
        m.end()
    }
}

/// Objects produced by executing a script, keyed by step output name.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PointRegistry {
    objects: BTreeMap<Name, Object>,
}

impl PointRegistry {
    pub fn get(&self, name: &str) -> Option<&Object> {
        self.objects.get(name)
    }

    pub fn point(&self, name: &str) -> Option<&Point> {
        self.get(name).and_then(Object::as_point)
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// Entries in lexicographic name order.
    pub fn iter(&self) -> impl Iterator<Item = (&Name, &Object)> {
        self.objects.iter()
    }

    pub fn points(&self) -> impl Iterator<Item = (&Name, &Point)> {
        self.objects.iter().filter_map(|(n, o)| o.as_point().map(|p| (n, p)))
    }

    /// Stable text form: one `name = object` line per entry, sorted by name.
    pub fn to_text(&self) -> String {
        self.objects
            .iter()
            .map(|(name, obj)| format!("{name} = {}\n", obj.describe()))
            .collect()
    }
}

impl Serialize for PointRegistry {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.objects.serialize(serializer)
    }
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
#[error("step {step} (`{output}`): {kind}")]
pub struct ExecError {
    pub step: usize,
    pub output: Name,
    pub kind: ExecErrorKind,
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum ExecErrorKind {
    #[error(transparent)]
    Invalid(#[from] ValidationErrorKind),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("selector `{0}` cannot distinguish the two candidates")]
    Ambiguous(Selector),
}

fn choose(a: Point, b: Point, pick: &Selector, reg: &PointRegistry) -> Result<Point, ExecErrorKind> {
    // For each selector: the key to compare and whether the larger key wins.
    let (ka, kb, larger) = match pick {
        Selector::First => return Ok(a),
        Selector::Second => return Ok(b),
        Selector::Upper => (a.y.clone(), b.y.clone(), true),
        Selector::Lower => (a.y.clone(), b.y.clone(), false),
        Selector::Left => (a.x.clone(), b.x.clone(), false),
        Selector::Right => (a.x.clone(), b.x.clone(), true),
        Selector::Near(p) | Selector::Far(p) => {
            let r = reg.point(p).expect("validated reference");
            (distance(&a, r), distance(&b, r), matches!(pick, Selector::Far(_)))
        }
    };
    if (&ka - &kb).abs() <= Scalar::eps(10) {
        return Err(ExecErrorKind::Ambiguous(pick.clone()));
    }
    Ok(if (ka > kb) == larger { a } else { b })
}

fn point<'r>(reg: &'r PointRegistry, name: &str) -> &'r Point {
    reg.point(name).expect("validated point reference")
}

fn line_of<'r>(reg: &'r PointRegistry, name: &str) -> &'r Line {
    match reg.get(name) {
        Some(Object::Line(l)) => l,
        _ => unreachable!("validated line reference"),
    }
}

fn eval(step: &Step, reg: &PointRegistry) -> Result<Object, ExecErrorKind> {
    let obj = match &step.kind {
        StepKind::Given { x, y } => {
            let x = Scalar::parse(x).map_err(|_| ValidationErrorKind::Literal(x.clone()))?;
            let y = Scalar::parse(y).map_err(|_| ValidationErrorKind::Literal(y.clone()))?;
            Object::Point(Point::new(x, y))
        }
        StepKind::Line { a, b } => Object::Line(Line::new(point(reg, a).clone(), point(reg, b).clone())?),
        StepKind::Circle { center, through } => {
            Object::Circle(Circle::through(point(reg, center).clone(), point(reg, through))?)
        }
        StepKind::CircleDist { center, from, to } => {
            let r = distance(point(reg, from), point(reg, to));
            Object::Circle(Circle::new(point(reg, center).clone(), r)?)
        }
        StepKind::Intersect { a, b, pick } => {
            let oa = reg.get(a).expect("validated");
            let ob = reg.get(b).expect("validated");
            let pair = match (oa, ob) {
                (Object::Line(l1), Object::Line(l2)) => return Ok(Object::Point(intersect_line_line(l1, l2)?)),
                (Object::Circle(c1), Object::Circle(c2)) => intersect_circle_circle(c1, c2)?,
                (Object::Line(l), Object::Circle(c)) | (Object::Circle(c), Object::Line(l)) => {
                    intersect_line_circle(l, c)?
                }
                _ => unreachable!("validated curve references"),
            };
            let pick = pick.as_ref().expect("validated selector");
            Object::Point(choose(pair.0, pair.1, pick, reg)?)
        }
        StepKind::Midpoint { a, b } => Object::Point(point(reg, a).midpoint(point(reg, b))),
        StepKind::Trisect { a, b, part } => {
            let t = match part {
                TrisectPart::One => Scalar::from_ratio(1, 3),
                TrisectPart::Two => Scalar::from_ratio(2, 3),
            };
            Object::Point(point(reg, a).lerp(point(reg, b), &t))
        }
        StepKind::Perp { point: p, line } => Object::Line(perpendicular_at(point(reg, p), line_of(reg, line))),
        StepKind::PerpFoot { point: p, line } => Object::Point(line_of(reg, line).foot(point(reg, p))),
        StepKind::Rotate { point: p, degrees, center } => {
            let theta = Scalar::from(*degrees).to_radians();
            Object::Point(rotate(point(reg, p), &theta, point(reg, center)))
        }
    };
    Ok(obj)
}

/// Runs every step in order. Macros are evaluated directly in closed form;
/// run [`super::expand_macros`] first to execute them compass-step by compass-step.
pub fn execute(script: &ConstructionScript) -> Result<PointRegistry, ExecError> {
    validate(script).map_err(|e| ExecError {
        step: e.step,
        output: e.output,
        kind: ExecErrorKind::Invalid(e.kind),
    })?;
    let mut reg = PointRegistry::default();
    for (i, step) in script.steps.iter().enumerate() {
        let obj = eval(step, &reg).map_err(|kind| ExecError {
            step: i,
            output: step.output.clone(),
            kind,
        })?;
        reg.objects.insert(step.output.clone(), obj);
    }
    Ok(reg)
}

/// A circle whose radius differs from the first circle's.
#[derive(Clone, Debug, PartialEq)]
pub struct RustyViolation {
    /// Index in the macro-expanded script.
    pub step: usize,
    pub circle: Name,
    pub provenance: Option<Name>,
    pub radius: Scalar,
    pub expected: Scalar,
}

/// Lists every circle, after macro expansion, whose radius departs from the
/// first circle's by more than `10^-(P-10)`.
pub fn validate_rusty(script: &ConstructionScript) -> Result<Vec<RustyViolation>, ExecError> {
    let expanded = super::expand_macros(script);
    let reg = execute(&expanded)?;
    let mut expected: Option<Scalar> = None;
    let mut violations = Vec::new();
    for (i, step) in expanded.steps.iter().enumerate() {
        let Some(Object::Circle(c)) = reg.get(&step.output) else {
            continue;
        };
        let Some(r0) = &expected else {
            expected = Some(c.radius.clone());
            continue;
        };
        let tol = Scalar::eps(10) * Scalar::one().max(r0.clone());
        if (&c.radius - r0).abs() > tol {
            violations.push(RustyViolation {
                step: i,
                circle: step.output.clone(),
                provenance: step.provenance.clone(),
                radius: c.radius.clone(),
                expected: r0.clone(),
            });
        }
    }
    Ok(violations)
}

#[cfg(test)]
mod tests {
    use super::super::build::*;
    use super::*;

    fn vesica(pick: Selector) -> ConstructionScript {
        ConstructionScript::new(vec![
            given("a", "0", "0"),
            given("b", "1", "0"),
            circle("c1", "a", "b"),
            circle("c2", "b", "a"),
            intersect("c", "c1", "c2", Some(pick)),
        ])
    }

    fn close(p: &Point, x: &Scalar, y: &Scalar) -> bool {
        p.approx_eq(&Point::new(x.clone(), y.clone()), &Scalar::eps(6))
    }

    #[test]
    fn vesica_tip() {
        let reg = execute(&vesica(Selector::Upper)).unwrap();
        let h = Scalar::from(3).sqrt() / Scalar::from(2);
        assert!(close(reg.point("c").unwrap(), &Scalar::from_ratio(1, 2), &h));
        let reg = execute(&vesica(Selector::Near("a".into())));
        assert!(matches!(
            reg.unwrap_err().kind,
            ExecErrorKind::Ambiguous(Selector::Near(_))
        ));
        let reg = execute(&vesica(Selector::Second)).unwrap();
        assert!(close(reg.point("c").unwrap(), &Scalar::from_ratio(1, 2), &-h));
    }

    #[test]
    fn empty_script() {
        assert!(execute(&ConstructionScript::default()).unwrap().is_empty());
    }

    #[test]
    fn geometry_failures_name_the_step() {
        let script = ConstructionScript::new(vec![
            given("a", "0", "0"),
            given("b", "1", "0"),
            given("c", "3", "0"),
            circle("c1", "a", "b"),
            circle("c2", "c", "b"),
            intersect("x", "c1", "c2", Some(Selector::Upper)),
        ]);
        let err = execute(&script).unwrap_err();
        assert_eq!(err.step, 5);
        assert_eq!(err.output, "x");
        assert_eq!(err.kind, ExecErrorKind::Geometry(GeometryError::Tangency));
    }

    #[test]
    fn registry_text_is_sorted() {
        let text = execute(&vesica(Selector::Upper)).unwrap().to_text();
        let names: Vec<&str> = text.lines().map(|l| l.split(' ').next().unwrap()).collect();
        assert_eq!(names, ["a", "b", "c", "c1", "c2"]);
        assert!(text.contains("c = point(0.5, 0.8660254037844386467637232)"));
    }

    #[test]
    fn rusty_single_opening() {
        assert!(validate_rusty(&vesica(Selector::Upper)).unwrap().is_empty());
        let mut script = vesica(Selector::Upper);
        script.steps.push(circle("c3", "a", "c"));
        script.steps.push(given("z", "2", "0"));
        script.steps.push(circle("c4", "a", "z"));
        let v = validate_rusty(&script).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].circle, "c4");
    }
}
