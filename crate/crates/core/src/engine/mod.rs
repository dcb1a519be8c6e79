//! Construction scripts: named steps, intersection selectors, validation,
//! execution into a registry, macro expansion and rusty-compass checks.

mod exec;
mod expand;

use std::collections::HashMap;
use std::fmt;

pub use exec::{execute, validate_rusty, ExecError, ExecErrorKind, Object, PointRegistry, RustyViolation};
pub use expand::expand_macros;

use crate::numerics::parse_rational;

pub type Name = String;

/// Rule that picks one of two intersection candidates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Selector {
    Upper,
    Lower,
    Left,
    Right,
    Near(Name),
    Far(Name),
    First,
    Second,
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::Upper => f.write_str("upper"),
            Selector::Lower => f.write_str("lower"),
            Selector::Left => f.write_str("left"),
            Selector::Right => f.write_str("right"),
            Selector::Near(p) => write!(f, "near {p}"),
            Selector::Far(p) => write!(f, "far {p}"),
            Selector::First => f.write_str("first"),
            Selector::Second => f.write_str("second"),
        }
    }
}

/// Which of the two trisection points of a segment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TrisectPart {
    /// One third of the way from the first endpoint.
    One,
    /// Two thirds of the way from the first endpoint.
    Two,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum StepKind {
    /// Fixed point; coordinates are decimal or `p/q` literals.
    Given { x: String, y: String },
    Line { a: Name, b: Name },
    /// Circle about `center` through `through`.
    Circle { center: Name, through: Name },
    /// Circle about `center` with the compass opened to `|from to|`.
    CircleDist { center: Name, from: Name, to: Name },
    Intersect { a: Name, b: Name, pick: Option<Selector> },
    Midpoint { a: Name, b: Name },
    Trisect { a: Name, b: Name, part: TrisectPart },
    /// Line through `point` perpendicular to `line`.
    Perp { point: Name, line: Name },
    /// Foot of the perpendicular from `point` to `line`.
    PerpFoot { point: Name, line: Name },
    /// `point` turned counterclockwise by a multiple of 30 degrees about `center`.
    Rotate { point: Name, degrees: i32, center: Name },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObjectKind {
    Point,
    Line,
    Circle,
}

impl fmt::Display for ObjectKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ObjectKind::Point => "point",
            ObjectKind::Line => "line",
            ObjectKind::Circle => "circle",
        })
    }
}

impl StepKind {
    pub fn output_kind(&self) -> ObjectKind {
        match self {
            StepKind::Line { .. } | StepKind::Perp { .. } => ObjectKind::Line,
            StepKind::Circle { .. } | StepKind::CircleDist { .. } => ObjectKind::Circle,
            _ => ObjectKind::Point,
        }
    }

    pub fn is_macro(&self) -> bool {
        matches!(
            self,
            StepKind::Midpoint { .. }
                | StepKind::Trisect { .. }
                | StepKind::Perp { .. }
                | StepKind::PerpFoot { .. }
                | StepKind::Rotate { .. }
        )
    }

    /// Referenced names with the kind each must have; `None` accepts a line or a circle.
    fn inputs(&self) -> Vec<(&Name, Option<ObjectKind>)> {
        use ObjectKind::*;
        match self {
            StepKind::Given { .. } => vec![],
            StepKind::Line { a, b } | StepKind::Midpoint { a, b } | StepKind::Trisect { a, b, .. } => {
                vec![(a, Some(Point)), (b, Some(Point))]
            }
            StepKind::Circle { center, through } => vec![(center, Some(Point)), (through, Some(Point))],
            StepKind::CircleDist { center, from, to } => {
                vec![(center, Some(Point)), (from, Some(Point)), (to, Some(Point))]
            }
            StepKind::Intersect { a, b, pick } => {
                let mut v = vec![(a, None), (b, None)];
                if let Some(Selector::Near(p) | Selector::Far(p)) = pick {
                    v.push((p, Some(Point)));
                }
                v
            }
            StepKind::Perp { point, line } | StepKind::PerpFoot { point, line } => {
                vec![(point, Some(Point)), (line, Some(Line))]
            }
            StepKind::Rotate { point, center, .. } => vec![(point, Some(Point)), (center, Some(Point))],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub output: Name,
    pub kind: StepKind,
    /// Output name of the macro this step was expanded from.
    pub provenance: Option<Name>,
}

impl Step {
    pub fn new(output: impl Into<Name>, kind: StepKind) -> Self {
        Step {
            output: output.into(),
            kind,
            provenance: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ConstructionScript {
    pub steps: Vec<Step>,
    /// Every circle must use the opening of the first one.
    pub rusty: bool,
    /// Names of the polygon vertices the script constructs, in order.
    pub polygon: Option<Vec<Name>>,
}

impl ConstructionScript {
    pub fn new(steps: Vec<Step>) -> Self {
        ConstructionScript {
            steps,
            rusty: false,
            polygon: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("step {step} (`{output}`): {kind}")]
pub struct ValidationError {
    /// Zero-based index of the offending step; `None` for script-level problems.
    pub step: usize,
    pub output: Name,
    pub kind: ValidationErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ValidationErrorKind {
    #[error("`{0}` is not defined by an earlier step")]
    Undefined(Name),
    #[error("`{0}` is already defined")]
    Duplicate(Name),
    #[error("`{name}` is a {found}, expected a {expected}")]
    KindMismatch {
        name: Name,
        expected: ObjectKind,
        found: ObjectKind,
    },
    #[error("`{0}` is a point; intersect needs lines or circles")]
    NotACurve(Name),
    #[error("intersection has two candidates; add `pick <selector>`")]
    MissingPick,
    #[error("two lines meet in a single point; remove the selector")]
    UnneededPick,
    #[error("invalid coordinate literal `{0}`")]
    Literal(String),
    #[error("rotation must be a non-zero multiple of 30 degrees below 360, got {0}")]
    Angle(i32),
    #[error("an object cannot be intersected with itself")]
    SelfIntersection,
    #[error("polygon vertex `{0}` is not a constructed point")]
    PolygonVertex(Name),
}

/// Checks naming, ordering and kinds without evaluating any geometry.
pub fn validate(script: &ConstructionScript) -> Result<(), ValidationError> {
    let mut kinds: HashMap<&str, ObjectKind> = HashMap::new();
    for (i, step) in script.steps.iter().enumerate() {
        let fail = |kind| ValidationError {
            step: i,
            output: step.output.clone(),
            kind,
        };
        for (name, expected) in step.kind.inputs() {
            let found = *kinds
                .get(name.as_str())
                .ok_or_else(|| fail(ValidationErrorKind::Undefined(name.clone())))?;
            match expected {
                Some(expected) if expected != found => {
                    return Err(fail(ValidationErrorKind::KindMismatch {
                        name: name.clone(),
                        expected,
                        found,
                    }))
                }
                None if found == ObjectKind::Point => {
                    return Err(fail(ValidationErrorKind::NotACurve(name.clone())))
                }
                _ => {}
            }
        }
        match &step.kind {
            StepKind::Given { x, y } => {
                for lit in [x, y] {
                    if parse_rational(lit).is_none() {
                        return Err(fail(ValidationErrorKind::Literal(lit.clone())));
                    }
                }
            }
            StepKind::Intersect { a, b, pick } => {
                if a == b {
                    return Err(fail(ValidationErrorKind::SelfIntersection));
                }
                let both_lines = kinds[a.as_str()] == ObjectKind::Line && kinds[b.as_str()] == ObjectKind::Line;
                match (both_lines, pick.is_some()) {
                    (true, true) => return Err(fail(ValidationErrorKind::UnneededPick)),
                    (false, false) => return Err(fail(ValidationErrorKind::MissingPick)),
                    _ => {}
                }
            }
            StepKind::Rotate { degrees, .. } => {
                if *degrees == 0 || degrees % 30 != 0 || degrees.abs() >= 360 {
                    return Err(fail(ValidationErrorKind::Angle(*degrees)));
                }
            }
            _ => {}
        }
        if kinds.insert(step.output.as_str(), step.kind.output_kind()).is_some() {
            return Err(fail(ValidationErrorKind::Duplicate(step.output.clone())));
        }
    }
    if let Some(vertices) = &script.polygon {
        for v in vertices {
            if kinds.get(v.as_str()) != Some(&ObjectKind::Point) {
                return Err(ValidationError {
                    step: script.steps.len(),
                    output: v.clone(),
                    kind: ValidationErrorKind::PolygonVertex(v.clone()),
                });
            }
        }
    }
    Ok(())
}

/// Small builders used by the built-in scripts and tests.
pub mod build {
    use super::*;

    pub fn given(out: &str, x: &str, y: &str) -> Step {
        Step::new(out, StepKind::Given { x: x.into(), y: y.into() })
    }

    pub fn line(out: &str, a: &str, b: &str) -> Step {
        Step::new(out, StepKind::Line { a: a.into(), b: b.into() })
    }

    pub fn circle(out: &str, center: &str, through: &str) -> Step {
        Step::new(out, StepKind::Circle { center: center.into(), through: through.into() })
    }

    pub fn circle_dist(out: &str, center: &str, from: &str, to: &str) -> Step {
        Step::new(
            out,
            StepKind::CircleDist { center: center.into(), from: from.into(), to: to.into() },
        )
    }

    pub fn intersect(out: &str, a: &str, b: &str, pick: Option<Selector>) -> Step {
        Step::new(out, StepKind::Intersect { a: a.into(), b: b.into(), pick })
    }

    pub fn midpoint(out: &str, a: &str, b: &str) -> Step {
        Step::new(out, StepKind::Midpoint { a: a.into(), b: b.into() })
    }

    pub fn trisect(out: &str, a: &str, b: &str, part: TrisectPart) -> Step {
        Step::new(out, StepKind::Trisect { a: a.into(), b: b.into(), part })
    }

    pub fn perp(out: &str, point: &str, line: &str) -> Step {
        Step::new(out, StepKind::Perp { point: point.into(), line: line.into() })
    }

    pub fn perp_foot(out: &str, point: &str, line: &str) -> Step {
        Step::new(out, StepKind::PerpFoot { point: point.into(), line: line.into() })
    }

    pub fn rotate(out: &str, point: &str, degrees: i32, center: &str) -> Step {
        Step::new(
            out,
            StepKind::Rotate { point: point.into(), degrees, center: center.into() },
        )
    }
}

#[cfg(test)]
mod tests {
    use super::build::*;
    use super::*;

    fn vesica() -> Vec<Step> {
        vec![
            given("a", "0", "0"),
            given("b", "1", "0"),
            circle("c1", "a", "b"),
            circle("c2", "b", "a"),
        ]
    }

    fn kind_of(steps: Vec<Step>) -> ValidationErrorKind {
        validate(&ConstructionScript::new(steps)).unwrap_err().kind
    }

    #[test]
    fn accepts_valid_script() {
        let mut steps = vesica();
        steps.push(intersect("c", "c1", "c2", Some(Selector::Upper)));
        assert!(validate(&ConstructionScript::new(steps)).is_ok());
        assert!(validate(&ConstructionScript::default()).is_ok());
    }

    #[test]
    fn rejects_bad_references() {
        let mut steps = vesica();
        steps.remove(1);
        assert_eq!(kind_of(steps), ValidationErrorKind::Undefined("b".into()));
        let mut steps = vesica();
        steps.push(given("a", "2", "2"));
        assert_eq!(kind_of(steps), ValidationErrorKind::Duplicate("a".into()));
        let mut steps = vesica();
        steps.push(line("l", "a", "c1"));
        assert!(matches!(kind_of(steps), ValidationErrorKind::KindMismatch { .. }));
        let mut steps = vesica();
        steps.push(intersect("x", "a", "c1", Some(Selector::First)));
        assert_eq!(kind_of(steps), ValidationErrorKind::NotACurve("a".into()));
    }

    #[test]
    fn selector_rules() {
        let mut steps = vesica();
        steps.push(intersect("x", "c1", "c2", None));
        assert_eq!(kind_of(steps), ValidationErrorKind::MissingPick);
        let mut steps = vesica();
        steps.push(line("l1", "a", "b"));
        steps.push(perp("l2", "a", "l1"));
        steps.push(intersect("x", "l1", "l2", Some(Selector::Upper)));
        assert_eq!(kind_of(steps), ValidationErrorKind::UnneededPick);
        let mut steps = vesica();
        steps.push(intersect("x", "c1", "c2", Some(Selector::Near("zz".into()))));
        assert_eq!(kind_of(steps), ValidationErrorKind::Undefined("zz".into()));
    }

    #[test]
    fn literal_and_angle_rules() {
        assert_eq!(kind_of(vec![given("a", "1/0", "0")]), ValidationErrorKind::Literal("1/0".into()));
        let mut steps = vesica();
        steps.push(rotate("r", "b", 45, "a"));
        assert_eq!(kind_of(steps), ValidationErrorKind::Angle(45));
    }

    #[test]
    fn polygon_names_must_be_points() {
        let mut script = ConstructionScript::new(vesica());
        script.polygon = Some(vec!["a".into(), "c1".into()]);
        assert_eq!(
            validate(&script).unwrap_err().kind,
            ValidationErrorKind::PolygonVertex("c1".into())
        );
    }
}
