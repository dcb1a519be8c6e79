//! The `.geo` text format for construction scripts.
//!
//! ```text
//! #! rusty
//! given a = (0, 0)
//! given b = (1, 0)
//! circle c1 = circle(a, b)
//! circle c2 = circle(b, a)
//! point c = intersect(c1, c2) pick upper
//! ```
//!
//! `#` starts a comment. `#! rusty` and `#! polygon <names>` set script flags,
//! and a trailing `# from macro <name>` records the step's provenance.

mod lexer;
mod parser;

use std::fmt::{self, Write as _};

pub use parser::{parse, parse_source, SourceScript, Span};

use crate::engine::{ConstructionScript, Step, StepKind, TrisectPart, ValidationErrorKind};

/// A parse or validation problem located in the source text (1-based).
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub kind: DiagnosticKind,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DiagnosticKind {
    #[error("{0}")]
    Syntax(String),
    #[error("bare number `{0}` is only allowed in `given` points; lengths must be distances between points")]
    BareNumber(String),
    #[error(transparent)]
    Invalid(#[from] ValidationErrorKind),
}

fn write_step(out: &mut String, step: &Step) -> fmt::Result {
    match &step.kind {
        StepKind::Given { x, y } => write!(out, "given {} = ({x}, {y})", step.output),
        StepKind::Line { a, b } => write!(out, "line {} = line({a}, {b})", step.output),
        StepKind::Perp { point, line } => write!(out, "line {} = perp({point}, {line})", step.output),
        StepKind::Circle { center, through } => {
            write!(out, "circle {} = circle({center}, {through})", step.output)
        }
        StepKind::CircleDist { center, from, to } => {
            write!(out, "circle {} = circle({center}, dist({from}, {to}))", step.output)
        }
        StepKind::Intersect { a, b, pick } => {
            write!(out, "point {} = intersect({a}, {b})", step.output)?;
            match pick {
                Some(sel) => write!(out, " pick {sel}"),
                None => Ok(()),
            }
        }
        StepKind::Midpoint { a, b } => write!(out, "point {} = midpoint({a}, {b})", step.output),
        StepKind::Trisect { a, b, part } => {
            let k = match part {
                TrisectPart::One => 1,
                TrisectPart::Two => 2,
            };
            write!(out, "point {} = trisect3({a}, {b}).{k}", step.output)
        }
        StepKind::PerpFoot { point, line } => {
            write!(out, "point {} = perp_foot({point}, {line})", step.output)
        }
        StepKind::Rotate { point, degrees, center } => {
            write!(out, "point {} = rotate({point}, {degrees}, {center})", step.output)
        }
    }?;
    if let Some(p) = &step.provenance {
        write!(out, " # from macro {p}")?;
    }
    out.push('\n');
    Ok(())
}

/// Canonical text: pragmas first, then one statement per line.
pub fn serialize(script: &ConstructionScript) -> String {
    let mut out = String::new();
    if script.rusty {
        out.push_str("#! rusty\n");
    }
    if let Some(names) = &script.polygon {
        out.push_str("#! polygon");
        for n in names {
            out.push(' ');
            out.push_str(n);
        }
        out.push('\n');
    }
    for step in &script.steps {
        write_step(&mut out, step).expect("writing to a String");
    }
    out
}
