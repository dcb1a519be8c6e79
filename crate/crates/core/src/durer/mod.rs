//! Dürer's polygon constructions: closed-form vertex generators, the shipped
//! `.geo` scripts and the numbers used in their error analysis.

mod closed;
mod figure;

pub use closed::{nine_gon_points, pentagon_rusty_angles, rusty_pentagon_frame, thirteen_gon_report, RustyAngles};
pub use figure::{FifteenPentagon, FigureId, ThirteenVariant, UnknownName};

use crate::engine::{execute, ExecError, PointRegistry};
use crate::lang::{parse, Diagnostic};
use crate::polygon::{normalize_to_convention, Similarity, VertexList};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DurerError {
    #[error("variant options only apply to {0}")]
    VariantMisuse(&'static str),
    #[error("built-in script for {figure} does not parse: {source}")]
    Script { figure: FigureId, source: Diagnostic },
    #[error("built-in script for {figure} failed: {source}")]
    Exec { figure: FigureId, source: ExecError },
    #[error("built-in script for {0} has no `#! polygon` line")]
    NoPolygon(FigureId),
}

/// Options accepted by [`durer_polygon`]; each applies to one figure only.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Variant {
    pub thirteen: Option<ThirteenVariant>,
    pub fifteen: Option<FifteenPentagon>,
}

/// Vertices of a figure in the standard frame, counterclockwise from the top
/// vertex. The nine-gon keeps the frame of its fish-bladder construction.
pub fn durer_polygon(fig: FigureId, variant: Variant) -> Result<VertexList, DurerError> {
    if variant.thirteen.is_some() && fig != FigureId::Thirteen19 {
        return Err(DurerError::VariantMisuse("thirteen-19"));
    }
    if variant.fifteen.is_some() && fig != FigureId::Fifteen17 {
        return Err(DurerError::VariantMisuse("fifteen-17"));
    }
    Ok(closed::generate(fig, variant))
}

/// A built-in script run to completion, with its polygon in both frames.
#[derive(Clone, Debug)]
pub struct ScriptedFigure {
    pub registry: PointRegistry,
    /// Vertices in the script's own coordinates.
    pub raw: VertexList,
    /// Vertices in the frame of [`durer_polygon`].
    pub normalized: VertexList,
    /// Maps script coordinates into the normalized frame.
    pub transform: Similarity,
}

/// Parses and executes the figure's shipped `.geo` script.
pub fn run_figure_script(fig: FigureId) -> Result<ScriptedFigure, DurerError> {
    let script = parse(fig.script()).map_err(|source| DurerError::Script { figure: fig, source })?;
    let names = script.polygon.clone().ok_or(DurerError::NoPolygon(fig))?;
    let registry = execute(&script).map_err(|source| DurerError::Exec { figure: fig, source })?;
    let vertices = names
        .iter()
        .map(|n| registry.point(n).expect("validated polygon names").clone())
        .collect();
    let raw = VertexList::new(vertices, fig.exact_regular());
    let (normalized, transform) = if fig == FigureId::Nine18 {
        (raw.counterclockwise(), Similarity::identity())
    } else {
        normalize_to_convention(&raw).expect("figures have at least 3 vertices")
    };
    Ok(ScriptedFigure { registry, raw, normalized, transform })
}
