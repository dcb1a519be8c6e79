//! Arbitrary-precision compass-and-straightedge constructions.
//!
//! The crate executes construction scripts over [`numerics::Scalar`] values,
//! ships closed-form and scripted versions of Dürer's polygon constructions,
//! his approximate angle trisection, Richmond's exact constructions and
//! analysis helpers that compare any polygon against the regular one.

pub mod numerics;
pub mod geometry;
pub mod engine;
pub mod lang;
pub mod polygon;
pub mod durer;
pub mod trisection;
pub mod modern;
pub mod analysis;

pub use analysis::{compare_to_regular, report, AnalysisError, PolygonReport};
pub use durer::{durer_polygon, run_figure_script, DurerError, FifteenPentagon, FigureId, ThirteenVariant, Variant};
pub use engine::{execute, ConstructionScript, ExecError, PointRegistry};
pub use geometry::{Circle, GeometryError, Line, Point};
pub use lang::{parse, serialize, Diagnostic};
pub use modern::{is_constructible, ConstructibilityVerdict};
pub use numerics::{to_dms, with_digits, DmsAngle, NumericsError, Scalar};
pub use polygon::{normalize_to_convention, VertexList};
pub use trisection::{trisect, trisect_at, TrisectionTrace};
