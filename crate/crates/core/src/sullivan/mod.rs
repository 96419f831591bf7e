//! Minimal models of formal presentations, the quadratic part of the
//! differential, and the homotopy Lie algebra read off through the
//! suspension pairing.

mod lie;
mod model;
mod presentation;

pub(crate) use lie::format_combination;
pub use lie::{default_lie_names, homotopy_lie, homotopy_lie_named, LieAlgebraData, LieVector};
pub use model::{build_formal_model, GeneratorKind, ModelFragment};
pub use presentation::CohomPresentation;
