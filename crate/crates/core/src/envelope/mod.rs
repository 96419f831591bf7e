//! Universal enveloping presentations, degree-bounded noncommutative
//! rewriting, Hilbert-series verification and Newton's identities.

mod enveloping;
mod newton;
mod presentation;
mod rewrite;
mod word;

pub use enveloping::{enveloping, enveloping_raw, graded_commutativity_holds, pbw_series};
pub use newton::{
    formal_symbols, newton_sigma_from_y, newton_y_from_sigma, BasisKind, NewtonEntry,
    SymmetricFunctionVector,
};
pub use presentation::{
    compare_presentations, rank_compare, verify_presentation, CoefficientRing, Elimination,
    GoldenComparison, NCPresentation, SeriesComparison, Verdict,
};
pub use rewrite::RewriteSystem;
pub use word::{parse_nc, Alphabet, AlphabetRef, NcPoly, Word};

pub use crate::catalog::integral_presentation;
