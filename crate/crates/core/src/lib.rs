//! Rational homotopy toolkit for loop spaces on formal homogeneous spaces.
//!
//! Starting from a cohomology presentation `Q[x]/(regular sequence) ⊗ Λ(z)`,
//! the crate builds the minimal model, reads off the homotopy Lie algebra
//! from the quadratic part of the differential, and presents the Pontrjagin
//! ring of the loop space as its universal enveloping algebra. Every
//! presentation is checked against an independent Hilbert-series count.

pub mod algebra;
pub mod catalog;
pub mod envelope;
mod error;
pub mod ideal;
pub mod pipeline;
pub mod sullivan;

pub use error::{Error, Result};

/// Exact rational coefficients.
pub type Rational = num::BigRational;

pub(crate) fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
