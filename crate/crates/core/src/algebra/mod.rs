//! Graded commutative polynomial algebra over exact rationals, substitution
//! homomorphisms and Hilbert series.

mod expr;
mod generator;
mod poly;
mod series;

pub use expr::{parse_expr, parse_polynomial, Expr, ExprRing};
pub use generator::{ensure_unique, GradedGenerator, Parity, VarContext, Vars};
pub use poly::{substitute, Monomial, Polynomial, SubstitutionMode};
pub use series::{complete_intersection_series, free_graded_series, HilbertSeries};
