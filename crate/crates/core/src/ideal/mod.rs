//! Commutative Gröbner bases, ideal membership, regular-sequence detection
//! and Cartan-pair reduction.

mod cartan;
mod groebner;

pub use cartan::{cartan_reduce, CartanReduction};
pub use groebner::{
    groebner_basis, groebner_basis_truncated, is_member, leading_monomial, IdealBasis,
    MonomialOrder,
};

use crate::algebra::{complete_intersection_series, GradedGenerator, Polynomial, Vars};
use crate::{Error, Result};

/// Default bound for the Hilbert-series regularity test: the sum of the
/// relation degrees plus the largest generator degree.
pub fn default_regularity_bound(seq: &[Polynomial], ambient: &[GradedGenerator]) -> u32 {
    let rel: u32 = seq.iter().filter_map(Polynomial::degree).sum();
    rel + ambient
        .iter()
        .map(GradedGenerator::degree)
        .max()
        .unwrap_or(0)
}

/// Hilbert-series criterion: `seq` is regular iff the quotient has the
/// complete-intersection series (compared up to the default bound).
pub fn is_regular_sequence(seq: &[Polynomial], ambient: &[GradedGenerator]) -> Result<bool> {
    is_regular_sequence_to(seq, ambient, default_regularity_bound(seq, ambient))
}

pub fn is_regular_sequence_to(
    seq: &[Polynomial],
    ambient: &[GradedGenerator],
    bound: u32,
) -> Result<bool> {
    let vars = Vars::new(ambient.to_vec())?;
    let mut rel_degrees = Vec::with_capacity(seq.len());
    let mut gens = Vec::with_capacity(seq.len());
    for p in seq {
        let d = p.homogeneous_degree().ok_or_else(|| {
            Error::Grading(format!(
                "sequence element `{p}` is not homogeneous (or zero)"
            ))
        })?;
        rel_degrees.push(d);
        gens.push(p.embed(&vars)?);
    }
    let ideal = groebner_basis_truncated(&vars, gens, MonomialOrder::GradedRevLex, bound)?;
    let counted = ideal.quotient_series(bound)?;
    let expected = complete_intersection_series(&vars.degrees(), &rel_degrees, &[], bound);
    Ok(counted == expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial;

    #[test]
    fn regular_sequence_examples() {
        let v = Vars::uniform(&["x1", "x2"], 2).unwrap();
        let p = |s| parse_polynomial(s, &v).unwrap();
        let amb = v.generators();
        assert!(is_regular_sequence(&[p("x1^2+x2^2"), p("x1^4+x2^4")], amb).unwrap());
        assert!(!is_regular_sequence(&[p("x1^2+x2^2"), p("(x1^2+x2^2)^2")], amb).unwrap());
        assert!(
            is_regular_sequence(&[p("x1^2+x2^2+x1*x2"), p("(x1+x2)^2*x1^2*x2^2")], amb).unwrap()
        );
        assert!(is_regular_sequence(&[], amb).unwrap());
    }

    #[test]
    fn inhomogeneous_element_is_a_grading_error() {
        let v = Vars::uniform(&["x1", "x2"], 2).unwrap();
        let p = parse_polynomial("x1^2+x2^3", &v).unwrap();
        assert!(matches!(
            is_regular_sequence(&[p], v.generators()),
            Err(Error::Grading(_))
        ));
    }
}
