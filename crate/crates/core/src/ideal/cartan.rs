//! Splitting restricted invariants into a regular sequence and odd
//! generators.

use std::collections::HashMap;

use num::Zero;
use serde::Serialize;

use super::groebner::{groebner_basis, is_member, MonomialOrder};
use super::is_regular_sequence;
use crate::algebra::{substitute, GradedGenerator, Polynomial, SubstitutionMode, VarContext, Vars};
use crate::{Error, Result};

/// Result of reducing a list of restricted invariants.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CartanReduction {
    /// Surviving relations, tagged with their position in the input list.
    #[serde(skip)]
    pub regular: Vec<(usize, Polynomial)>,
    /// Odd degrees `2k - 1`, one per invariant that restricts to zero or into
    /// the ideal of the accepted ones.
    pub exterior_degrees: Vec<u32>,
    /// Polynomial generators eliminated by linear invariants.
    pub eliminated_linear: Vec<String>,
    /// Polynomial generators left after elimination.
    #[serde(skip)]
    pub ambient: VarContext,
}

impl CartanReduction {
    pub fn relations(&self) -> Vec<Polynomial> {
        self.regular.iter().map(|(_, p)| p.clone()).collect()
    }
}

/// Finds a generator occurring linearly in a homogeneous `p`, preferring the
/// last one in declaration order.
fn linear_generator(p: &Polynomial) -> Option<usize> {
    p.terms()
        .filter(|(m, _)| m.word_length() == 1)
        .filter_map(|(m, _)| m.exponents().iter().position(|&e| e == 1))
        .max()
}

fn eliminate(
    p: &Polynomial,
    var: usize,
    invariants: &mut [(usize, Polynomial, u32)],
    accepted: &mut [(usize, Polynomial)],
) -> Result<VarContext> {
    let old = p.vars().clone();
    let kept: Vec<GradedGenerator> = old
        .generators()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != var)
        .map(|(_, g)| g.clone())
        .collect();
    let target = Vars::new(kept)?;
    let g = Polynomial::var_at(&old, var);
    let c = p
        .terms()
        .find(|(m, _)| m.word_length() == 1 && m.exponents()[var] == 1)
        .map(|(_, c)| c.clone());
    let c = c.expect("linear coefficient present");
    // g = -(p - c g) / c
    let solved = (&(p - &g.scale(&c)) * &Polynomial::constant(&old, -c.recip()))
        .embed_without(var, &target)?;
    let mut assignment = HashMap::new();
    for (i, gen) in old.generators().iter().enumerate() {
        let image = if i == var {
            solved.clone()
        } else {
            Polynomial::var(&target, gen.name())?
        };
        assignment.insert(gen.name().to_string(), image);
    }
    for (_, q, _) in invariants.iter_mut() {
        *q = substitute(q, &assignment, &target, SubstitutionMode::Graded)?;
    }
    for (_, q) in accepted.iter_mut() {
        *q = substitute(q, &assignment, &target, SubstitutionMode::Graded)?;
    }
    Ok(target)
}

impl Polynomial {
    /// Moves a polynomial not involving generator `var` into `target`.
    fn embed_without(&self, var: usize, target: &VarContext) -> Result<Polynomial> {
        if self.terms().any(|(m, _)| m.exponents()[var] != 0) {
            return Err(Error::Reduction(
                "linear invariant is not solvable for its generator".into(),
            ));
        }
        self.embed(target)
    }
}

/// Scans restricted invariants by ascending invariant degree (ties keep
/// input order). Zero or ideal-dependent restrictions become odd generators
/// of degree `invariant_degree - 1`; linear ones eliminate a generator; the
/// rest must form a regular sequence.
pub fn cartan_reduce(
    restricted: &[(Polynomial, u32)],
    ambient: &VarContext,
) -> Result<CartanReduction> {
    let mut order: Vec<(usize, Polynomial, u32)> = restricted
        .iter()
        .enumerate()
        .map(|(i, (p, d))| (i, p.clone(), *d))
        .collect();
    for (_, p, _) in &order {
        if !Vars::same(p.vars(), ambient) {
            return Err(Error::ContextMismatch);
        }
        if !p.is_homogeneous() {
            return Err(Error::Grading(format!(
                "restricted invariant `{p}` is not homogeneous"
            )));
        }
    }
    order.sort_by_key(|(i, _, d)| (*d, *i));

    let mut ambient = ambient.clone();
    let mut accepted: Vec<(usize, Polynomial)> = Vec::new();
    let mut exterior_degrees = Vec::new();
    let mut eliminated_linear = Vec::new();

    let mut k = 0;
    while k < order.len() {
        let (idx, p, inv_deg) = order[k].clone();
        k += 1;
        if p.is_zero() {
            exterior_degrees.push(inv_deg - 1);
            continue;
        }
        if let Some(var) = linear_generator(&p) {
            let name = ambient.generators()[var].name().to_string();
            let (_, rest) = order.split_at_mut(k);
            ambient = eliminate(&p, var, rest, &mut accepted)?;
            eliminated_linear.push(name);
            continue;
        }
        let ideal = groebner_basis(
            &ambient,
            accepted.iter().map(|(_, q)| q.clone()).collect(),
            MonomialOrder::GradedRevLex,
        )?;
        if is_member(&p, &ideal)? {
            exterior_degrees.push(inv_deg - 1);
        } else {
            accepted.push((idx, p));
        }
    }

    // an elimination may have turned earlier accepted relations into zero
    if accepted.iter().any(|(_, p)| p.is_zero()) {
        return Err(Error::NotCartanPair(
            "an accepted relation vanished after linear elimination".into(),
        ));
    }
    let relations: Vec<Polynomial> = accepted.iter().map(|(_, p)| p.clone()).collect();
    if !is_regular_sequence(&relations, ambient.generators())? {
        return Err(Error::NotCartanPair(format!(
            "relations {} do not form a regular sequence",
            relations
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        )));
    }
    debug_assert!(exterior_degrees.iter().all(|d| d % 2 == 1 || d.is_zero()));
    Ok(CartanReduction {
        regular: accepted,
        exterior_degrees,
        eliminated_linear,
        ambient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial;

    #[test]
    fn all_zero_restrictions_split_off() {
        let v = Vars::uniform(&["x1", "x2"], 2).unwrap();
        let zero = Polynomial::zero(&v);
        let r = cartan_reduce(&[(zero.clone(), 4), (zero, 8)], &v).unwrap();
        assert!(r.regular.is_empty());
        assert_eq!(r.exterior_degrees, vec![3, 7]);
    }

    #[test]
    fn independent_power_sums_stay_regular() {
        let v = Vars::uniform(&["x1", "x2"], 2).unwrap();
        let p2 = parse_polynomial("x1^2+x2^2", &v).unwrap();
        let p4 = parse_polynomial("x1^4+x2^4", &v).unwrap();
        let r = cartan_reduce(&[(p4.clone(), 8), (p2.clone(), 4)], &v).unwrap();
        assert_eq!(r.regular, vec![(1, p2), (0, p4)]);
        assert!(r.exterior_degrees.is_empty());
    }

    #[test]
    fn linear_invariant_eliminates_a_generator() {
        let v = Vars::uniform(&["x1", "x2"], 2).unwrap();
        let lin = parse_polynomial("x1+x2", &v).unwrap();
        let quad = parse_polynomial("x1^2+x2^2", &v).unwrap();
        let r = cartan_reduce(&[(lin, 2), (quad, 4)], &v).unwrap();
        assert_eq!(r.eliminated_linear, vec!["x2".to_string()]);
        assert_eq!(r.ambient.len(), 1);
        assert_eq!(r.relations()[0].to_string(), "2*x1^2");
        assert!(r.exterior_degrees.is_empty());
    }

    #[test]
    fn dependent_but_nonzero_relation_is_not_a_cartan_pair_when_regularity_fails() {
        // x1^2 and x1*x2: the second is not in the first ideal, but the pair is
        // not regular (x2 kills x1 modulo x1^2... via x1*x2).
        let v = Vars::uniform(&["x1", "x2"], 2).unwrap();
        let a = parse_polynomial("x1^2", &v).unwrap();
        let b = parse_polynomial("x1*x2", &v).unwrap();
        assert!(matches!(
            cartan_reduce(&[(a, 4), (b, 4)], &v),
            Err(Error::NotCartanPair(_))
        ));
    }
}
