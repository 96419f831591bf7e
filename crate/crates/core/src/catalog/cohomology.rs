//! Rational cohomology presentations of the catalog spaces.

use std::collections::HashMap;

use super::CatalogCase;
use crate::algebra::{
    parse_polynomial, substitute, GradedGenerator, Polynomial, SubstitutionMode, VarContext, Vars,
};
use crate::ideal::{cartan_reduce, groebner_basis, is_member, CartanReduction, MonomialOrder};
use crate::sullivan::CohomPresentation;
use crate::{int, Error, Result};

fn degree_two(prefix: &str, count: u32) -> Result<VarContext> {
    let gens = (1..=count)
        .map(|i| GradedGenerator::new(format!("{prefix}{i}"), 2))
        .collect::<Result<Vec<_>>>()?;
    Vars::new(gens)
}

/// `Σ_i x_i^j` over every generator of `vars`.
fn power_sum(vars: &VarContext, j: u32) -> Polynomial {
    (0..vars.len()).fold(Polynomial::zero(vars), |acc, i| {
        acc + Polynomial::var_at(vars, i).pow(j)
    })
}

fn exterior(degrees: impl IntoIterator<Item = u32>) -> Result<Vec<GradedGenerator>> {
    degrees
        .into_iter()
        .enumerate()
        .map(|(i, d)| GradedGenerator::new(format!("z{}", i + 1), d))
        .collect()
}

/// `Q[x_1..x_n]/(P_2, P_4, …, P_2n) ⊗ Λ(z_1..z_m)` with `deg z_j = 4j + 1`.
fn unitary(n: u32, exterior_count: u32) -> Result<CohomPresentation> {
    let vars = degree_two("x", n)?;
    let relations = (1..=n).map(|i| power_sum(&vars, 2 * i)).collect();
    CohomPresentation::new(
        vars,
        relations,
        exterior((1..=exterior_count).map(|j| 4 * j + 1))?,
    )
}

/// `Q[x_1..x_n]/(P_2, …, P_2n) ⊗ Λ(z)` with `deg z = 2n + 1`.
fn orthogonal_even(n: u32) -> Result<CohomPresentation> {
    let vars = degree_two("x", n)?;
    let relations = (1..=n).map(|i| power_sum(&vars, 2 * i)).collect();
    CohomPresentation::new(vars, relations, exterior([2 * n + 1])?)
}

/// `Q[x_1..x_k]/(P_{n-k+1}, …, P_n)` with `P_j = Σ_{i≤k} x_i^j`.
fn partial_flag(n: u32, k: u32) -> Result<CohomPresentation> {
    let vars = degree_two("x", k)?;
    let relations = (n - k + 1..=n).map(|j| power_sum(&vars, j)).collect();
    CohomPresentation::new(vars, relations, Vec::new())
}

/// Restrictions to `T^2` of the `SO(8)` invariants `Σ X^2, Σ X^4, X_1X_2X_3X_4,
/// Σ X^6`, under `X_1 = x_1 + x_2`, `X_2 = x_1`, `X_3 = x_2`, `X_4 = 0`, each
/// tagged with its cohomological degree.
pub fn so8_restricted_invariants() -> Result<(VarContext, Vec<(Polynomial, u32)>)> {
    let big = degree_two("X", 4)?;
    let small = degree_two("x", 2)?;
    let x1 = Polynomial::var(&small, "x1")?;
    let x2 = Polynomial::var(&small, "x2")?;
    let assignment: HashMap<String, Polynomial> = [
        ("X1".to_string(), &x1 + &x2),
        ("X2".to_string(), x1.clone()),
        ("X3".to_string(), x2.clone()),
        ("X4".to_string(), Polynomial::zero(&small)),
    ]
    .into_iter()
    .collect();
    let pfaffian = (0..4).fold(Polynomial::one(&big), |acc, i| {
        acc * Polynomial::var_at(&big, i)
    });
    let invariants = [
        (power_sum(&big, 2), 4),
        (power_sum(&big, 4), 8),
        (pfaffian, 8),
        (power_sum(&big, 6), 12),
    ];
    let restricted = invariants
        .into_iter()
        .map(|(p, d)| {
            Ok((
                substitute(&p, &assignment, &small, SubstitutionMode::Graded)?,
                d,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((small, restricted))
}

/// Restrictions to `T^4` of the `E_6` invariants
/// `P_k = Σ_i ((x_i + ε)^k + (x_i - ε)^k) + Σ_{i<j} (-x_i - x_j)^k`,
/// `k ∈ {2, 5, 6, 8, 9, 12}`, under `x_6 = -x_1`, `x_5 = -x_2`, `x_4 = -x_3`.
/// The torus coordinates are `u_1, u_2, u_3 = x_1, x_2, x_3` and `u_4 = ε`.
pub fn e6_restricted_invariants() -> Result<(VarContext, Vec<(Polynomial, u32)>)> {
    let vars = degree_two("u", 4)?;
    let u: Vec<Polynomial> = (0..4).map(|i| Polynomial::var_at(&vars, i)).collect();
    let x = [
        u[0].clone(),
        u[1].clone(),
        u[2].clone(),
        -&u[2],
        -&u[1],
        -&u[0],
    ];
    let eps = &u[3];
    let mut weights = Vec::with_capacity(27);
    for xi in &x {
        weights.push(xi + eps);
        weights.push(xi - eps);
    }
    for i in 0..6 {
        for j in i + 1..6 {
            weights.push(-(&x[i] + &x[j]));
        }
    }
    let restricted = [2u32, 5, 6, 8, 9, 12]
        .into_iter()
        .map(|k| {
            (
                weights
                    .iter()
                    .fold(Polynomial::zero(&vars), |acc, w| acc + w.pow(k)),
                2 * k,
            )
        })
        .collect();
    Ok((vars, restricted))
}

fn from_reduction(reduction: CartanReduction) -> Result<CohomPresentation> {
    let relations = reduction.relations();
    CohomPresentation::new(
        reduction.ambient.clone(),
        relations,
        exterior(reduction.exterior_degrees.iter().copied())?,
    )
}

fn same_ideal(vars: &VarContext, a: &[Polynomial], b: &[Polynomial]) -> Result<bool> {
    let ia = groebner_basis(vars, a.to_vec(), MonomialOrder::GradedRevLex)?;
    let ib = groebner_basis(vars, b.to_vec(), MonomialOrder::GradedRevLex)?;
    for p in a {
        if !is_member(p, &ib)? {
            return Ok(false);
        }
    }
    for p in b {
        if !is_member(p, &ia)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The computed restriction, presented by the monic degree-4 relation
/// `x_1^2 + x_1x_2 + x_2^2` and `(x_1 + x_2)^2 x_1^2 x_2^2`.
fn so8() -> Result<CohomPresentation> {
    let (vars, restricted) = so8_restricted_invariants()?;
    let computed = from_reduction(cartan_reduce(&restricted, &vars)?)?;
    let stated = ["x1^2 + x2^2 + x1*x2", "(x1 + x2)^2*x1^2*x2^2"]
        .iter()
        .map(|s| parse_polynomial(s, &vars))
        .collect::<Result<Vec<_>>>()?;
    if !same_ideal(&vars, computed.relations(), &stated)? {
        return Err(Error::Reduction(
            "restricted SO(8) invariants do not generate the stated ideal".into(),
        ));
    }
    CohomPresentation::new(vars, stated, computed.exterior().to_vec())
}

fn e6() -> Result<CohomPresentation> {
    let (vars, restricted) = e6_restricted_invariants()?;
    let reduction = cartan_reduce(&restricted, &vars)?;
    let quadratic = &reduction.relations()[0];
    let expected = power_sum(&vars, 2).scale(&int(12));
    if quadratic != &expected {
        return Err(Error::Reduction(format!(
            "restricted quadratic E6 invariant is `{quadratic}`"
        )));
    }
    from_reduction(reduction)
}

/// The rational cohomology presentation of a catalog space.
pub fn cohomology(case: CatalogCase) -> Result<CohomPresentation> {
    case.validate()?;
    match case {
        CatalogCase::SuOdd { n } => unitary(n, n),
        CatalogCase::SuEven { n } => unitary(n, n - 1),
        CatalogCase::SoEven { n } => orthogonal_even(n),
        CatalogCase::So8 => so8(),
        CatalogCase::E6T4 => e6(),
        CatalogCase::APartial { n, k } => partial_flag(n, k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn su_odd_one() {
        let c = cohomology(CatalogCase::SuOdd { n: 1 }).unwrap();
        assert_eq!(
            c.to_string(),
            "generators\n  x1 deg 2\nrelations\n  x1^2\nexterior\n  z1 deg 5\n"
        );
    }

    #[test]
    fn su_even_drops_the_top_exterior_generator() {
        let c = cohomology(CatalogCase::SuEven { n: 3 }).unwrap();
        let ext: Vec<u32> = c.exterior().iter().map(GradedGenerator::degree).collect();
        assert_eq!(ext, vec![5, 9]);
        assert_eq!(c.relation_degrees(), vec![4, 8, 12]);
    }

    #[test]
    fn so_even_exterior_degree() {
        let c = cohomology(CatalogCase::SoEven { n: 2 }).unwrap();
        assert_eq!(c.exterior()[0].degree(), 5);
        assert_eq!(c.relation_degrees(), vec![4, 8]);
    }

    #[test]
    fn so8_restriction() {
        let (vars, r) = so8_restricted_invariants().unwrap();
        let p = |s: &str| parse_polynomial(s, &vars).unwrap();
        assert_eq!(r[0].0, p("2*(x1^2 + x1*x2 + x2^2)"));
        assert_eq!(r[1].0, p("2*(x1^2 + x1*x2 + x2^2)^2"));
        assert!(r[2].0.is_zero());
        assert_eq!(
            r[3].0,
            p("2*(x1^2 + x1*x2 + x2^2)^3 + 3*(x1 + x2)^2*x1^2*x2^2")
        );
        let c = cohomology(CatalogCase::So8).unwrap();
        assert_eq!(c.relation_degrees(), vec![4, 12]);
        let ext: Vec<u32> = c.exterior().iter().map(GradedGenerator::degree).collect();
        assert_eq!(ext, vec![7, 7]);
        assert_eq!(c.relations()[0], p("x1^2 + x2^2 + x1*x2"));
    }

    #[test]
    fn e6_restriction() {
        let (vars, r) = e6_restricted_invariants().unwrap();
        assert_eq!(
            r[0].0,
            parse_polynomial("12*(u1^2 + u2^2 + u3^2 + u4^2)", &vars).unwrap()
        );
        assert!(r[1].0.is_zero());
        assert!(r[4].0.is_zero());
        let c = cohomology(CatalogCase::E6T4).unwrap();
        assert_eq!(c.relation_degrees(), vec![4, 12, 16, 24]);
        let ext: Vec<u32> = c.exterior().iter().map(GradedGenerator::degree).collect();
        assert_eq!(ext, vec![9, 17]);
    }

    #[test]
    fn partial_flag_power_sums() {
        let c = cohomology(CatalogCase::APartial { n: 4, k: 2 }).unwrap();
        let v = c.vars().clone();
        assert_eq!(
            c.relations()[0],
            parse_polynomial("x1^3 + x2^3", &v).unwrap()
        );
        assert_eq!(
            c.relations()[1],
            parse_polynomial("x1^4 + x2^4", &v).unwrap()
        );
        assert!(c.exterior().is_empty());
        let empty = cohomology(CatalogCase::APartial { n: 3, k: 0 }).unwrap();
        assert!(empty.generators().is_empty());
    }
}
