//! Newton's identities between power sums `σ_k` and the family `y_k`:
//! `σ_k = Σ_{i=1}^{k-1} (-1)^{i-1} σ_{k-i} y_i + (-1)^{k-1} k y_k`.

use num::Integer;

use super::presentation::CoefficientRing;
use crate::algebra::{GradedGenerator, Polynomial, VarContext, Vars};
use crate::{int, Error, Rational, Result};

/// Which family a [`SymmetricFunctionVector`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    PowerSum,
    Y,
}

/// Entries that support the arithmetic in Newton's identities.
pub trait NewtonEntry: Clone {
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn times(&self, k: i64) -> Self;
    /// Division by `k`; over the integers it must be exact.
    fn divide(&self, k: i64, ring: CoefficientRing) -> Result<Self>;
}

fn exact(c: &Rational, k: i64, ring: CoefficientRing) -> Result<Rational> {
    let q = c / int(k);
    if ring == CoefficientRing::Integral
        && (!c.is_integer() || !c.numer().is_multiple_of(&k.into()))
    {
        return Err(Error::NonIntegralDivision { divisor: k });
    }
    Ok(q)
}

impl NewtonEntry for Rational {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn times(&self, k: i64) -> Self {
        self * int(k)
    }
    fn divide(&self, k: i64, ring: CoefficientRing) -> Result<Self> {
        exact(self, k, ring)
    }
}

impl NewtonEntry for Polynomial {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn times(&self, k: i64) -> Self {
        self.scale(&int(k))
    }
    fn divide(&self, k: i64, ring: CoefficientRing) -> Result<Self> {
        for (_, c) in self.terms() {
            exact(c, k, ring)?;
        }
        Ok(self.scale(&int(k).recip()))
    }
}

/// Entries `1..=m` of one of the two families.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricFunctionVector<E> {
    pub kind: BasisKind,
    pub entries: Vec<E>,
}

impl<E: NewtonEntry> SymmetricFunctionVector<E> {
    pub fn new(kind: BasisKind, entries: Vec<E>) -> Self {
        Self { kind, entries }
    }

    /// Entry `k` (1-based).
    pub fn get(&self, k: usize) -> &E {
        &self.entries[k - 1]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn sign(i: usize) -> i64 {
    if i.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `σ_1, …, σ_m` from `y_1, …, y_m`.
pub fn newton_sigma_from_y<E: NewtonEntry>(
    y: &SymmetricFunctionVector<E>,
    m: usize,
) -> Result<SymmetricFunctionVector<E>> {
    if y.kind != BasisKind::Y || y.len() < m {
        return Err(Error::Parameter {
            case: "newton".into(),
            reason: format!("need y_1..y_{m}"),
        });
    }
    let mut sigma: Vec<E> = Vec::with_capacity(m);
    for k in 1..=m {
        let mut s = y.get(k).times(sign(k - 1) * k as i64);
        for i in 1..k {
            s = s.add(&sigma[k - i - 1].mul(y.get(i)).times(sign(i - 1)));
        }
        sigma.push(s);
    }
    Ok(SymmetricFunctionVector::new(BasisKind::PowerSum, sigma))
}

/// `y_1, …, y_m` from `σ_1, …, σ_m`, dividing by `k` at step `k`.
pub fn newton_y_from_sigma<E: NewtonEntry>(
    sigma: &SymmetricFunctionVector<E>,
    m: usize,
    ring: CoefficientRing,
) -> Result<SymmetricFunctionVector<E>> {
    if sigma.kind != BasisKind::PowerSum || sigma.len() < m {
        return Err(Error::Parameter {
            case: "newton".into(),
            reason: format!("need σ_1..σ_{m}"),
        });
    }
    let mut y: Vec<E> = Vec::with_capacity(m);
    for k in 1..=m {
        let mut rest = sigma.get(k).clone();
        for i in 1..k {
            rest = rest.sub(&sigma.get(k - i).mul(&y[i - 1]).times(sign(i - 1)));
        }
        y.push(rest.times(sign(k - 1)).divide(k as i64, ring)?);
    }
    Ok(SymmetricFunctionVector::new(BasisKind::Y, y))
}

/// Commuting symbols `prefix1, …, prefixm` with `prefixk` in degree `2k`.
pub fn formal_symbols(prefix: &str, m: usize) -> Result<(VarContext, Vec<Polynomial>)> {
    let gens = (1..=m)
        .map(|k| GradedGenerator::new(format!("{prefix}{k}"), 2 * k as u32))
        .collect::<Result<Vec<_>>>()?;
    let vars = Vars::new(gens)?;
    let symbols = (0..m).map(|k| Polynomial::var_at(&vars, k)).collect();
    Ok((vars, symbols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial;
    use crate::ideal::{groebner_basis, MonomialOrder};

    fn formal(m: usize) -> (VarContext, SymmetricFunctionVector<Polynomial>) {
        let (v, ys) = formal_symbols("y", m).unwrap();
        (v, SymmetricFunctionVector::new(BasisKind::Y, ys))
    }

    #[test]
    fn first_power_sums() {
        let (v, y) = formal(3);
        let s = newton_sigma_from_y(&y, 3).unwrap();
        assert_eq!(s.get(1), &parse_polynomial("y1", &v).unwrap());
        assert_eq!(s.get(2), &parse_polynomial("y1^2 - 2*y2", &v).unwrap());
        let expected3 = s.get(2) * s.get(1) - s.get(1) * y.get(2) + y.get(3).scale(&int(3));
        assert_eq!(s.get(3), &expected3);
    }

    #[test]
    fn e6_relations_kill_sigma2_and_sigma3() {
        let (v, y) = formal(3);
        let s = newton_sigma_from_y(&y, 3).unwrap();
        let rels = vec![
            parse_polynomial("y1^2 - 2*y2", &v).unwrap(),
            parse_polynomial("y1*y2 - 3*y3", &v).unwrap(),
        ];
        let ideal = groebner_basis(&v, rels, MonomialOrder::GradedRevLex).unwrap();
        assert!(ideal.normal_form(s.get(2)).unwrap().is_zero());
        assert!(ideal.normal_form(s.get(3)).unwrap().is_zero());
        assert!(!ideal.normal_form(s.get(1)).unwrap().is_zero());
    }

    #[test]
    fn inverse_direction() {
        let (v, sig) = formal_symbols("s", 2).unwrap();
        let sigma = SymmetricFunctionVector::new(BasisKind::PowerSum, sig);
        let y = newton_y_from_sigma(&sigma, 2, CoefficientRing::Rational).unwrap();
        assert_eq!(y.get(1), &parse_polynomial("s1", &v).unwrap());
        assert_eq!(y.get(2), &parse_polynomial("(s1^2 - s2)/2", &v).unwrap());
        assert!(matches!(
            newton_y_from_sigma(&sigma, 2, CoefficientRing::Integral),
            Err(Error::NonIntegralDivision { divisor: 2 })
        ));
    }

    #[test]
    fn formal_roundtrip() {
        let (_, y) = formal(8);
        let s = newton_sigma_from_y(&y, 8).unwrap();
        let back = newton_y_from_sigma(&s, 8, CoefficientRing::Rational).unwrap();
        assert_eq!(back, y);
    }

    #[test]
    fn integral_roundtrip_when_divisible() {
        let y = SymmetricFunctionVector::new(BasisKind::Y, vec![int(1), int(1), int(1)]);
        let s = newton_sigma_from_y(&y, 3).unwrap();
        let back = newton_y_from_sigma(&s, 3, CoefficientRing::Integral).unwrap();
        assert_eq!(back, y);
        let odd = SymmetricFunctionVector::new(BasisKind::PowerSum, vec![int(1), int(0)]);
        assert!(matches!(
            newton_y_from_sigma(&odd, 2, CoefficientRing::Integral),
            Err(Error::NonIntegralDivision { divisor: 2 })
        ));
    }
}
