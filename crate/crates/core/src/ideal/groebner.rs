//! Buchberger's algorithm over exact rationals.
//!
//! Monomials are encoded as integer keys whose lexicographic order is the
//! chosen monomial order, so a polynomial is just a `BTreeMap` from keys to
//! coefficients and the leading term is its last entry. Both supported
//! encodings are linear in the exponent vector, so multiplying monomials is
//! adding keys.

use std::collections::{BTreeMap, BTreeSet};

use num::{One, Zero};

use crate::algebra::{HilbertSeries, Monomial, Polynomial, VarContext, Vars};
use crate::{Error, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MonomialOrder {
    /// Weighted degree, then reverse lexicographic (declaration order).
    #[default]
    GradedRevLex,
    /// Weighted degree, then lexicographic (declaration order).
    GradedLex,
}

type Key = Box<[i64]>;
type Sparse = BTreeMap<Key, Rational>;

#[derive(Clone, Debug)]
struct Encoder {
    order: MonomialOrder,
    weights: Vec<i64>,
}

impl Encoder {
    fn new(vars: &Vars, order: MonomialOrder) -> Self {
        Self {
            order,
            weights: vars.degrees().into_iter().map(i64::from).collect(),
        }
    }

    fn encode(&self, exps: &[u32]) -> Key {
        let n = exps.len();
        let mut key = vec![0i64; n + 1];
        key[0] = exps
            .iter()
            .zip(&self.weights)
            .map(|(&e, w)| e as i64 * w)
            .sum();
        match self.order {
            MonomialOrder::GradedLex => {
                for i in 0..n {
                    key[i + 1] = exps[i] as i64;
                }
            }
            MonomialOrder::GradedRevLex => {
                for i in 0..n {
                    key[i + 1] = -(exps[n - 1 - i] as i64);
                }
            }
        }
        key.into_boxed_slice()
    }

    fn decode(&self, key: &[i64]) -> Vec<u32> {
        let n = key.len() - 1;
        match self.order {
            MonomialOrder::GradedLex => key[1..].iter().map(|&e| e as u32).collect(),
            MonomialOrder::GradedRevLex => (0..n).map(|i| (-key[n - i]) as u32).collect(),
        }
    }

    fn sign(&self) -> i64 {
        match self.order {
            MonomialOrder::GradedLex => 1,
            MonomialOrder::GradedRevLex => -1,
        }
    }

    /// Exponent of the `i`-th key slot (slot order, not variable order).
    fn exp(&self, key: &[i64], slot: usize) -> i64 {
        self.sign() * key[slot + 1]
    }

    fn divides(&self, a: &[i64], b: &[i64]) -> bool {
        (0..a.len() - 1).all(|s| self.exp(a, s) <= self.exp(b, s))
    }

    fn lcm(&self, a: &[i64], b: &[i64]) -> Key {
        let n = a.len() - 1;
        let mut key = vec![0i64; n + 1];
        let mut deg = 0;
        for s in 0..n {
            let e = self.exp(a, s).max(self.exp(b, s));
            key[s + 1] = self.sign() * e;
            deg += e * self.slot_weight(s);
        }
        key[0] = deg;
        key.into_boxed_slice()
    }

    fn coprime(&self, a: &[i64], b: &[i64]) -> bool {
        (0..a.len() - 1).all(|s| self.exp(a, s) == 0 || self.exp(b, s) == 0)
    }

    fn slot_weight(&self, slot: usize) -> i64 {
        match self.order {
            MonomialOrder::GradedLex => self.weights[slot],
            MonomialOrder::GradedRevLex => self.weights[self.weights.len() - 1 - slot],
        }
    }
}

fn add_key(a: &[i64], b: &[i64]) -> Key {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_key(a: &[i64], b: &[i64]) -> Key {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn lead(p: &Sparse) -> Option<(&Key, &Rational)> {
    p.iter().next_back()
}

fn make_monic(p: &mut Sparse) {
    if let Some((_, c)) = lead(p) {
        let inv = c.recip();
        for v in p.values_mut() {
            *v *= &inv;
        }
    }
}

/// `p -= c * x^shift * g`
fn sub_multiple(p: &mut Sparse, c: &Rational, shift: &[i64], g: &Sparse) {
    use std::collections::btree_map::Entry;
    for (k, gc) in g {
        let key = add_key(k, shift);
        let delta = c * gc;
        match p.entry(key) {
            Entry::Vacant(v) => {
                v.insert(-delta);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() -= delta;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

/// Full reduction of `p` by monic `basis`.
fn reduce(enc: &Encoder, mut p: Sparse, basis: &[Sparse]) -> Sparse {
    let mut rem = Sparse::new();
    while let Some((k, c)) = p.pop_last() {
        let divisor = basis
            .iter()
            .find(|g| lead(g).is_some_and(|(lk, _)| enc.divides(lk, &k)));
        match divisor {
            Some(g) => {
                let (lk, _) = lead(g).unwrap();
                let shift = sub_key(&k, lk);
                let mut tail = g.clone();
                tail.pop_last();
                sub_multiple(&mut p, &c, &shift, &tail);
            }
            None => {
                rem.insert(k, c);
            }
        }
    }
    rem
}

fn s_poly(enc: &Encoder, f: &Sparse, g: &Sparse) -> Sparse {
    let (fk, _) = lead(f).unwrap();
    let (gk, _) = lead(g).unwrap();
    let l = enc.lcm(fk, gk);
    let mut out = Sparse::new();
    sub_multiple(&mut out, &-Rational::one(), &sub_key(&l, fk), f);
    sub_multiple(&mut out, &Rational::one(), &sub_key(&l, gk), g);
    out
}

/// An ideal together with (optionally) a reduced Gröbner basis.
#[derive(Clone, Debug)]
pub struct IdealBasis {
    vars: VarContext,
    generators: Vec<Polynomial>,
    order: MonomialOrder,
    degree_bound: Option<u32>,
    enc: Encoder,
    basis: Option<Vec<Sparse>>,
}

impl IdealBasis {
    /// An ideal with no basis computed yet.
    pub fn new(
        vars: &VarContext,
        generators: Vec<Polynomial>,
        order: MonomialOrder,
    ) -> Result<Self> {
        for g in &generators {
            if !Vars::same(g.vars(), vars) {
                return Err(Error::ContextMismatch);
            }
        }
        Ok(Self {
            vars: vars.clone(),
            generators,
            order,
            degree_bound: None,
            enc: Encoder::new(vars, order),
            basis: None,
        })
    }

    pub fn vars(&self) -> &VarContext {
        &self.vars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn degree_bound(&self) -> Option<u32> {
        self.degree_bound
    }

    /// The computed reduced Gröbner basis, sorted by leading monomial.
    pub fn groebner(&self) -> Option<Vec<Polynomial>> {
        self.basis
            .as_ref()
            .map(|b| b.iter().map(|g| self.to_poly(g)).collect())
    }

    fn to_sparse(&self, p: &Polynomial) -> Sparse {
        p.terms()
            .map(|(m, c)| (self.enc.encode(m.exponents()), c.clone()))
            .collect()
    }

    fn to_poly(&self, s: &Sparse) -> Polynomial {
        Polynomial::from_terms(
            &self.vars,
            s.iter().map(|(k, c)| (c.clone(), self.enc.decode(k))),
        )
    }

    /// Runs Buchberger's algorithm. With a bound, only S-pairs whose lcm has
    /// degree at most `bound` are processed; for homogeneous input the result
    /// then agrees with the full basis in all degrees up to `bound`.
    pub fn compute(&mut self, bound: Option<u32>) {
        let enc = &self.enc;
        let mut basis: Vec<Sparse> = Vec::new();
        let mut pending: BTreeSet<(i64, usize, usize)> = BTreeSet::new();

        let insert = |basis: &mut Vec<Sparse>,
                      pending: &mut BTreeSet<(i64, usize, usize)>,
                      mut g: Sparse| {
            make_monic(&mut g);
            let j = basis.len();
            let gk = lead(&g).unwrap().0.clone();
            for (i, f) in basis.iter().enumerate() {
                let l = enc.lcm(lead(f).unwrap().0, &gk);
                pending.insert((l[0], i, j));
            }
            basis.push(g);
        };

        for g in &self.generators {
            let r = reduce(enc, self.to_sparse(g), &basis);
            if !r.is_empty() {
                insert(&mut basis, &mut pending, r);
            }
        }

        while let Some(&(deg, i, j)) = pending.iter().next() {
            pending.remove(&(deg, i, j));
            if bound.is_some_and(|b| deg > b as i64) {
                continue;
            }
            let (fi, fj) = (
                lead(&basis[i]).unwrap().0.clone(),
                lead(&basis[j]).unwrap().0.clone(),
            );
            if enc.coprime(&fi, &fj) {
                continue;
            }
            let l = enc.lcm(&fi, &fj);
            let is_pending = |a: usize, b: usize| {
                let (a, b) = (a.min(b), a.max(b));
                let la = enc.lcm(lead(&basis[a]).unwrap().0, lead(&basis[b]).unwrap().0);
                pending.contains(&(la[0], a, b))
            };
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && enc.divides(lead(&basis[k]).unwrap().0, &l)
                    && !is_pending(i, k)
                    && !is_pending(j, k)
            });
            if chain {
                continue;
            }
            let s = s_poly(enc, &basis[i], &basis[j]);
            let r = reduce(enc, s, &basis);
            if !r.is_empty() {
                insert(&mut basis, &mut pending, r);
            }
        }

        // minimalize and inter-reduce
        let mut minimal: Vec<Sparse> = Vec::new();
        for (idx, g) in basis.iter().enumerate() {
            let gk = lead(g).unwrap().0;
            let redundant = basis.iter().enumerate().any(|(o, h)| {
                let hk = lead(h).unwrap().0;
                o != idx && enc.divides(hk, gk) && (hk != gk || o < idx)
            });
            if !redundant {
                minimal.push(g.clone());
            }
        }
        let mut reduced = Vec::with_capacity(minimal.len());
        for i in 0..minimal.len() {
            let mut g = minimal[i].clone();
            let (lk, lc) = g.pop_last().unwrap();
            let others: Vec<Sparse> = minimal
                .iter()
                .enumerate()
                .filter(|(o, _)| *o != i)
                .map(|(_, h)| h.clone())
                .collect();
            let mut r = reduce(enc, g, &others);
            r.insert(lk, lc);
            make_monic(&mut r);
            reduced.push(r);
        }
        reduced.sort_by(|a, b| lead(a).unwrap().0.cmp(lead(b).unwrap().0));
        self.basis = Some(reduced);
        self.degree_bound = bound;
    }

    fn basis_or_err(&self) -> Result<&[Sparse]> {
        self.basis
            .as_deref()
            .ok_or_else(|| Error::Reduction("Gröbner basis has not been computed".into()))
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        if !Vars::same(p.vars(), &self.vars) {
            return Err(Error::ContextMismatch);
        }
        let basis = self.basis_or_err()?;
        Ok(self.to_poly(&reduce(&self.enc, self.to_sparse(p), basis)))
    }

    /// Leading monomials of the computed basis, as exponent vectors.
    pub fn leading_monomials(&self) -> Result<Vec<Vec<u32>>> {
        Ok(self
            .basis_or_err()?
            .iter()
            .map(|g| self.enc.decode(lead(g).unwrap().0))
            .collect())
    }

    /// Counts standard monomials (those not divisible by any leading
    /// monomial) in each weighted degree up to `bound`.
    pub fn quotient_series(&self, bound: u32) -> Result<HilbertSeries> {
        let leads = self.leading_monomials()?;
        let degrees = self.vars.degrees();
        let mut coeffs = vec![0i64; bound as usize + 1];
        let mut exps = vec![0u32; degrees.len()];
        count_standard(&degrees, &leads, 0, 0, bound, &mut exps, &mut coeffs);
        Ok(HilbertSeries::from_coeffs(coeffs))
    }
}

fn count_standard(
    degrees: &[u32],
    leads: &[Vec<u32>],
    var: usize,
    deg: u32,
    bound: u32,
    exps: &mut Vec<u32>,
    out: &mut [i64],
) {
    if var == degrees.len() {
        if !leads
            .iter()
            .any(|l| l.iter().zip(exps.iter()).all(|(a, b)| a <= b))
        {
            out[deg as usize] += 1;
        }
        return;
    }
    let mut e = 0;
    let mut d = deg;
    while d <= bound {
        exps[var] = e;
        count_standard(degrees, leads, var + 1, d, bound, exps, out);
        // once a monomial is divisible by a lead, so are all its multiples
        if var + 1 == degrees.len()
            && leads
                .iter()
                .any(|l| l.iter().zip(exps.iter()).all(|(a, b)| a <= b))
        {
            break;
        }
        e += 1;
        d += degrees[var];
    }
    exps[var] = 0;
}

/// Computes a reduced Gröbner basis of the ideal generated by `gens`.
pub fn groebner_basis(
    vars: &VarContext,
    gens: Vec<Polynomial>,
    order: MonomialOrder,
) -> Result<IdealBasis> {
    let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    let mut ideal = IdealBasis::new(vars, gens, order)?;
    ideal.compute(None);
    Ok(ideal)
}

/// Degree-truncated variant of [`groebner_basis`].
pub fn groebner_basis_truncated(
    vars: &VarContext,
    gens: Vec<Polynomial>,
    order: MonomialOrder,
    bound: u32,
) -> Result<IdealBasis> {
    let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    let mut ideal = IdealBasis::new(vars, gens, order)?;
    ideal.compute(Some(bound));
    Ok(ideal)
}

pub fn is_member(p: &Polynomial, ideal: &IdealBasis) -> Result<bool> {
    Ok(ideal.normal_form(p)?.is_zero())
}

/// Leading monomial of `p` under `order`, as an exponent vector.
pub fn leading_monomial(p: &Polynomial, order: MonomialOrder) -> Option<Monomial> {
    let enc = Encoder::new(p.vars(), order);
    p.terms()
        .map(|(m, _)| (enc.encode(m.exponents()), m))
        .max_by(|a, b| a.0.cmp(&b.0))
        .map(|(_, m)| m.clone())
}
