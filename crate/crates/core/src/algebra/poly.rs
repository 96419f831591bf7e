//! Exact-rational commutative polynomials over even-degree generators.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::generator::{VarContext, Vars};
use crate::{Error, Rational, Result};

/// A monomial with its weighted (topological) degree cached.
///
/// The derived ordering compares the degree first and then the exponent
/// vectors lexicographically in generator declaration order, i.e. graded-lex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self {
            degree: 0,
            exps: vec![0; nvars].into_boxed_slice(),
        }
    }

    pub fn from_exponents(vars: &Vars, exps: Vec<u32>) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let degree = exps
            .iter()
            .zip(vars.generators())
            .map(|(e, g)| e * g.degree())
            .sum();
        Self {
            degree,
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Number of generator factors counted with multiplicity.
    pub fn word_length(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0 && self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a + b)
            .collect();
        Self {
            degree: self.degree + other.degree,
            exps,
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }
}

/// A polynomial in a fixed variable context. No zero coefficients are stored.
#[derive(Clone, Debug)]
pub struct Polynomial {
    vars: VarContext,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        Vars::same(&self.vars, &other.vars) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(vars: &VarContext) -> Self {
        Self {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &VarContext, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::one(vars.len()), c);
        p
    }

    pub fn one(vars: &VarContext) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn from_int(vars: &VarContext, c: i64) -> Self {
        Self::constant(vars, Rational::from_integer(c.into()))
    }

    pub fn var(vars: &VarContext, name: &str) -> Result<Self> {
        let i = vars
            .position(name)
            .ok_or_else(|| Error::UnknownGenerator(name.into()))?;
        Ok(Self::var_at(vars, i))
    }

    pub fn var_at(vars: &VarContext, i: usize) -> Self {
        let mut exps = vec![0; vars.len()];
        exps[i] = 1;
        let mut p = Self::zero(vars);
        p.add_term(Monomial::from_exponents(vars, exps), Rational::one());
        p
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs.
    pub fn from_terms(
        vars: &VarContext,
        terms: impl IntoIterator<Item = (Rational, Vec<u32>)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (c, e) in terms {
            p.add_term(Monomial::from_exponents(vars, e), c);
        }
        p
    }

    pub fn vars(&self) -> &VarContext {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Largest weighted degree of a term, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        if self.is_homogeneous() {
            self.degree()
        } else {
            None
        }
    }

    pub fn homogeneous_component(&self, degree: u32) -> Self {
        self.filter(|m| m.degree() == degree)
    }

    /// Component made of monomials with exactly `k` generator factors.
    pub fn word_length_component(&self, k: u32) -> Self {
        self.filter(|m| m.word_length() == k)
    }

    fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| keep(m))
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Self {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Self {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.vars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Makes the leading coefficient one (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Returns the constant term if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(m, _)| m.is_one())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    /// Re-expresses the polynomial in another context containing all of its
    /// generators (by name).
    pub fn embed(&self, target: &VarContext) -> Result<Self> {
        let map: Vec<Option<usize>> = self
            .vars
            .generators()
            .iter()
            .map(|g| target.position(g.name()))
            .collect();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.len()];
            for (i, &e) in m.exponents().iter().enumerate().filter(|(_, &e)| e > 0) {
                let j = map[i].ok_or_else(|| {
                    Error::UnknownGenerator(self.vars.generators()[i].name().into())
                })?;
                exps[j] = e;
            }
            out.add_term(Monomial::from_exponents(target, exps), c.clone());
        }
        Ok(out)
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        assert!(
            Vars::same(&self.vars, &other.vars),
            "polynomials from different contexts"
        );
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), if sign { c.clone() } else { -c.clone() });
        }
        out
    }

    fn product(&self, other: &Self) -> Self {
        assert!(
            Vars::same(&self.vars, &other.vars),
            "polynomials from different contexts"
        );
        let mut out = Self::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                let f: fn(&Polynomial, &Polynomial) -> Polynomial = $body;
                f(self, rhs)
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.combine(b, true));
forward_binop!(Sub, sub, |a, b| a.combine(b, false));
forward_binop!(Mul, mul, |a, b| a.product(b));

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Whether a substitution must preserve the grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SubstitutionMode {
    #[default]
    Graded,
    Ungraded,
}

/// Applies the algebra homomorphism sending each generator of `p` to its
/// image in `target`.
pub fn substitute(
    p: &Polynomial,
    assignment: &HashMap<String, Polynomial>,
    target: &VarContext,
    mode: SubstitutionMode,
) -> Result<Polynomial> {
    let gens = p.vars().generators();
    let mut images = Vec::with_capacity(gens.len());
    for (i, g) in gens.iter().enumerate() {
        let used = p.terms.keys().any(|m| m.exponents()[i] > 0);
        let image = match assignment.get(g.name()) {
            Some(img) => img,
            None if used => return Err(Error::MissingImage(g.name().into())),
            None => {
                images.push(None);
                continue;
            }
        };
        if !Vars::same(image.vars(), target) {
            return Err(Error::ContextMismatch);
        }
        if mode == SubstitutionMode::Graded
            && !image.is_zero()
            && image.homogeneous_degree() != Some(g.degree())
        {
            return Err(Error::Grading(format!(
                "image of `{}` is not homogeneous of degree {}",
                g.name(),
                g.degree()
            )));
        }
        images.push(Some(image));
    }

    let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); gens.len()];
    let mut out = Polynomial::zero(target);
    for (m, c) in &p.terms {
        let mut term = Polynomial::constant(target, c.clone());
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let img = images[i].expect("image checked above");
            let cache = &mut powers[i];
            if cache.is_empty() {
                cache.push(Polynomial::one(target));
            }
            while cache.len() <= e as usize {
                let next = cache.last().unwrap() * img;
                cache.push(next);
            }
            term = &term * &cache[e as usize];
        }
        out = out + term;
    }
    Ok(out)
}

fn fmt_coeff_prefix(
    c: &Rational,
    first: bool,
    is_const: bool,
    f: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    match (first, neg) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    if is_const {
        write!(f, "{abs}")
    } else if !abs.is_one() {
        write!(f, "{abs}*")
    } else {
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = self.vars.generators();
        for (k, (m, c)) in self.terms().enumerate() {
            fmt_coeff_prefix(c, k == 0, m.is_one(), f)?;
            let mut sep = "";
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => continue,
                    1 => write!(f, "{sep}{}", names[i].name())?,
                    _ => write!(f, "{sep}{}^{e}", names[i].name())?,
                }
                sep = "*";
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn kill_one_variable() {
        let v = Vars::uniform(&["x1", "x2", "x3"], 2).unwrap();
        let p = parse_polynomial("x1^2+x2^2+x3^2", &v).unwrap();
        let mut a = HashMap::new();
        a.insert("x1".into(), Polynomial::var(&v, "x1").unwrap());
        a.insert("x2".into(), Polynomial::var(&v, "x2").unwrap());
        a.insert("x3".into(), Polynomial::zero(&v));
        let r = substitute(&p, &a, &v, SubstitutionMode::Graded).unwrap();
        assert_eq!(r, parse_polynomial("x1^2+x2^2", &v).unwrap());
    }

    #[test]
    fn torus_restriction_of_quadratic_invariant() {
        let src = Vars::uniform(&["x1", "x2", "x3", "x4"], 2).unwrap();
        let dst = Vars::uniform(&["x2", "x3"], 2).unwrap();
        let p = parse_polynomial("x1^2+x2^2+x3^2+x4^2", &src).unwrap();
        let mut a = HashMap::new();
        a.insert("x1".into(), parse_polynomial("x2+x3", &dst).unwrap());
        a.insert("x2".into(), parse_polynomial("x2", &dst).unwrap());
        a.insert("x3".into(), parse_polynomial("x3", &dst).unwrap());
        a.insert("x4".into(), Polynomial::zero(&dst));
        let r = substitute(&p, &a, &dst, SubstitutionMode::Graded).unwrap();
        // (x2+x3)^2 + x2^2 + x3^2 expanded by hand
        assert_eq!(
            r,
            parse_polynomial("2*x2^2 + 2*x3^2 + 2*x2*x3", &dst).unwrap()
        );
    }

    #[test]
    fn substitution_errors() {
        let v = Vars::uniform(&["x", "y"], 2).unwrap();
        let p = parse_polynomial("x*y", &v).unwrap();
        let mut a = HashMap::new();
        a.insert("x".to_string(), Polynomial::var(&v, "y").unwrap());
        assert_eq!(
            substitute(&p, &a, &v, SubstitutionMode::Graded).unwrap_err(),
            Error::MissingImage("y".into())
        );
        a.insert("y".to_string(), parse_polynomial("x^2", &v).unwrap());
        assert!(matches!(
            substitute(&p, &a, &v, SubstitutionMode::Graded),
            Err(Error::Grading(_))
        ));
        let r = substitute(&p, &a, &v, SubstitutionMode::Ungraded).unwrap();
        assert_eq!(r, parse_polynomial("x^2*y", &v).unwrap());
    }

    #[test]
    fn canonical_form_and_display() {
        let v = Vars::uniform(&["x1", "x2"], 2).unwrap();
        let p = parse_polynomial("x2*x1 + x1^2 - x1*x2 + 3/2", &v).unwrap();
        assert_eq!(p.to_string(), "x1^2 + 3/2");
        assert!(!p.is_homogeneous());
        assert_eq!(p.homogeneous_component(4).to_string(), "x1^2");
        assert_eq!(p.degree(), Some(4));
        let z = &p - &p;
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
        assert_eq!(
            parse_polynomial("-x1 - 2*x2", &v).unwrap().to_string(),
            "-x1 - 2*x2"
        );
    }

    #[test]
    fn pow_matches_repeated_product() {
        let v = Vars::uniform(&["a", "b"], 2).unwrap();
        let p = parse_polynomial("a + 2*b", &v).unwrap();
        assert_eq!(p.pow(3), &(&p * &p) * &p);
        assert_eq!(p.pow(0), Polynomial::one(&v));
        assert_eq!(p.scale(&q(0)), Polynomial::zero(&v));
    }
}
