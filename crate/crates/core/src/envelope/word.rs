use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num::{One, Zero};

use crate::algebra::{ensure_unique, parse_expr, ExprRing, GradedGenerator};
use crate::sullivan::format_combination;
use crate::{Error, Rational, Result};

/// Ordered generators of a free associative algebra.
#[derive(Debug)]
pub struct Alphabet {
    gens: Vec<GradedGenerator>,
    index: HashMap<String, usize>,
}

pub type AlphabetRef = Arc<Alphabet>;

impl Alphabet {
    pub fn new(gens: Vec<GradedGenerator>) -> Result<AlphabetRef> {
        ensure_unique(&gens)?;
        if gens.len() > usize::from(u16::MAX) {
            return Err(Error::Grading("too many generators".into()));
        }
        let index = gens
            .iter()
            .enumerate()
            .map(|(i, g)| (g.name().to_string(), i))
            .collect();
        Ok(Arc::new(Self { gens, index }))
    }

    pub fn generators(&self) -> &[GradedGenerator] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn degree(&self, letter: u16) -> u32 {
        self.gens[usize::from(letter)].degree()
    }

    pub(crate) fn same(a: &AlphabetRef, b: &AlphabetRef) -> bool {
        Arc::ptr_eq(a, b) || a.gens == b.gens
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens
    }
}

/// A word in the generators, with its total degree cached.
///
/// Words are ordered by degree, then length, then lexicographically by
/// generator declaration order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    degree: u32,
    letters: Vec<u16>,
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then(self.letters.len().cmp(&other.letters.len()))
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Word {
    pub fn empty() -> Self {
        Self {
            degree: 0,
            letters: Vec::new(),
        }
    }

    pub fn new(alphabet: &Alphabet, letters: Vec<u16>) -> Self {
        let degree = letters.iter().map(|&l| alphabet.degree(l)).sum();
        Self { degree, letters }
    }

    pub(crate) fn from_parts(degree: u32, letters: Vec<u16>) -> Self {
        Self { degree, letters }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn letters(&self) -> &[u16] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Self {
            degree: self.degree + other.degree,
            letters,
        }
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.letters.is_empty() {
            return "1".into();
        }
        let names: Vec<&str> = self
            .letters
            .iter()
            .map(|&l| alphabet.gens[usize::from(l)].name())
            .collect();
        names.join("*")
    }
}

/// A noncommutative polynomial with exact rational coefficients.
#[derive(Clone, Debug)]
pub struct NcPoly {
    alphabet: AlphabetRef,
    terms: BTreeMap<Word, Rational>,
}

impl PartialEq for NcPoly {
    fn eq(&self, other: &Self) -> bool {
        Alphabet::same(&self.alphabet, &other.alphabet) && self.terms == other.terms
    }
}

impl Eq for NcPoly {}

impl NcPoly {
    pub fn zero(alphabet: &AlphabetRef) -> Self {
        Self {
            alphabet: alphabet.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(alphabet: &AlphabetRef, c: Rational) -> Self {
        let mut p = Self::zero(alphabet);
        p.add_term(Word::empty(), c);
        p
    }

    pub fn word(alphabet: &AlphabetRef, w: Word) -> Self {
        let mut p = Self::zero(alphabet);
        p.add_term(w, Rational::one());
        p
    }

    pub fn letter(alphabet: &AlphabetRef, i: usize) -> Self {
        Self::word(alphabet, Word::new(alphabet, vec![i as u16]))
    }

    pub fn var(alphabet: &AlphabetRef, name: &str) -> Result<Self> {
        let i = alphabet
            .position(name)
            .ok_or_else(|| Error::UnknownGenerator(name.into()))?;
        Ok(Self::letter(alphabet, i))
    }

    /// Product of the named generators, e.g. `["a1", "a2"]` for `a1*a2`.
    pub fn monomial(alphabet: &AlphabetRef, names: &[&str]) -> Result<Self> {
        let letters = names
            .iter()
            .map(|n| {
                alphabet
                    .position(n)
                    .map(|i| i as u16)
                    .ok_or_else(|| Error::UnknownGenerator((*n).into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::word(alphabet, Word::new(alphabet, letters)))
    }

    pub fn alphabet(&self) -> &AlphabetRef {
        &self.alphabet
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

    /// Terms in descending word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Word, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
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

    pub(crate) fn into_terms(self) -> BTreeMap<Word, Rational> {
        self.terms
    }

    pub(crate) fn from_map(alphabet: &AlphabetRef, terms: BTreeMap<Word, Rational>) -> Self {
        Self {
            alphabet: alphabet.clone(),
            terms,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Word::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Word::degree).max()
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.alphabet);
        }
        let terms = self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect();
        Self {
            alphabet: self.alphabet.clone(),
            terms,
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, &Rational::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, &-Rational::one())
    }

    fn combine(&self, other: &Self, s: &Rational) -> Self {
        assert!(
            Alphabet::same(&self.alphabet, &other.alphabet),
            "polynomials over different alphabets"
        );
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert!(
            Alphabet::same(&self.alphabet, &other.alphabet),
            "polynomials over different alphabets"
        );
        let mut out = Self::zero(&self.alphabet);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    /// `x*y - sign*y*x` with `sign = (-1)^{|x||y|}` for homogeneous inputs.
    pub fn graded_commutator(&self, other: &Self) -> Self {
        let (dx, dy) = (self.degree().unwrap_or(0), other.degree().unwrap_or(0));
        let s = if dx * dy % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        self.mul(other).sub(&other.mul(self).scale(&s))
    }

    /// Re-expresses the polynomial over another alphabet, by generator name.
    pub fn embed(&self, target: &AlphabetRef) -> Result<Self> {
        let map: Vec<Option<u16>> = self
            .alphabet
            .gens
            .iter()
            .map(|g| target.position(g.name()).map(|i| i as u16))
            .collect();
        let mut out = Self::zero(target);
        for (w, c) in &self.terms {
            let letters = w
                .letters
                .iter()
                .map(|&l| {
                    map[usize::from(l)].ok_or_else(|| {
                        Error::UnknownGenerator(self.alphabet.gens[usize::from(l)].name().into())
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            out.add_term(Word::new(target, letters), c.clone());
        }
        Ok(out)
    }

    /// Replaces each generator with the polynomial `images[i]` (generators
    /// mapped to `None` are kept, re-embedded by name into `target`).
    pub fn substitute(&self, images: &[Option<NcPoly>], target: &AlphabetRef) -> Result<Self> {
        let mut out = Self::zero(target);
        for (w, c) in &self.terms {
            let mut acc = Self::constant(target, c.clone());
            for &l in &w.letters {
                let factor = match &images[usize::from(l)] {
                    Some(p) => p.clone(),
                    None => Self::var(target, self.alphabet.gens[usize::from(l)].name())?,
                };
                acc = acc.mul(&factor);
            }
            out = out.add(&acc);
        }
        Ok(out)
    }
}

impl ExprRing for NcPoly {
    fn constant(&self, c: Rational) -> Self {
        NcPoly::constant(&self.alphabet, c)
    }
    fn add(&self, other: &Self) -> Self {
        NcPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        NcPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        NcPoly::mul(self, other)
    }
    fn scale(&self, c: &Rational) -> Self {
        NcPoly::scale(self, c)
    }
    fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(w, _)| w.is_empty())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }
}

/// Parses a noncommutative polynomial; `*` is the (noncommutative) product.
pub fn parse_nc(src: &str, alphabet: &AlphabetRef) -> Result<NcPoly> {
    let e = parse_expr(src)?;
    e.eval(&NcPoly::zero(alphabet), &|name, column| {
        NcPoly::var(alphabet, name).map_err(|_| Error::Expression {
            column,
            message: format!("unknown generator `{name}`"),
        })
    })
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<(String, &Rational)> = self
            .terms()
            .map(|(w, c)| {
                (
                    if w.is_empty() {
                        String::new()
                    } else {
                        w.render(&self.alphabet)
                    },
                    c,
                )
            })
            .collect();
        f.write_str(&format_combination(
            rendered.iter().map(|(w, c)| (w.as_str(), *c)),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alphabet(spec: &[(&str, u32)]) -> AlphabetRef {
        Alphabet::new(
            spec.iter()
                .map(|(n, d)| GradedGenerator::new(*n, *d).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn word_order_is_degree_length_lex() {
        let a = alphabet(&[("a", 1), ("b", 2)]);
        let w = |l: &[u16]| Word::new(&a, l.to_vec());
        assert!(w(&[1]) < w(&[0, 0]));
        assert!(w(&[0, 1]) < w(&[1, 0]));
        assert!(w(&[1, 0]) < w(&[0, 0, 0]));
        assert!(w(&[0, 0, 0]) < w(&[1, 1]));
    }

    #[test]
    fn parse_and_display() {
        let a = alphabet(&[("a1", 1), ("a2", 1), ("b1", 2)]);
        let p = parse_nc("a1*a2 + a2*a1 - 2*b1", &a).unwrap();
        assert_eq!(p.to_string(), "a2*a1 + a1*a2 - 2*b1");
        assert!(p.is_homogeneous());
        let q = parse_nc("(a1 + a2)^2", &a).unwrap();
        assert_eq!(q.to_string(), "a2*a2 + a2*a1 + a1*a2 + a1*a1");
        assert_eq!(parse_nc("3", &a).unwrap().to_string(), "3");
        assert_eq!(parse_nc("0", &a).unwrap().to_string(), "0");
        assert!(parse_nc("a1*a3", &a).is_err());
    }

    #[test]
    fn commutator_signs() {
        let a = alphabet(&[("p", 1), ("q", 1), ("r", 2)]);
        let p = NcPoly::var(&a, "p").unwrap();
        let q = NcPoly::var(&a, "q").unwrap();
        let r = NcPoly::var(&a, "r").unwrap();
        assert_eq!(p.graded_commutator(&q).to_string(), "q*p + p*q");
        assert_eq!(p.graded_commutator(&r).to_string(), "-r*p + p*r");
    }

    #[test]
    fn substitution_replaces_letters() {
        let a = alphabet(&[("a", 1), ("b", 2)]);
        let t = alphabet(&[("a", 1)]);
        let p = parse_nc("a*b - b*a", &a).unwrap();
        let img = NcPoly::monomial(&t, &["a", "a"]).unwrap();
        let out = p.substitute(&[None, Some(img)], &t).unwrap();
        assert!(out.is_zero());
    }
}
