use num::Zero;

use super::presentation::CohomPresentation;
use crate::algebra::{GradedGenerator, Polynomial, VarContext};
use crate::{Error, Rational, Result};

/// The three kinds of minimal-model generators of a formal presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    /// Even cocycles, one per polynomial generator.
    U,
    /// Odd generators killing the relations.
    V,
    /// Odd cocycles, one per exterior generator.
    Z,
}

/// Generators `u, v, z` of the minimal model with `d(v_j) = relation_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModelFragment {
    vars: VarContext,
    v: Vec<GradedGenerator>,
    z: Vec<GradedGenerator>,
    differential: Vec<Polynomial>,
}

fn fresh_name(base: String, taken: &dyn Fn(&str) -> bool) -> String {
    let mut name = base;
    while taken(&name) {
        name.push('\'');
    }
    name
}

/// Builds the model `(Λ(u, v, z), d)` with `d(u) = d(z) = 0` and
/// `d(v_j) = relation_j`. The `v` generators are named `v1, v2, …`.
pub fn build_formal_model(pres: &CohomPresentation) -> Result<ModelFragment> {
    let vars = pres.vars().clone();
    let mut v = Vec::with_capacity(pres.relations().len());
    for (j, r) in pres.relations().iter().enumerate() {
        if !r.word_length_component(1).is_zero() {
            return Err(Error::Reduction(format!(
                "relation `{r}` is linear in a generator; eliminate it before building the model"
            )));
        }
        let deg = r.homogeneous_degree().expect("validated relation");
        let taken =
            |n: &str| vars.position(n).is_some() || pres.exterior().iter().any(|g| g.name() == n);
        let name = fresh_name(format!("v{}", j + 1), &taken);
        v.push(GradedGenerator::new(name, deg - 1)?);
    }
    Ok(ModelFragment {
        vars,
        v,
        z: pres.exterior().to_vec(),
        differential: pres.relations().to_vec(),
    })
}

impl ModelFragment {
    pub fn u(&self) -> &[GradedGenerator] {
        self.vars.generators()
    }

    pub fn v(&self) -> &[GradedGenerator] {
        &self.v
    }

    pub fn z(&self) -> &[GradedGenerator] {
        &self.z
    }

    /// Context of the `u` generators, in which all differentials live.
    pub fn u_vars(&self) -> &VarContext {
        &self.vars
    }

    /// All generators in the order `u, v, z`.
    pub fn generators(&self) -> Vec<GradedGenerator> {
        self.u()
            .iter()
            .chain(&self.v)
            .chain(&self.z)
            .cloned()
            .collect()
    }

    pub fn kinds(&self) -> Vec<GeneratorKind> {
        std::iter::repeat_n(GeneratorKind::U, self.u().len())
            .chain(std::iter::repeat_n(GeneratorKind::V, self.v.len()))
            .chain(std::iter::repeat_n(GeneratorKind::Z, self.z.len()))
            .collect()
    }

    /// `d(v_j)`.
    pub fn differential(&self) -> &[Polynomial] {
        &self.differential
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.generators().iter().position(|g| g.name() == name)
    }

    /// Word-length-2 component of each `d(v_j)`, zero entries included.
    pub fn quadratic_part(&self) -> Vec<(GradedGenerator, Polynomial)> {
        self.v
            .iter()
            .cloned()
            .zip(self.differential.iter().map(|p| p.word_length_component(2)))
            .collect()
    }

    fn index(&self, name: &str) -> Result<usize> {
        self.position(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// `⟨w_1⋯w_k; sx_k, …, sx_1⟩` with generators and suspended duals given by
    /// name; `args` is listed as written, i.e. `args[0] = sx_k`.
    pub fn pairing_eval(&self, word: &[&str], args: &[&str]) -> Result<Rational> {
        let word = word
            .iter()
            .map(|n| self.index(n))
            .collect::<Result<Vec<_>>>()?;
        let args = args
            .iter()
            .map(|n| self.index(n))
            .collect::<Result<Vec<_>>>()?;
        let degrees: Vec<u32> = self
            .generators()
            .iter()
            .map(GradedGenerator::degree)
            .collect();
        pairing_words(&degrees, &word, &args)
    }

    /// Linear extension of [`ModelFragment::pairing_eval`] to a polynomial in
    /// the `u` generators. Every term must have word length `args.len()`.
    pub fn pairing_eval_poly(&self, p: &Polynomial, args: &[&str]) -> Result<Rational> {
        let args = args
            .iter()
            .map(|n| self.index(n))
            .collect::<Result<Vec<_>>>()?;
        pairing_poly(p, &self.generators(), &args)
    }
}

pub(crate) fn pairing_poly(
    p: &Polynomial,
    model: &[GradedGenerator],
    args: &[usize],
) -> Result<Rational> {
    let degrees: Vec<u32> = model.iter().map(GradedGenerator::degree).collect();
    let positions: Vec<usize> = p
        .vars()
        .generators()
        .iter()
        .map(|g| {
            model
                .iter()
                .position(|h| h.name() == g.name())
                .ok_or_else(|| Error::UnknownGenerator(g.name().into()))
        })
        .collect::<Result<_>>()?;
    let mut total = Rational::zero();
    for (m, c) in p.terms() {
        let mut word = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            word.extend(std::iter::repeat_n(positions[i], e as usize));
        }
        total += c * pairing_words(&degrees, &word, args)?;
    }
    Ok(total)
}

/// Sums `ε_σ ⟨w_σ(1); sx_1⟩ ⋯ ⟨w_σ(k); sx_k⟩` over all permutations, where
/// `⟨v; sx⟩ = (-1)^{deg v}` if `sx` is the dual of `v` and 0 otherwise, and
/// `ε_σ` is the Koszul sign of reordering the word.
fn pairing_words(degrees: &[u32], word: &[usize], args: &[usize]) -> Result<Rational> {
    let k = word.len();
    if args.len() != k {
        return Err(Error::Arity {
            word: k,
            args: args.len(),
        });
    }
    // sx_i = args[k - i], so position i (0-based) pairs with args[k - 1 - i]
    let targets: Vec<usize> = args.iter().rev().copied().collect();
    let mut used = vec![false; k];
    let mut chosen = Vec::with_capacity(k);
    let mut total = 0i64;
    fn go(
        degrees: &[u32],
        word: &[usize],
        targets: &[usize],
        used: &mut [bool],
        chosen: &mut Vec<usize>,
        total: &mut i64,
    ) {
        let i = chosen.len();
        if i == targets.len() {
            let mut sign = 1i64;
            for a in 0..chosen.len() {
                for b in a + 1..chosen.len() {
                    let (p, q) = (chosen[a], chosen[b]);
                    if p > q && degrees[word[p]] % 2 == 1 && degrees[word[q]] % 2 == 1 {
                        sign = -sign;
                    }
                }
                if degrees[word[chosen[a]]] % 2 == 1 {
                    sign = -sign;
                }
            }
            *total += sign;
            return;
        }
        for j in 0..word.len() {
            if !used[j] && word[j] == targets[i] {
                used[j] = true;
                chosen.push(j);
                go(degrees, word, targets, used, chosen, total);
                chosen.pop();
                used[j] = false;
            }
        }
    }
    go(degrees, word, &targets, &mut used, &mut chosen, &mut total);
    Ok(Rational::from_integer(total.into()))
}
