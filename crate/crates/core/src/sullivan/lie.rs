use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use super::model::{pairing_poly, ModelFragment};
use crate::algebra::{ensure_unique, GradedGenerator};
use crate::{Error, Rational, Result};

/// A linear combination of basis elements, keyed by basis index.
pub type LieVector = BTreeMap<usize, Rational>;

/// A graded Lie algebra given by a basis and structure constants
/// `[e_k, e_l] = Σ_m c^m_{kl} e_m`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebraData {
    basis: Vec<GradedGenerator>,
    table: BTreeMap<(usize, usize), LieVector>,
}

fn sign(e: u32) -> Rational {
    if e.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn axpy(acc: &mut LieVector, c: &Rational, x: &LieVector) {
    for (m, a) in x {
        let e = acc.entry(*m).or_insert_with(Rational::zero);
        *e += c * a;
        if e.is_zero() {
            acc.remove(m);
        }
    }
}

impl LieAlgebraData {
    /// Builds the algebra from the brackets of ordered basis pairs. Pairs not
    /// listed bracket to zero; degree additivity is enforced.
    pub fn new(
        basis: Vec<GradedGenerator>,
        brackets: impl IntoIterator<Item = ((usize, usize), LieVector)>,
    ) -> Result<Self> {
        ensure_unique(&basis)?;
        let mut table = BTreeMap::new();
        for ((k, l), v) in brackets {
            let v: LieVector = v.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if k >= basis.len() || l >= basis.len() || v.keys().any(|&m| m >= basis.len()) {
                return Err(Error::InvalidLie(
                    "bracket refers to a missing basis element".into(),
                ));
            }
            let target = basis[k].degree() + basis[l].degree();
            if let Some(&m) = v.keys().find(|&&m| basis[m].degree() != target) {
                return Err(Error::InvalidLie(format!(
                    "[{}, {}] has a component on {} of the wrong degree",
                    basis[k].name(),
                    basis[l].name(),
                    basis[m].name()
                )));
            }
            if !v.is_empty() {
                table.insert((k, l), v);
            }
        }
        Ok(Self { basis, table })
    }

    pub fn basis(&self) -> &[GradedGenerator] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.basis.iter().map(GradedGenerator::degree).collect()
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|g| g.name() == name)
    }

    pub fn is_abelian(&self) -> bool {
        self.table.is_empty()
    }

    pub fn bracket(&self, k: usize, l: usize) -> LieVector {
        self.table.get(&(k, l)).cloned().unwrap_or_default()
    }

    /// Bracket of named basis elements.
    pub fn bracket_named(&self, x: &str, y: &str) -> Result<LieVector> {
        let k = self
            .position(x)
            .ok_or_else(|| Error::UnknownGenerator(x.into()))?;
        let l = self
            .position(y)
            .ok_or_else(|| Error::UnknownGenerator(y.into()))?;
        Ok(self.bracket(k, l))
    }

    /// Nonzero brackets of ordered pairs, in index order.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = ((usize, usize), &LieVector)> {
        self.table.iter().map(|(k, v)| (*k, v))
    }

    /// Bilinear extension of the bracket.
    pub fn bracket_vec(&self, x: &LieVector, y: &LieVector) -> LieVector {
        let mut out = LieVector::new();
        for (k, a) in x {
            for (l, b) in y {
                if let Some(v) = self.table.get(&(*k, *l)) {
                    axpy(&mut out, &(a * b), v);
                }
            }
        }
        out
    }

    fn unit(&self, k: usize) -> LieVector {
        LieVector::from([(k, Rational::one())])
    }

    /// `[x, y] = -(-1)^{|x||y|} [y, x]` on all basis pairs.
    pub fn check_antisymmetry(&self) -> Result<()> {
        let n = self.dim();
        for k in 0..n {
            for l in k..n {
                let s = sign(self.basis[k].degree() * self.basis[l].degree());
                let mut sum = self.bracket(k, l);
                axpy(&mut sum, &s, &self.bracket(l, k));
                if !sum.is_empty() {
                    return Err(Error::InvalidLie(format!(
                        "antisymmetry fails for [{}, {}]",
                        self.basis[k].name(),
                        self.basis[l].name()
                    )));
                }
            }
        }
        Ok(())
    }

    /// `[x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]` on all basis triples.
    pub fn check_jacobi(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (x, y, z) = (self.unit(i), self.unit(j), self.unit(k));
                    let lhs = self.bracket_vec(&x, &self.bracket_vec(&y, &z));
                    let mut rhs = self.bracket_vec(&self.bracket_vec(&x, &y), &z);
                    let s = sign(self.basis[i].degree() * self.basis[j].degree());
                    axpy(
                        &mut rhs,
                        &s,
                        &self.bracket_vec(&y, &self.bracket_vec(&x, &z)),
                    );
                    if lhs != rhs {
                        return Err(Error::InvalidLie(format!(
                            "Jacobi identity fails for ({}, {}, {})",
                            self.basis[i].name(),
                            self.basis[j].name(),
                            self.basis[k].name()
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        self.check_antisymmetry()?;
        self.check_jacobi()
    }

    /// Multiplies every structure constant by `lambda`.
    pub fn scaled(&self, lambda: &Rational) -> Self {
        let table = if lambda.is_zero() {
            BTreeMap::new()
        } else {
            self.table
                .iter()
                .map(|(k, v)| (*k, v.iter().map(|(m, c)| (*m, c * lambda)).collect()))
                .collect()
        };
        Self {
            basis: self.basis.clone(),
            table,
        }
    }

    /// Renders a vector such as `2*b1 - c1`.
    pub fn format_vector(&self, v: &LieVector) -> String {
        format_combination(v.iter().map(|(m, c)| (self.basis[*m].name(), c)))
    }
}

pub(crate) fn format_combination<'a>(
    terms: impl Iterator<Item = (&'a str, &'a Rational)>,
) -> String {
    let mut out = String::new();
    for (name, c) in terms {
        let neg = c < &Rational::zero();
        let a = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if name.is_empty() {
            out.push_str(&a.to_string());
        } else if a == Rational::one() {
            out.push_str(name);
        } else {
            out.push_str(&format!("{a}*{name}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for LieAlgebraData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self
            .basis
            .iter()
            .map(|g| format!("{} ({})", g.name(), g.degree()))
            .collect();
        writeln!(f, "basis: {}", names.join(", "))?;
        for ((k, l), v) in &self.table {
            if k <= l {
                writeln!(
                    f,
                    "[{}, {}] = {}",
                    self.basis[*k].name(),
                    self.basis[*l].name(),
                    self.format_vector(v)
                )?;
            }
        }
        Ok(())
    }
}

/// Default Lie basis names: `a_i` for `u`, `b_j` for `v`, `c_k` for `z`.
pub fn default_lie_names(m: &ModelFragment) -> Vec<String> {
    let a = (1..=m.u().len()).map(|i| format!("a{i}"));
    let b = (1..=m.v().len()).map(|j| format!("b{j}"));
    let c = (1..=m.z().len()).map(|k| format!("c{k}"));
    a.chain(b).chain(c).collect()
}

/// The homotopy Lie algebra with default basis names.
pub fn homotopy_lie(m: &ModelFragment) -> Result<LieAlgebraData> {
    homotopy_lie_named(m, &default_lie_names(m))
}

/// The homotopy Lie algebra: one basis element per model generator (degree
/// lowered by one), and the component of `[e_k, e_l]` on the dual of `v` equal
/// to `(-1)^{|e_l|+1} ⟨d_1 v; s e_k, s e_l⟩`.
pub fn homotopy_lie_named(m: &ModelFragment, names: &[String]) -> Result<LieAlgebraData> {
    let model = m.generators();
    if names.len() != model.len() {
        return Err(Error::InvalidLie(format!(
            "expected {} basis names, got {}",
            model.len(),
            names.len()
        )));
    }
    let basis = model
        .iter()
        .zip(names)
        .map(|(g, n)| GradedGenerator::new(n.clone(), g.degree() - 1))
        .collect::<Result<Vec<_>>>()
        .map_err(|_| Error::InvalidLie("model generator of degree 1 has no Lie dual".into()))?;
    let nu = m.u().len();
    let mut table: BTreeMap<(usize, usize), LieVector> = BTreeMap::new();
    for (j, (_, q)) in m.quadratic_part().iter().enumerate() {
        if q.is_zero() {
            continue;
        }
        let target = nu + j;
        for k in 0..nu {
            for (l, dual) in basis.iter().enumerate().take(nu) {
                let c = pairing_poly(q, &model, &[k, l])? * sign(dual.degree() + 1);
                if !c.is_zero() {
                    table.entry((k, l)).or_default().insert(target, c);
                }
            }
        }
    }
    LieAlgebraData::new(basis, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial, Vars};
    use crate::sullivan::{build_formal_model, CohomPresentation};

    fn model(names: &[&str], rels: &[&str], ext: &[u32]) -> ModelFragment {
        let v = Vars::uniform(names, 2).unwrap();
        let rels = rels
            .iter()
            .map(|r| parse_polynomial(r, &v).unwrap())
            .collect();
        let ext = ext
            .iter()
            .enumerate()
            .map(|(i, d)| GradedGenerator::new(format!("z{}", i + 1), *d).unwrap())
            .collect();
        build_formal_model(&CohomPresentation::new(v, rels, ext).unwrap()).unwrap()
    }

    fn vec_of(pairs: &[(usize, i64)]) -> LieVector {
        pairs.iter().map(|(m, c)| (*m, crate::int(*c))).collect()
    }

    #[test]
    fn so8_brackets() {
        let m = model(
            &["x1", "x2"],
            &["x1^2+x2^2+x1*x2", "(x1+x2)^2*x1^2*x2^2"],
            &[7, 7],
        );
        let l = homotopy_lie(&m).unwrap();
        let b1 = l.position("b1").unwrap();
        assert_eq!(l.bracket_named("a1", "a1").unwrap(), vec_of(&[(b1, 2)]));
        assert_eq!(l.bracket_named("a2", "a2").unwrap(), vec_of(&[(b1, 2)]));
        assert_eq!(l.bracket_named("a1", "a2").unwrap(), vec_of(&[(b1, 1)]));
        assert_eq!(l.bracket_named("a2", "a1").unwrap(), vec_of(&[(b1, 1)]));
        assert!(l.bracket_named("a1", "b1").unwrap().is_empty());
        assert_eq!(l.degrees(), vec![1, 1, 2, 10, 6, 6]);
        l.validate().unwrap();
    }

    #[test]
    fn su_diagonal_brackets() {
        let m = model(&["x1", "x2"], &["x1^2+x2^2", "x1^4+x2^4"], &[5, 9]);
        let l = homotopy_lie(&m).unwrap();
        assert_eq!(l.bracket_named("a1", "a1").unwrap(), vec_of(&[(2, 2)]));
        assert!(l.bracket_named("a1", "a2").unwrap().is_empty());
        l.validate().unwrap();
    }

    #[test]
    fn zero_differential_is_abelian() {
        let m = model(&["x"], &[], &[3]);
        let l = homotopy_lie(&m).unwrap();
        assert!(l.is_abelian());
        l.validate().unwrap();
    }

    #[test]
    fn scaling_multiplies_constants() {
        let m = model(&["x1", "x2"], &["x1^2+x2^2+x1*x2"], &[]);
        let l = homotopy_lie(&m).unwrap().scaled(&crate::int(12));
        assert_eq!(l.bracket_named("a1", "a1").unwrap(), vec_of(&[(2, 24)]));
    }

    #[test]
    fn invalid_tables_are_rejected() {
        let basis = vec![
            GradedGenerator::new("p", 1).unwrap(),
            GradedGenerator::new("q", 2).unwrap(),
        ];
        let wrong_degree = LieAlgebraData::new(basis.clone(), [((0, 1), vec_of(&[(1, 1)]))]);
        assert!(matches!(wrong_degree, Err(Error::InvalidLie(_))));
        let basis3 = vec![
            GradedGenerator::new("p", 2).unwrap(),
            GradedGenerator::new("q", 2).unwrap(),
            GradedGenerator::new("r", 4).unwrap(),
        ];
        let lopsided = LieAlgebraData::new(basis3, [((0, 1), vec_of(&[(2, 1)]))]).unwrap();
        assert!(lopsided.check_antisymmetry().is_err());
    }

    #[test]
    fn jacobi_failure_is_detected() {
        // degree-2 elements p, q, r with [p,q] = r and [p,r] = s, [q,r] = 0,
        // [q,s] = t: the Jacobi identity fails on (p, q, r).
        let names = ["p", "q", "r", "s", "t"];
        let degs = [2, 2, 4, 6, 8];
        let basis = names
            .iter()
            .zip(degs)
            .map(|(n, d)| GradedGenerator::new(*n, d).unwrap())
            .collect();
        let entries = [
            ((0, 1), vec_of(&[(2, 1)])),
            ((1, 0), vec_of(&[(2, -1)])),
            ((0, 2), vec_of(&[(3, 1)])),
            ((2, 0), vec_of(&[(3, -1)])),
            ((1, 3), vec_of(&[(4, 1)])),
            ((3, 1), vec_of(&[(4, -1)])),
        ];
        let l = LieAlgebraData::new(basis, entries).unwrap();
        l.check_antisymmetry().unwrap();
        assert!(l.check_jacobi().is_err());
    }

    #[test]
    fn display_lists_unordered_pairs_once() {
        let m = model(&["x1", "x2"], &["x1^2+x2^2+x1*x2"], &[]);
        let text = homotopy_lie(&m).unwrap().to_string();
        assert!(text.contains("[a1, a2] = b1"));
        assert!(!text.contains("[a2, a1]"));
    }
}
