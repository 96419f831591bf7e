use super::presentation::{CoefficientRing, NCPresentation};
use super::word::{Alphabet, NcPoly};
use crate::algebra::{free_graded_series, HilbertSeries};
use crate::sullivan::LieAlgebraData;
use crate::{int, Rational, Result};

/// `T(L)/(x y - (-1)^{|x||y|} y x - [x, y])` without any elimination.
pub fn enveloping_raw(l: &LieAlgebraData) -> Result<NCPresentation> {
    l.validate()?;
    let alphabet = Alphabet::new(l.basis().to_vec())?;
    let n = l.dim();
    let mut relations = Vec::new();
    for k in 0..n {
        for m in k..n {
            if k == m && !l.basis()[k].is_odd() {
                continue;
            }
            let x = NcPoly::letter(&alphabet, k);
            let y = NcPoly::letter(&alphabet, m);
            let mut rel = x.graded_commutator(&y);
            for (t, c) in l.bracket(k, m) {
                rel = rel.sub(&NcPoly::letter(&alphabet, t).scale(&c));
            }
            relations.push(rel);
        }
    }
    NCPresentation::new(alphabet, CoefficientRing::Rational, relations)
}

/// Central even basis elements `e_m` with `[e_k, e_k] = c e_m` for an odd
/// `e_k`, paired with the first such `k` and the constant `c`.
fn eliminable(l: &LieAlgebraData) -> Vec<(usize, usize, Rational)> {
    let n = l.dim();
    let mut out: Vec<(usize, usize, Rational)> = Vec::new();
    for k in 0..n {
        if !l.basis()[k].is_odd() {
            continue;
        }
        let v = l.bracket(k, k);
        if v.len() != 1 {
            continue;
        }
        let (&m, c) = v.iter().next().expect("one term");
        let central = (0..n).all(|x| l.bracket(m, x).is_empty() && l.bracket(x, m).is_empty());
        if central && !l.basis()[m].is_odd() && out.iter().all(|(mm, _, _)| *mm != m) {
            out.push((m, k, c.clone()));
        }
    }
    out
}

/// The universal enveloping algebra of `l`, with each central even element
/// `e_m = (1/c)[e_k, e_k]` (for odd `e_k`) eliminated as `e_m = (2/c) e_k^2`.
pub fn enveloping(l: &LieAlgebraData) -> Result<NCPresentation> {
    let mut p = enveloping_raw(l)?;
    let mut todo = eliminable(l);
    // eliminate from the highest index down so earlier indices stay valid
    todo.sort_by_key(|t| std::cmp::Reverse(t.0));
    for (m, k, c) in todo {
        let name = l.basis()[k].name().to_string();
        let current = p
            .generators()
            .iter()
            .position(|g| g.name() == l.basis()[m].name())
            .expect("present");
        p = p.eliminate(current, |t| {
            Ok(NcPoly::monomial(t, &[name.as_str(), name.as_str()])?.scale(&(int(2) / &c)))
        })?;
    }
    Ok(p)
}

/// Graded dimension of `U(L)` by Poincaré–Birkhoff–Witt: exterior on the odd
/// basis elements tensor polynomial on the even ones.
pub fn pbw_series(l: &LieAlgebraData, bound: u32) -> HilbertSeries {
    free_graded_series(l.basis(), bound)
}

/// Whether `gh + hg` of odd generators reduces to something central and even
/// generators commute with everything, in the completed system of `p`.
pub fn graded_commutativity_holds(p: &NCPresentation, bound: u32) -> Result<bool> {
    let sys = p.rewrite_system(bound)?;
    let gens = p.generators();
    let a = p.alphabet();
    let letters: Vec<NcPoly> = (0..gens.len()).map(|i| NcPoly::letter(a, i)).collect();
    for (i, gi) in gens.iter().enumerate() {
        for (j, gj) in gens.iter().enumerate() {
            if gi.degree() + gj.degree() > bound {
                continue;
            }
            let c = sys.reduce(&letters[i].graded_commutator(&letters[j]));
            if !gi.is_odd() || !gj.is_odd() {
                if !c.is_zero() {
                    return Ok(false);
                }
                continue;
            }
            for (k, gk) in gens.iter().enumerate() {
                if gi.degree() + gj.degree() + gk.degree() > bound {
                    continue;
                }
                let lhs = c.mul(&letters[k]);
                let rhs = letters[k].mul(&c);
                if !sys.reduce(&lhs.sub(&rhs)).is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
