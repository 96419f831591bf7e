//! Expected Pontrjagin rings of the catalog loop spaces, rational and
//! integral.

use num::One;

use super::CatalogCase;
use crate::algebra::GradedGenerator;
use crate::envelope::{Alphabet, AlphabetRef, CoefficientRing, NCPresentation, NcPoly};
use crate::{int, Error, Rational, Result};

struct Builder {
    alphabet: AlphabetRef,
    relations: Vec<NcPoly>,
}

impl Builder {
    fn new(gens: Vec<(String, u32)>) -> Result<Self> {
        let gens = gens
            .into_iter()
            .map(|(n, d)| GradedGenerator::new(n, d))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            alphabet: Alphabet::new(gens)?,
            relations: Vec::new(),
        })
    }

    fn g(&self, name: &str) -> NcPoly {
        NcPoly::var(&self.alphabet, name).expect("generator declared by the builder")
    }

    fn product(&self, names: &[&str]) -> NcPoly {
        NcPoly::monomial(&self.alphabet, names).expect("generators declared by the builder")
    }

    fn constant(&self, c: i64) -> NcPoly {
        NcPoly::constant(&self.alphabet, int(c))
    }

    fn push(&mut self, p: NcPoly) {
        self.relations.push(p);
    }

    /// `g_i g_i - g_1 g_1` for `i ≥ 2`.
    fn equal_squares(&mut self, names: &[String]) {
        if let Some(first) = names.first() {
            let base = self.product(&[first, first]);
            for n in &names[1..] {
                let r = self.product(&[n, n]).sub(&base);
                self.push(r);
            }
        }
    }

    fn anticommuting(&mut self, names: &[String]) {
        for (i, p) in names.iter().enumerate() {
            for q in &names[i + 1..] {
                let r = self.product(&[p, q]).add(&self.product(&[q, p]));
                self.push(r);
            }
        }
    }

    /// Graded commutators of every pair involving an even generator.
    fn even_central(&mut self) {
        let gens = self.alphabet.generators().to_vec();
        for (i, x) in gens.iter().enumerate() {
            for y in &gens[i + 1..] {
                if x.is_odd() && y.is_odd() {
                    continue;
                }
                let r = self.g(x.name()).graded_commutator(&self.g(y.name()));
                self.push(r);
            }
        }
    }

    fn finish(self, ring: CoefficientRing) -> Result<NCPresentation> {
        NCPresentation::new(self.alphabet, ring, self.relations)
    }
}

fn indexed(prefix: &str, range: impl IntoIterator<Item = u32>) -> Vec<String> {
    range.into_iter().map(|i| format!("{prefix}{i}")).collect()
}

fn with_degree(names: &[String], degree: impl Fn(usize) -> u32) -> Vec<(String, u32)> {
    names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.clone(), degree(i)))
        .collect()
}

/// Odd degree-one generators with equal squares and pairwise anticommuting,
/// tensor a polynomial algebra on `even`.
fn clifford_type(
    odd: &[String],
    even: Vec<(String, u32)>,
    ring: CoefficientRing,
) -> Result<NCPresentation> {
    let mut gens = with_degree(odd, |_| 1);
    gens.extend(even);
    let mut b = Builder::new(gens)?;
    b.equal_squares(odd);
    b.anticommuting(odd);
    b.even_central();
    b.finish(ring)
}

fn rational(case: CatalogCase) -> Result<NCPresentation> {
    let q = CoefficientRing::Rational;
    match case {
        CatalogCase::SuOdd { n } | CatalogCase::SuEven { n } => {
            let c_count = if matches!(case, CatalogCase::SuOdd { .. }) {
                n
            } else {
                n - 1
            };
            let mut even: Vec<(String, u32)> =
                (2..=n).map(|j| (format!("b{j}"), 4 * j - 2)).collect();
            even.extend((1..=c_count).map(|k| (format!("c{k}"), 4 * k)));
            clifford_type(&indexed("a", 1..=n), even, q)
        }
        CatalogCase::SoEven { n } => {
            let mut even: Vec<(String, u32)> =
                (2..=n).map(|k| (format!("b{k}"), 4 * k - 2)).collect();
            even.push((format!("b{}", n + 1), 2 * n));
            clifford_type(&indexed("a", 1..=n), even, q)
        }
        CatalogCase::So8 => {
            let a = indexed("a", 1..=2);
            let mut gens = with_degree(&a, |_| 1);
            gens.extend([
                ("b2".to_string(), 10),
                ("c1".to_string(), 6),
                ("c2".to_string(), 6),
            ]);
            let mut b = Builder::new(gens)?;
            let a1a1 = b.product(&["a1", "a1"]);
            b.push(a1a1.sub(&b.product(&["a2", "a2"])));
            b.push(
                a1a1.sub(&b.product(&["a1", "a2"]))
                    .sub(&b.product(&["a2", "a1"])),
            );
            b.even_central();
            b.finish(q)
        }
        CatalogCase::E6T4 => {
            let even = [4u32, 5, 7, 8, 11]
                .iter()
                .map(|&j| (format!("b{j}"), 2 * j))
                .collect();
            clifford_type(&indexed("a", 1..=4), even, q)
        }
        CatalogCase::APartial { n, k } => {
            let a = indexed("a", 1..=k);
            let mut gens = with_degree(&a, |_| 1);
            gens.extend((n - k + 1..=n).map(|j| (format!("b{j}"), 2 * j - 2)));
            let mut b = Builder::new(gens)?;
            for x in &a {
                let r = b.product(&[x, x]);
                b.push(r);
            }
            b.anticommuting(&a);
            b.even_central();
            b.finish(q)
        }
    }
}

/// Generators of the integral loop homology of `Spin(2m+2)` as used for the
/// orthogonal cases: `y_1..y_{m-1}`, `(y_m+z)`, `(y_m-z)`, `(2y_{m+1})..(2y_{2m})`.
fn spin_generators(m: u32) -> Vec<(String, u32)> {
    let mut gens: Vec<(String, u32)> = (1..m).map(|i| (format!("y{i}"), 2 * i)).collect();
    gens.push((format!("(y{m}+z)"), 2 * m));
    gens.push((format!("(y{m}-z)"), 2 * m));
    gens.extend((m + 1..=2 * m).map(|j| (format!("(2y{j})"), 2 * j)));
    gens
}

/// The element `y_j` for `j < m` (with `y_0 = 1`).
fn spin_y(b: &Builder, j: u32) -> NcPoly {
    if j == 0 {
        b.constant(1)
    } else {
        b.g(&format!("y{j}"))
    }
}

/// The element `2y_j` written in the integral generators.
fn spin_twice_y(b: &Builder, m: u32, j: u32) -> NcPoly {
    if j < m {
        spin_y(b, j).scale(&int(2))
    } else if j == m {
        b.g(&format!("(y{m}+z)")).add(&b.g(&format!("(y{m}-z)")))
    } else {
        b.g(&format!("(2y{j})"))
    }
}

/// `y_i^2 - 2y_{i-1}y_{i+1} + 2y_{i-2}y_{i+2} - … ± 2y_{2i}` for `i < m`, and
/// the top relation with `y_m^2` replaced by `(y_m+z)(y_m-z)`.
fn spin_relations(b: &mut Builder, m: u32) {
    for i in 1..=m {
        let mut r = if i < m {
            spin_y(b, i).mul(&spin_y(b, i))
        } else {
            b.product(&[&format!("(y{m}+z)"), &format!("(y{m}-z)")])
        };
        for s in 1..=i {
            let term = spin_y(b, i - s).mul(&spin_twice_y(b, m, i + s));
            let sign = if s % 2 == 1 {
                -Rational::one()
            } else {
                Rational::one()
            };
            r = r.add(&term.scale(&sign));
        }
        b.push(r);
    }
}

fn integral(case: CatalogCase) -> Result<NCPresentation> {
    let z = CoefficientRing::Integral;
    match case {
        CatalogCase::SuOdd { n } | CatalogCase::SuEven { n } => {
            let z_count = if matches!(case, CatalogCase::SuOdd { .. }) {
                n
            } else {
                n - 1
            };
            let mut even: Vec<(String, u32)> =
                (2..=n).map(|i| (format!("y{i}"), 4 * i - 2)).collect();
            even.extend((1..=z_count).map(|i| (format!("z{i}"), 4 * i)));
            clifford_type(&indexed("x", 1..=n), even, z)
        }
        CatalogCase::SoEven { n } => {
            if n < 2 {
                return Err(Error::Parameter {
                    case: case.to_string(),
                    reason: "the integral presentation needs n >= 2 (y_1 must be a generator)"
                        .into(),
                });
            }
            let x = indexed("x", 1..=n);
            let mut gens = with_degree(&x, |_| 1);
            gens.extend(spin_generators(n));
            let mut b = Builder::new(gens)?;
            let r = b.product(&["x1", "x1"]).sub(&b.g("y1"));
            b.push(r);
            for i in 1..n as usize {
                let r = b
                    .product(&[&x[i - 1], &x[i - 1]])
                    .sub(&b.product(&[&x[i], &x[i]]));
                b.push(r);
            }
            b.anticommuting(&x);
            spin_relations(&mut b, n);
            b.even_central();
            b.finish(z)
        }
        CatalogCase::So8 => so8_integral(false),
        CatalogCase::E6T4 => {
            let x = indexed("x", 1..=4);
            let mut gens = with_degree(&x, |_| 1);
            gens.extend(
                [1u32, 2, 3, 4, 5, 7, 8, 11]
                    .iter()
                    .map(|&i| (format!("y{i}"), 2 * i)),
            );
            let mut b = Builder::new(gens)?;
            for k in &x {
                let r = b.product(&[k, k]).sub(&b.g("y1").scale(&int(12)));
                b.push(r);
            }
            b.anticommuting(&x);
            let r = b
                .g("y2")
                .scale(&int(2))
                .sub(&b.product(&["x1", "x1", "x1", "x1"]));
            b.push(r);
            let r = b
                .g("y3")
                .scale(&int(3))
                .sub(&b.product(&["x1", "x1", "y2"]));
            b.push(r);
            b.even_central();
            b.finish(z)
        }
        CatalogCase::APartial { n, k } => {
            let x = indexed("x", 1..=k);
            let mut gens = with_degree(&x, |_| 1);
            gens.extend((n - k + 1..=n).map(|j| (format!("y{j}"), 2 * j - 2)));
            let mut b = Builder::new(gens)?;
            for g in &x {
                let r = b.product(&[g, g]);
                b.push(r);
            }
            b.anticommuting(&x);
            b.even_central();
            b.finish(z)
        }
    }
}

/// The integral `SO(8)/T^2` presentation. With `as_printed` the mixed
/// relation is taken as `x_1^2 - x_1x_2 + x_2x_1`; otherwise as
/// `x_1^2 - x_1x_2 - x_2x_1`, matching `a_1^2 = a_1a_2 + a_2a_1`.
pub fn so8_integral(as_printed: bool) -> Result<NCPresentation> {
    let x = indexed("x", 1..=2);
    let mut gens = with_degree(&x, |_| 1);
    gens.extend(spin_generators(3));
    let mut b = Builder::new(gens)?;
    let x1x1 = b.product(&["x1", "x1"]);
    b.push(x1x1.sub(&b.g("y1")));
    b.push(x1x1.sub(&b.product(&["x2", "x2"])));
    let x2x1 = b.product(&["x2", "x1"]);
    let mixed = x1x1.sub(&b.product(&["x1", "x2"]));
    b.push(if as_printed {
        mixed.add(&x2x1)
    } else {
        mixed.sub(&x2x1)
    });
    spin_relations(&mut b, 3);
    b.even_central();
    b.finish(CoefficientRing::Integral)
}

/// The stated loop homology of a catalog space over `ring`.
pub fn expected_loop_homology(case: CatalogCase, ring: CoefficientRing) -> Result<NCPresentation> {
    case.validate()?;
    match ring {
        CoefficientRing::Rational => rational(case),
        CoefficientRing::Integral => integral(case),
    }
}

/// The integral Pontrjagin ring of a catalog space, as stated for the
/// torsion-free extension of `H_*(ΩG; Z)` by `H_*(T; Z)`.
pub fn integral_presentation(case: CatalogCase) -> Result<NCPresentation> {
    expected_loop_homology(case, CoefficientRing::Integral)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{free_graded_series, HilbertSeries};

    fn names(p: &NCPresentation) -> Vec<String> {
        p.generators()
            .iter()
            .map(|g| format!("{} {}", g.name(), g.degree()))
            .collect()
    }

    fn rels(p: &NCPresentation) -> Vec<String> {
        p.relations().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn su_odd_two_integral() {
        let p = integral_presentation(CatalogCase::SuOdd { n: 2 }).unwrap();
        assert_eq!(names(&p), vec!["x1 1", "x2 1", "y2 6", "z1 4", "z2 8"]);
        let r = rels(&p);
        assert_eq!(r[0], "x2*x2 - x1*x1");
        assert_eq!(r[1], "x2*x1 + x1*x2");
        assert_eq!(r.len(), 2 + 3 * 2 + 3);
        assert_eq!(p.ring(), CoefficientRing::Integral);
    }

    #[test]
    fn so_even_rational_two() {
        let p = expected_loop_homology(CatalogCase::SoEven { n: 2 }, CoefficientRing::Rational)
            .unwrap();
        assert_eq!(names(&p), vec!["a1 1", "a2 1", "b2 6", "b3 4"]);
        assert_eq!(rels(&p)[..2], ["a2*a2 - a1*a1", "a2*a1 + a1*a2"]);
    }

    #[test]
    fn so_even_integral_relations() {
        let p = integral_presentation(CatalogCase::SoEven { n: 2 }).unwrap();
        assert_eq!(
            names(&p),
            vec!["x1 1", "x2 1", "y1 2", "(y2+z) 4", "(y2-z) 4", "(2y3) 6", "(2y4) 8"]
        );
        let r = rels(&p);
        assert!(r.contains(&"y1*y1 - (y2-z) - (y2+z)".to_string()));
        assert!(r.contains(&"(y2+z)*(y2-z) - y1*(2y3) + (2y4)".to_string()));
        assert!(integral_presentation(CatalogCase::SoEven { n: 1 }).is_err());
    }

    #[test]
    fn so8_integral_forms() {
        let p = so8_integral(false).unwrap();
        let r = rels(&p);
        assert!(r.contains(&"-x2*x1 - x1*x2 + x1*x1".to_string()));
        assert!(r.contains(&"(y3+z)*(y3-z) - y2*(2y4) + y1*(2y5) - (2y6)".to_string()));
        assert!(rels(&so8_integral(true).unwrap()).contains(&"x2*x1 - x1*x2 + x1*x1".to_string()));
    }

    #[test]
    fn e6_integral_relations() {
        let p = integral_presentation(CatalogCase::E6T4).unwrap();
        let r = rels(&p);
        assert_eq!(r[0], "x1*x1 - 12*y1");
        assert!(r.contains(&"-x1*x1*x1*x1 + 2*y2".to_string()));
        assert!(r.contains(&"-x1*x1*y2 + 3*y3".to_string()));
    }

    #[test]
    fn partial_flag_shapes() {
        let p = integral_presentation(CatalogCase::APartial { n: 4, k: 2 }).unwrap();
        assert_eq!(names(&p), vec!["x1 1", "x2 1", "y3 4", "y4 6"]);
        let q = expected_loop_homology(
            CatalogCase::APartial { n: 4, k: 2 },
            CoefficientRing::Rational,
        )
        .unwrap();
        let gens = q.generators().to_vec();
        assert_eq!(q.normal_counts(12).unwrap(), free_graded_series(&gens, 12));
    }

    #[test]
    fn su_odd_one_is_polynomial_in_two_variables() {
        let p =
            expected_loop_homology(CatalogCase::SuOdd { n: 1 }, CoefficientRing::Rational).unwrap();
        let expected: Vec<i64> = (0..=12).map(|d| d / 4 + 1).collect();
        assert_eq!(
            p.normal_counts(12).unwrap(),
            HilbertSeries::from_coeffs(expected)
        );
    }
}
