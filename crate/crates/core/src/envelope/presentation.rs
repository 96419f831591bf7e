use std::fmt;

use serde::Serialize;

use super::rewrite::RewriteSystem;
use super::word::{Alphabet, AlphabetRef, NcPoly};
use crate::algebra::{GradedGenerator, HilbertSeries};
use crate::{Error, Result};

/// Coefficient ring of a presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoefficientRing {
    Rational,
    Integral,
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoefficientRing::Rational => "rational",
            CoefficientRing::Integral => "integral",
        })
    }
}

/// A generator removed by substituting an expression in the remaining ones.
#[derive(Clone, Debug, PartialEq)]
pub struct Elimination {
    pub generator: GradedGenerator,
    pub value: NcPoly,
}

impl fmt::Display for Elimination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.generator.name(), self.value)
    }
}

/// A graded associative algebra `T(generators)/(relations)`.
#[derive(Clone, Debug, PartialEq)]
pub struct NCPresentation {
    alphabet: AlphabetRef,
    ring: CoefficientRing,
    relations: Vec<NcPoly>,
    eliminations: Vec<Elimination>,
}

impl NCPresentation {
    /// Validates the relations: same alphabet, homogeneous, and with integer
    /// coefficients over the integral ring. Zero relations are dropped.
    pub fn new(
        alphabet: AlphabetRef,
        ring: CoefficientRing,
        relations: Vec<NcPoly>,
    ) -> Result<Self> {
        let mut kept = Vec::with_capacity(relations.len());
        for r in relations {
            if !Alphabet::same(r.alphabet(), &alphabet) {
                return Err(Error::ContextMismatch);
            }
            if !r.is_homogeneous() {
                return Err(Error::Grading(format!("relation `{r}` is not homogeneous")));
            }
            if ring == CoefficientRing::Integral && !r.has_integer_coefficients() {
                return Err(Error::Grading(format!(
                    "integral relation `{r}` has a non-integer coefficient"
                )));
            }
            if !r.is_zero() {
                kept.push(r);
            }
        }
        Ok(Self {
            alphabet,
            ring,
            relations: kept,
            eliminations: Vec::new(),
        })
    }

    pub fn alphabet(&self) -> &AlphabetRef {
        &self.alphabet
    }

    pub fn generators(&self) -> &[GradedGenerator] {
        self.alphabet.generators()
    }

    pub fn ring(&self) -> CoefficientRing {
        self.ring
    }

    pub fn relations(&self) -> &[NcPoly] {
        &self.relations
    }

    pub fn eliminations(&self) -> &[Elimination] {
        &self.eliminations
    }

    /// Removes generator `index` by substituting `value`, an element over the
    /// remaining generators, into every relation.
    pub fn eliminate(
        &self,
        index: usize,
        value_of: impl FnOnce(&AlphabetRef) -> Result<NcPoly>,
    ) -> Result<Self> {
        let gens = self.generators();
        let generator = gens[index].clone();
        let kept: Vec<GradedGenerator> = gens
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != index)
            .map(|(_, g)| g.clone())
            .collect();
        let target = Alphabet::new(kept)?;
        let value = value_of(&target)?;
        if value.degree().is_some_and(|d| d != generator.degree()) || !value.is_homogeneous() {
            return Err(Error::Grading(format!(
                "value for `{}` has the wrong degree",
                generator.name()
            )));
        }
        let mut images = vec![None; gens.len()];
        images[index] = Some(value.clone());
        let relations = self
            .relations
            .iter()
            .map(|r| r.substitute(&images, &target))
            .collect::<Result<Vec<_>>>()?;
        let mut eliminations = Vec::with_capacity(self.eliminations.len() + 1);
        for e in &self.eliminations {
            let value = e.value.substitute(&images, &target)?;
            eliminations.push(Elimination {
                generator: e.generator.clone(),
                value,
            });
        }
        eliminations.push(Elimination { generator, value });
        let mut out = Self::new(target, self.ring, relations)?;
        out.eliminations = eliminations;
        Ok(out)
    }

    /// Completes the relations through `bound`.
    pub fn rewrite_system(&self, bound: u32) -> Result<RewriteSystem> {
        RewriteSystem::complete(&self.alphabet, &self.relations, bound)
    }

    /// Dimensions of the presented algebra (over the rationals) in degrees
    /// `0..=bound`.
    pub fn normal_counts(&self, bound: u32) -> Result<HilbertSeries> {
        self.rewrite_system(bound)?.normal_counts(bound)
    }
}

impl fmt::Display for NCPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .generators()
            .iter()
            .map(|g| format!("{} ({})", g.name(), g.degree()))
            .collect();
        writeln!(f, "ring: {}", self.ring)?;
        writeln!(f, "generators: {}", gens.join(", "))?;
        writeln!(f, "relations:")?;
        for r in &self.relations {
            writeln!(f, "  {r}")?;
        }
        for e in &self.eliminations {
            writeln!(f, "eliminated: {e}")?;
        }
        Ok(())
    }
}

/// Tri-state outcome of a verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Verdict {
    Match,
    Mismatch { degree: u32 },
    Skipped { reason: String },
}

impl Verdict {
    pub fn from_mismatch(degree: Option<u32>) -> Self {
        match degree {
            None => Verdict::Match,
            Some(degree) => Verdict::Mismatch { degree },
        }
    }

    pub fn is_match(&self) -> bool {
        matches!(self, Verdict::Match)
    }

    pub fn is_mismatch(&self) -> bool {
        matches!(self, Verdict::Mismatch { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Match => f.write_str("match"),
            Verdict::Mismatch { degree } => write!(f, "mismatch at degree {degree}"),
            Verdict::Skipped { reason } => write!(f, "skipped ({reason})"),
        }
    }
}

/// Degreewise comparison of two series.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeriesComparison {
    pub computed: HilbertSeries,
    pub expected: HilbertSeries,
    pub verdict: Verdict,
}

impl SeriesComparison {
    pub fn new(computed: HilbertSeries, expected: HilbertSeries) -> Self {
        let verdict = Verdict::from_mismatch(computed.first_mismatch(&expected));
        Self {
            computed,
            expected,
            verdict,
        }
    }
}

/// Compares the normal-word counts of `p` with `series` through `bound`.
pub fn verify_presentation(
    p: &NCPresentation,
    series: &HilbertSeries,
    bound: u32,
) -> Result<SeriesComparison> {
    let computed = p.normal_counts(bound)?;
    Ok(SeriesComparison::new(computed, series.truncate(bound)))
}

/// Compares graded ranks of an integral presentation (tensored with the
/// rationals) with those of a rational one.
pub fn rank_compare(
    integral: &NCPresentation,
    rational: &NCPresentation,
    bound: u32,
) -> Result<SeriesComparison> {
    Ok(SeriesComparison::new(
        integral.normal_counts(bound)?,
        rational.normal_counts(bound)?,
    ))
}

/// Outcome of comparing two presentations of the same algebra.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GoldenComparison {
    pub generators_match: bool,
    pub ideals_match: bool,
    pub series: SeriesComparison,
    pub verdict: Verdict,
}

/// Checks that two presentations over the same generators (matched by name
/// and degree) define the same two-sided ideal through `bound`, and that
/// their graded dimensions agree.
pub fn compare_presentations(
    actual: &NCPresentation,
    expected: &NCPresentation,
    bound: u32,
) -> Result<GoldenComparison> {
    let mut a_gens: Vec<&GradedGenerator> = actual.generators().iter().collect();
    let mut e_gens: Vec<&GradedGenerator> = expected.generators().iter().collect();
    a_gens.sort();
    e_gens.sort();
    let generators_match = a_gens == e_gens;
    let sys_a = actual.rewrite_system(bound)?;
    let sys_e = expected.rewrite_system(bound)?;
    let series = SeriesComparison::new(sys_a.normal_counts(bound)?, sys_e.normal_counts(bound)?);
    let mut first_bad: Option<u32> = None;
    if generators_match {
        let mut check = |rels: &[NcPoly], sys: &RewriteSystem| -> Result<()> {
            for r in rels {
                let d = r.degree().unwrap_or(0);
                if d > bound {
                    continue;
                }
                if !sys.reduce(&r.embed(sys.alphabet())?).is_zero() {
                    first_bad = Some(first_bad.map_or(d, |b| b.min(d)));
                }
            }
            Ok(())
        };
        check(expected.relations(), &sys_a)?;
        check(actual.relations(), &sys_e)?;
    }
    let ideals_match = generators_match && first_bad.is_none();
    let verdict = if !generators_match {
        let d = a_gens
            .iter()
            .zip(&e_gens)
            .find(|(a, e)| a != e)
            .map(|(a, e)| a.degree().min(e.degree()))
            .or_else(|| {
                a_gens
                    .get(e_gens.len())
                    .or(e_gens.get(a_gens.len()))
                    .map(|g| g.degree())
            })
            .unwrap_or(0);
        Verdict::Mismatch { degree: d }
    } else if let Some(d) = first_bad {
        Verdict::Mismatch { degree: d }
    } else {
        series.verdict.clone()
    };
    Ok(GoldenComparison {
        generators_match,
        ideals_match,
        series,
        verdict,
    })
}
