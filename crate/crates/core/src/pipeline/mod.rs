//! End-to-end runs: cohomology presentation, Cartan reduction, minimal
//! model, homotopy Lie algebra, enveloping algebra and verification.

mod spec;

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

pub use spec::{parse_spec, SpecInput};

use crate::algebra::{GradedGenerator, HilbertSeries};
use crate::catalog::{catalog_space, splitting_series, CatalogCase};
use crate::envelope::{
    compare_presentations, enveloping, pbw_series, rank_compare, CoefficientRing, NCPresentation,
    SeriesComparison, Verdict,
};
use crate::ideal::cartan_reduce;
use crate::sullivan::{
    build_formal_model, default_lie_names, homotopy_lie_named, CohomPresentation, GeneratorKind,
};
use crate::{Error, Result};

/// Pipeline stages, in execution order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Catalog,
    CartanReduce,
    Model,
    Lie,
    Enveloping,
    Verify,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::Catalog => "catalog",
            Stage::CartanReduce => "cartan_reduce",
            Stage::Model => "model",
            Stage::Lie => "lie",
            Stage::Enveloping => "enveloping",
            Stage::Verify => "verify",
        })
    }
}

/// An error raised by one pipeline stage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageError {
    pub stage: Stage,
    pub error: Error,
}

impl fmt::Display for StageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} failed: {}", self.stage, self.error)
    }
}

impl std::error::Error for StageError {}

/// Which coefficient rings to target.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RingSelection {
    #[default]
    Rational,
    Integral,
    Both,
}

impl RingSelection {
    pub fn includes_integral(self) -> bool {
        self != RingSelection::Rational
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PipelineOptions {
    pub degree_bound: u32,
    pub verify: bool,
    pub ring: RingSelection,
    /// Last stage to run; [`Stage::Verify`] runs everything.
    pub stop_after: Stage,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        Self {
            degree_bound: 20,
            verify: false,
            ring: RingSelection::Rational,
            stop_after: Stage::Verify,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorSummary {
    pub name: String,
    pub degree: u32,
}

impl From<&GradedGenerator> for GeneratorSummary {
    fn from(g: &GradedGenerator) -> Self {
        Self {
            name: g.name().to_string(),
            degree: g.degree(),
        }
    }
}

fn summaries(gens: &[GradedGenerator]) -> Vec<GeneratorSummary> {
    gens.iter().map(GeneratorSummary::from).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CohomologySummary {
    pub generators: Vec<GeneratorSummary>,
    pub relations: Vec<String>,
    pub exterior: Vec<GeneratorSummary>,
    /// Exterior degrees split off by the Cartan reduction.
    pub split_exterior_degrees: Vec<u32>,
    pub eliminated_linear: Vec<String>,
    pub series: HilbertSeries,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModelGenerator {
    pub name: String,
    pub degree: u32,
    pub kind: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DifferentialEntry {
    pub generator: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModelSummary {
    pub generators: Vec<ModelGenerator>,
    pub differential: Vec<DifferentialEntry>,
    pub quadratic: Vec<DifferentialEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    /// Coefficients keyed by basis name, as exact `p/q` strings.
    pub value: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationSummary {
    pub ring: CoefficientRing,
    pub generators: Vec<GeneratorSummary>,
    pub relations: Vec<String>,
    pub eliminations: Vec<String>,
}

impl From<&NCPresentation> for PresentationSummary {
    fn from(p: &NCPresentation) -> Self {
        Self {
            ring: p.ring(),
            generators: summaries(p.generators()),
            relations: p.relations().iter().map(ToString::to_string).collect(),
            eliminations: p.eliminations().iter().map(ToString::to_string).collect(),
        }
    }
}

/// Outcomes of the verification oracles; every entry is always present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    /// Normal-word counts against the PBW series of the Lie algebra.
    pub pbw: Verdict,
    /// Computed enveloping presentation against the stated one.
    pub golden: Verdict,
    /// Integral against rational graded ranks.
    pub rank: Verdict,
    /// Series against `(1 + t)^rank` times the loop-group series.
    pub splitting: Verdict,
}

impl Verdicts {
    fn skipped(reason: &str) -> Self {
        let s = Verdict::Skipped {
            reason: reason.into(),
        };
        Self {
            pbw: s.clone(),
            golden: s.clone(),
            rank: s.clone(),
            splitting: s,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &Verdict)> {
        [
            ("pbw", &self.pbw),
            ("golden", &self.golden),
            ("rank", &self.rank),
            ("splitting", &self.splitting),
        ]
        .into_iter()
    }

    /// The first mismatch, or `Match` when nothing failed.
    pub fn overall(&self) -> Verdict {
        self.iter()
            .map(|(_, v)| v)
            .find(|v| v.is_mismatch())
            .cloned()
            .unwrap_or(Verdict::Match)
    }
}

/// Everything a pipeline run produced. Timings are kept out of the
/// serialized form so that structured output is reproducible.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PipelineReport {
    pub input: String,
    pub case: Option<CatalogCase>,
    pub degree_bound: u32,
    pub cohomology: CohomologySummary,
    pub model: Option<ModelSummary>,
    pub lie_basis: Vec<GeneratorSummary>,
    pub brackets: Vec<BracketEntry>,
    pub enveloping: Option<PresentationSummary>,
    pub relations: Vec<String>,
    pub integral: Option<PresentationSummary>,
    pub series: Option<HilbertSeries>,
    pub verdicts: Verdicts,
    #[serde(skip)]
    pub timings: Vec<(Stage, Duration)>,
}

struct Timer {
    timings: Vec<(Stage, Duration)>,
}

impl Timer {
    fn run<T>(
        &mut self,
        stage: Stage,
        f: impl FnOnce() -> Result<T>,
    ) -> std::result::Result<T, StageError> {
        let start = Instant::now();
        let out = f().map_err(|error| StageError { stage, error });
        self.timings.push((stage, start.elapsed()));
        out
    }
}

fn kind_name(k: GeneratorKind) -> &'static str {
    match k {
        GeneratorKind::U => "u",
        GeneratorKind::V => "v",
        GeneratorKind::Z => "z",
    }
}

/// Runs the pipeline on a parsed specification.
pub fn run_pipeline(
    input: &SpecInput,
    options: &PipelineOptions,
) -> std::result::Result<PipelineReport, StageError> {
    let n = options.degree_bound;
    let mut timer = Timer {
        timings: Vec::new(),
    };
    let (case, space, presentation) = match input {
        SpecInput::Catalog(case) => {
            let spec = timer.run(Stage::Catalog, || catalog_space(*case))?;
            let pres = spec.cohomology.clone();
            (Some(*case), Some(spec), pres)
        }
        SpecInput::Custom(p) => (None, None, p.clone()),
    };

    let (cohom, reduction) = timer.run(Stage::CartanReduce, || {
        let restricted: Vec<_> = presentation
            .relations()
            .iter()
            .map(|r| {
                (
                    r.clone(),
                    r.homogeneous_degree().expect("validated relation"),
                )
            })
            .collect();
        let reduction = cartan_reduce(&restricted, presentation.vars())?;
        let mut exterior = presentation.exterior().to_vec();
        let taken = |name: &str, ext: &[GradedGenerator]| {
            reduction.ambient.position(name).is_some() || ext.iter().any(|g| g.name() == name)
        };
        let mut next = 1;
        for &d in &reduction.exterior_degrees {
            while taken(&format!("z{next}"), &exterior) {
                next += 1;
            }
            exterior.push(GradedGenerator::new(format!("z{next}"), d)?);
        }
        let cohom =
            CohomPresentation::new(reduction.ambient.clone(), reduction.relations(), exterior)?;
        Ok((cohom, reduction))
    })?;
    let cohomology = CohomologySummary {
        generators: summaries(cohom.generators()),
        relations: cohom.relations().iter().map(ToString::to_string).collect(),
        exterior: summaries(cohom.exterior()),
        split_exterior_degrees: reduction.exterior_degrees.clone(),
        eliminated_linear: reduction.eliminated_linear.clone(),
        series: cohom.series(n),
    };
    let mut report = PipelineReport {
        input: input.to_string(),
        case,
        degree_bound: n,
        cohomology,
        model: None,
        lie_basis: Vec::new(),
        brackets: Vec::new(),
        enveloping: None,
        relations: Vec::new(),
        integral: None,
        series: None,
        verdicts: Verdicts::skipped("stage not run"),
        timings: Vec::new(),
    };
    if options.stop_after == Stage::CartanReduce {
        report.timings = timer.timings;
        return Ok(report);
    }

    let model = timer.run(Stage::Model, || build_formal_model(&cohom))?;
    let kinds = model.kinds();
    report.model = Some(ModelSummary {
        generators: model
            .generators()
            .iter()
            .zip(&kinds)
            .map(|(g, k)| ModelGenerator {
                name: g.name().to_string(),
                degree: g.degree(),
                kind: kind_name(*k),
            })
            .collect(),
        differential: model
            .v()
            .iter()
            .zip(model.differential())
            .map(|(g, d)| DifferentialEntry {
                generator: g.name().to_string(),
                value: d.to_string(),
            })
            .collect(),
        quadratic: model
            .quadratic_part()
            .iter()
            .map(|(g, q)| DifferentialEntry {
                generator: g.name().to_string(),
                value: q.to_string(),
            })
            .collect(),
    });
    if options.stop_after == Stage::Model {
        report.timings = timer.timings;
        return Ok(report);
    }

    let lie = timer.run(Stage::Lie, || {
        let names = match &space {
            Some(s)
                if reduction.eliminated_linear.is_empty()
                    && reduction.exterior_degrees.is_empty() =>
            {
                s.lie_names.clone()
            }
            _ => default_lie_names(&model),
        };
        let lie = homotopy_lie_named(&model, &names)?;
        lie.validate()?;
        Ok(lie)
    })?;
    report.lie_basis = summaries(lie.basis());
    report.brackets = lie
        .nonzero_brackets()
        .filter(|((k, l), _)| k <= l)
        .map(|((k, l), v)| BracketEntry {
            left: lie.basis()[k].name().to_string(),
            right: lie.basis()[l].name().to_string(),
            value: v
                .iter()
                .map(|(m, c)| (lie.basis()[*m].name().to_string(), c.to_string()))
                .collect(),
        })
        .collect();
    if options.stop_after == Stage::Lie {
        report.timings = timer.timings;
        return Ok(report);
    }

    let (env, series) = timer.run(Stage::Enveloping, || {
        let env = enveloping(&lie)?;
        let series = env.normal_counts(n)?;
        Ok((env, series))
    })?;
    report.enveloping = Some(PresentationSummary::from(&env));
    report.relations = env.relations().iter().map(ToString::to_string).collect();
    report.series = Some(series.clone());
    let integral = space
        .as_ref()
        .and_then(|s| s.expected_integral.as_ref())
        .filter(|_| options.ring.includes_integral());
    report.integral = integral.map(PresentationSummary::from);
    if options.stop_after == Stage::Enveloping || !options.verify {
        report.verdicts = Verdicts::skipped("verification not requested");
        report.timings = timer.timings;
        return Ok(report);
    }

    report.verdicts = timer.run(Stage::Verify, || {
        let pbw = SeriesComparison::new(series.clone(), pbw_series(&lie, n)).verdict;
        let custom = || Verdict::Skipped {
            reason: "custom presentation".into(),
        };
        let Some(space) = &space else {
            return Ok(Verdicts {
                pbw,
                golden: custom(),
                rank: custom(),
                splitting: custom(),
            });
        };
        let golden = compare_presentations(&env, &space.expected_rational, n)?.verdict;
        let rank = match (options.ring.includes_integral(), &space.expected_integral) {
            (false, _) => Verdict::Skipped {
                reason: "rational ring selected".into(),
            },
            (true, None) => Verdict::Skipped {
                reason: "no integral presentation for these parameters".into(),
            },
            (true, Some(int)) => rank_compare(int, &env, n)?.verdict,
        };
        let splitting =
            SeriesComparison::new(series.clone(), splitting_series(space.case, n)?).verdict;
        Ok(Verdicts {
            pbw,
            golden,
            rank,
            splitting,
        })
    })?;
    report.timings = timer.timings;
    Ok(report)
}

fn write_generators(
    f: &mut fmt::Formatter<'_>,
    label: &str,
    gens: &[GeneratorSummary],
) -> fmt::Result {
    let parts: Vec<String> = gens
        .iter()
        .map(|g| format!("{} ({})", g.name, g.degree))
        .collect();
    writeln!(
        f,
        "{label}: {}",
        if parts.is_empty() {
            "none".to_string()
        } else {
            parts.join(", ")
        }
    )
}

impl fmt::Display for PipelineReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.case {
            Some(case) => writeln!(f, "== {case} ({})", case.space_name())?,
            None => writeln!(f, "== custom presentation")?,
        }
        writeln!(f, "degree bound: {}", self.degree_bound)?;
        let c = &self.cohomology;
        writeln!(f, "-- cohomology")?;
        write_generators(f, "generators", &c.generators)?;
        for r in &c.relations {
            writeln!(f, "  relation {r}")?;
        }
        write_generators(f, "exterior", &c.exterior)?;
        if !c.eliminated_linear.is_empty() {
            writeln!(
                f,
                "eliminated linear generators: {}",
                c.eliminated_linear.join(", ")
            )?;
        }
        writeln!(f, "series: {}", c.series)?;
        if let Some(m) = &self.model {
            writeln!(f, "-- minimal model")?;
            let parts: Vec<String> = m
                .generators
                .iter()
                .map(|g| format!("{} ({}, {})", g.name, g.degree, g.kind))
                .collect();
            writeln!(f, "generators: {}", parts.join(", "))?;
            for d in &m.differential {
                writeln!(f, "  d({}) = {}", d.generator, d.value)?;
            }
            for d in m.quadratic.iter().filter(|d| d.value != "0") {
                writeln!(f, "  d1({}) = {}", d.generator, d.value)?;
            }
        }
        if !self.lie_basis.is_empty() {
            writeln!(f, "-- homotopy Lie algebra")?;
            write_generators(f, "basis", &self.lie_basis)?;
            if self.brackets.is_empty() {
                writeln!(f, "abelian")?;
            }
            for b in &self.brackets {
                let terms: Vec<String> = b
                    .value
                    .iter()
                    .map(|(n, c)| {
                        if c == "1" {
                            n.clone()
                        } else {
                            format!("{c}*{n}")
                        }
                    })
                    .collect();
                writeln!(
                    f,
                    "  [{}, {}] = {}",
                    b.left,
                    b.right,
                    terms.join(" + ").replace("+ -", "- ")
                )?;
            }
        }
        if let Some(e) = &self.enveloping {
            writeln!(f, "-- loop space homology")?;
            write_generators(f, "generators", &e.generators)?;
            for r in &e.relations {
                writeln!(f, "  {r} = 0")?;
            }
            for el in &e.eliminations {
                writeln!(f, "  eliminated {el}")?;
            }
        }
        if let Some(s) = &self.series {
            writeln!(f, "series: {s}")?;
        }
        if let Some(i) = &self.integral {
            writeln!(f, "-- integral presentation")?;
            write_generators(f, "generators", &i.generators)?;
            for r in &i.relations {
                writeln!(f, "  {r} = 0")?;
            }
        }
        writeln!(f, "-- verdicts")?;
        for (name, v) in self.verdicts.iter() {
            writeln!(f, "{name}: {v}")?;
        }
        if !self.timings.is_empty() {
            let parts: Vec<String> = self
                .timings
                .iter()
                .map(|(s, d)| format!("{s} {:.1} ms", d.as_secs_f64() * 1e3))
                .collect();
            writeln!(f, "timings: {}", parts.join(", "))?;
        }
        Ok(())
    }
}
