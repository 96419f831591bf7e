//! The generalised symmetric spaces `SU(2n+1)/T^n`, `SU(2n)/T^n`,
//! `SO(2n+2)/T^n`, `SO(8)/T^2`, `E_6/T^4` and the partial flag manifolds
//! `U(n)/(T^k × U(n-k))`: cohomology inputs and expected loop homology.

mod cohomology;
mod loops;

use std::fmt;

use serde::{Serialize, Serializer};

pub use cohomology::{cohomology, e6_restricted_invariants, so8_restricted_invariants};
pub use loops::{expected_loop_homology, integral_presentation, so8_integral};

use crate::algebra::{free_graded_series, GradedGenerator, HilbertSeries};
use crate::envelope::{CoefficientRing, NCPresentation, SeriesComparison};
use crate::sullivan::CohomPresentation;
use crate::{Error, Result};

/// A catalog space with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatalogCase {
    /// `SU(2n+1)/T^n`.
    SuOdd { n: u32 },
    /// `SU(2n)/T^n`.
    SuEven { n: u32 },
    /// `SO(2n+2)/T^n`.
    SoEven { n: u32 },
    /// `SO(8)/T^2`.
    So8,
    /// `E_6/T^4`.
    E6T4,
    /// `U(n)/(T^k × U(n-k))`.
    APartial { n: u32, k: u32 },
}

/// Family names accepted by [`CatalogCase::from_parts`].
pub const FAMILIES: [&str; 6] = ["SU_odd", "SU_even", "SO_even", "SO8", "E6T4", "A_partial"];

impl CatalogCase {
    /// Builds a case from a family name and `key=value` parameters.
    pub fn from_parts(family: &str, params: &[(String, i64)]) -> Result<Self> {
        let keys: &[&str] = match family {
            "SU_odd" | "SU_even" | "SO_even" => &["n"],
            "A_partial" => &["n", "k"],
            "SO8" | "E6T4" => &[],
            _ => return Err(Error::UnknownCase(family.to_string())),
        };
        let bad = |reason: String| Error::Parameter {
            case: family.to_string(),
            reason,
        };
        for (i, (key, _)) in params.iter().enumerate() {
            if !keys.contains(&key.as_str()) {
                return Err(bad(format!("unexpected parameter `{key}`")));
            }
            if params[..i].iter().any(|(k, _)| k == key) {
                return Err(bad(format!("parameter `{key}` given twice")));
            }
        }
        let get = |key: &str, min: i64| -> Result<u32> {
            let (_, v) = params
                .iter()
                .find(|(k, _)| k == key)
                .ok_or_else(|| bad(format!("missing parameter `{key}`")))?;
            if *v < min || *v > i64::from(u16::MAX) {
                return Err(bad(format!("`{key}={v}` is out of range")));
            }
            Ok(*v as u32)
        };
        let case = match family {
            "SU_odd" => CatalogCase::SuOdd { n: get("n", 1)? },
            "SU_even" => CatalogCase::SuEven { n: get("n", 1)? },
            "SO_even" => CatalogCase::SoEven { n: get("n", 1)? },
            "SO8" => CatalogCase::So8,
            "E6T4" => CatalogCase::E6T4,
            _ => CatalogCase::APartial {
                n: get("n", 1)?,
                k: get("k", 0)?,
            },
        };
        case.validate()?;
        Ok(case)
    }

    pub fn family(&self) -> &'static str {
        match self {
            CatalogCase::SuOdd { .. } => "SU_odd",
            CatalogCase::SuEven { .. } => "SU_even",
            CatalogCase::SoEven { .. } => "SO_even",
            CatalogCase::So8 => "SO8",
            CatalogCase::E6T4 => "E6T4",
            CatalogCase::APartial { .. } => "A_partial",
        }
    }

    pub fn params(&self) -> Vec<(&'static str, u32)> {
        match *self {
            CatalogCase::SuOdd { n } | CatalogCase::SuEven { n } | CatalogCase::SoEven { n } => {
                vec![("n", n)]
            }
            CatalogCase::APartial { n, k } => vec![("n", n), ("k", k)],
            CatalogCase::So8 | CatalogCase::E6T4 => Vec::new(),
        }
    }

    /// Checks the parameter ranges of the family.
    pub fn validate(&self) -> Result<()> {
        let bad = |reason: &str| {
            Err(Error::Parameter {
                case: self.to_string(),
                reason: reason.into(),
            })
        };
        match *self {
            CatalogCase::SuOdd { n } | CatalogCase::SuEven { n } | CatalogCase::SoEven { n }
                if n == 0 =>
            {
                bad("n must be at least 1")
            }
            CatalogCase::APartial { n, k } if k + 2 > n => Err(Error::OutOfFamily(format!(
                "{self}: the partial flag family requires k <= n - 2"
            ))),
            _ => Ok(()),
        }
    }

    /// Accepted parameters whose polynomial tensor factors are empty.
    pub fn is_degenerate(&self) -> bool {
        matches!(
            self,
            CatalogCase::SuEven { n: 1 }
                | CatalogCase::SoEven { n: 1 }
                | CatalogCase::APartial { k: 0, .. }
        )
    }

    pub fn torus_rank(&self) -> u32 {
        match *self {
            CatalogCase::SuOdd { n } | CatalogCase::SuEven { n } | CatalogCase::SoEven { n } => n,
            CatalogCase::So8 => 2,
            CatalogCase::E6T4 => 4,
            CatalogCase::APartial { k, .. } => k,
        }
    }

    /// The homogeneous space, e.g. `SU(5)/T^2`.
    pub fn space_name(&self) -> String {
        match *self {
            CatalogCase::SuOdd { n } => format!("SU({})/T^{n}", 2 * n + 1),
            CatalogCase::SuEven { n } => format!("SU({})/T^{n}", 2 * n),
            CatalogCase::SoEven { n } => format!("SO({})/T^{n}", 2 * n + 2),
            CatalogCase::So8 => "SO(8)/T^2".into(),
            CatalogCase::E6T4 => "E6/T^4".into(),
            CatalogCase::APartial { n, k } => format!("U({n})/(T^{k} x U({}))", n - k),
        }
    }

    /// Degrees of the polynomial generators of `H_*(ΩG/H; Q)` for the
    /// torus-free quotient `G/H`, so that `Ω(G/(T × H)) ≃ T × Ω(G/H)`.
    pub fn loop_group_degrees(&self) -> Vec<u32> {
        match *self {
            CatalogCase::SuOdd { n } => (1..=2 * n).map(|i| 2 * i).collect(),
            CatalogCase::SuEven { n } => (1..2 * n).map(|i| 2 * i).collect(),
            CatalogCase::SoEven { n } => {
                let mut d: Vec<u32> = (1..=n).map(|k| 4 * k - 2).collect();
                d.push(2 * n);
                d
            }
            CatalogCase::So8 => vec![2, 6, 6, 10],
            CatalogCase::E6T4 => vec![2, 8, 10, 14, 16, 22],
            CatalogCase::APartial { n, k } => (n - k..n).map(|j| 2 * j).collect(),
        }
    }

    /// Lie basis names in model order (`u`, then `v`, then `z`).
    pub fn lie_names(&self) -> Vec<String> {
        fn seq(p: &'static str, r: std::ops::RangeInclusive<u32>) -> impl Iterator<Item = String> {
            r.map(move |i| format!("{p}{i}"))
        }
        match *self {
            CatalogCase::SuOdd { n } => seq("a", 1..=n)
                .chain(seq("b", 1..=n))
                .chain(seq("c", 1..=n))
                .collect(),
            CatalogCase::SuEven { n } => seq("a", 1..=n)
                .chain(seq("b", 1..=n))
                .chain(seq("c", 1..=n - 1))
                .collect(),
            CatalogCase::SoEven { n } => seq("a", 1..=n).chain(seq("b", 1..=n + 1)).collect(),
            CatalogCase::So8 => ["a1", "a2", "b1", "b2", "c1", "c2"]
                .map(String::from)
                .to_vec(),
            CatalogCase::E6T4 => ["a1", "a2", "a3", "a4", "b1", "b5", "b7", "b11", "b4", "b8"]
                .map(String::from)
                .to_vec(),
            CatalogCase::APartial { n, k } => {
                seq("a", 1..=k).chain(seq("b", n - k + 1..=n)).collect()
            }
        }
    }

    /// The cases exercised by the default catalog sweep.
    pub fn standard() -> Vec<CatalogCase> {
        vec![
            CatalogCase::SuOdd { n: 1 },
            CatalogCase::SuOdd { n: 2 },
            CatalogCase::SuOdd { n: 3 },
            CatalogCase::SuEven { n: 2 },
            CatalogCase::SuEven { n: 3 },
            CatalogCase::SoEven { n: 2 },
            CatalogCase::SoEven { n: 3 },
            CatalogCase::So8,
            CatalogCase::E6T4,
            CatalogCase::APartial { n: 3, k: 1 },
            CatalogCase::APartial { n: 4, k: 2 },
            CatalogCase::APartial { n: 5, k: 3 },
        ]
    }
}

impl fmt::Display for CatalogCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family())?;
        for (k, v) in self.params() {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

impl Serialize for CatalogCase {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A catalog space: its cohomology, torus rank and expected loop homology.
#[derive(Clone, Debug)]
pub struct SpaceSpec {
    pub case: CatalogCase,
    pub cohomology: CohomPresentation,
    pub torus_rank: u32,
    pub lie_names: Vec<String>,
    pub expected_rational: NCPresentation,
    /// Absent where the stated integral form needs more generators than the
    /// parameters provide.
    pub expected_integral: Option<NCPresentation>,
    pub provenance: String,
    pub degenerate: bool,
}

/// Builds the full specification of a catalog space.
pub fn catalog_space(case: CatalogCase) -> Result<SpaceSpec> {
    case.validate()?;
    let cohomology = cohomology(case)?;
    let expected_rational = expected_loop_homology(case, CoefficientRing::Rational)?;
    let expected_integral = match expected_loop_homology(case, CoefficientRing::Integral) {
        Ok(p) => Some(p),
        Err(Error::Parameter { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(SpaceSpec {
        case,
        cohomology,
        torus_rank: case.torus_rank(),
        lie_names: case.lie_names(),
        expected_rational,
        expected_integral,
        provenance: format!("loop space homology of {}", case.space_name()),
        degenerate: case.is_degenerate(),
    })
}

/// `(1 + t)^rank` times the series of the polynomial algebra on
/// [`CatalogCase::loop_group_degrees`].
pub fn splitting_series(case: CatalogCase, bound: u32) -> Result<HilbertSeries> {
    let mut gens = Vec::new();
    for (i, d) in case.loop_group_degrees().into_iter().enumerate() {
        gens.push(GradedGenerator::new(format!("g{i}"), d)?);
    }
    let mut s = free_graded_series(&gens, bound);
    for _ in 0..case.torus_rank() {
        s.mul_one_plus(1);
    }
    Ok(s)
}

/// Compares the expected rational loop homology with the splitting
/// `Ω(G/(T × H)) ≃ T × Ω(G/H)` degreewise through `bound`.
pub fn splitting_series_check(case: CatalogCase, bound: u32) -> Result<SeriesComparison> {
    let computed = expected_loop_homology(case, CoefficientRing::Rational)?.normal_counts(bound)?;
    Ok(SeriesComparison::new(
        computed,
        splitting_series(case, bound)?,
    ))
}
