use std::fmt;

use crate::algebra::{
    complete_intersection_series, ensure_unique, GradedGenerator, HilbertSeries, Polynomial,
    VarContext, Vars,
};
use crate::ideal::is_regular_sequence;
use crate::{Error, Result};

/// A cohomology presentation `Q[x]/(relations) ⊗ Λ(z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CohomPresentation {
    vars: VarContext,
    relations: Vec<Polynomial>,
    exterior: Vec<GradedGenerator>,
}

impl CohomPresentation {
    /// Validates grading, homogeneity and name uniqueness. Regularity of the
    /// relations is checked separately by [`CohomPresentation::check_regular`].
    pub fn new(
        vars: VarContext,
        relations: Vec<Polynomial>,
        exterior: Vec<GradedGenerator>,
    ) -> Result<Self> {
        ensure_unique(vars.generators().iter().chain(&exterior))?;
        if let Some(g) = exterior.iter().find(|g| !g.is_odd()) {
            return Err(Error::Grading(format!(
                "exterior generator `{}` must have odd degree",
                g.name()
            )));
        }
        for r in &relations {
            if !Vars::same(r.vars(), &vars) {
                return Err(Error::ContextMismatch);
            }
            if r.is_zero() {
                return Err(Error::Grading("relation must be nonzero".into()));
            }
            if !r.is_homogeneous() {
                return Err(Error::Grading(format!("relation `{r}` is not homogeneous")));
            }
        }
        Ok(Self {
            vars,
            relations,
            exterior,
        })
    }

    pub fn vars(&self) -> &VarContext {
        &self.vars
    }

    pub fn generators(&self) -> &[GradedGenerator] {
        self.vars.generators()
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn exterior(&self) -> &[GradedGenerator] {
        &self.exterior
    }

    pub fn relation_degrees(&self) -> Vec<u32> {
        self.relations
            .iter()
            .filter_map(Polynomial::degree)
            .collect()
    }

    pub fn is_regular(&self) -> Result<bool> {
        is_regular_sequence(&self.relations, self.vars.generators())
    }

    pub fn check_regular(&self) -> Result<()> {
        if self.is_regular()? {
            Ok(())
        } else {
            Err(Error::NotCartanPair(
                "relations do not form a regular sequence".into(),
            ))
        }
    }

    /// Hilbert series of the presented algebra, assuming regularity.
    pub fn series(&self, bound: u32) -> HilbertSeries {
        let ext: Vec<u32> = self.exterior.iter().map(GradedGenerator::degree).collect();
        complete_intersection_series(&self.vars.degrees(), &self.relation_degrees(), &ext, bound)
    }
}

fn write_groups(f: &mut fmt::Formatter<'_>, gens: &[GradedGenerator]) -> fmt::Result {
    let mut i = 0;
    while i < gens.len() {
        let d = gens[i].degree();
        let mut j = i;
        while j < gens.len() && gens[j].degree() == d {
            j += 1;
        }
        let names: Vec<&str> = gens[i..j].iter().map(GradedGenerator::name).collect();
        writeln!(f, "  {} deg {d}", names.join(", "))?;
        i = j;
    }
    Ok(())
}

/// Renders the presentation in the spec-file grammar.
impl fmt::Display for CohomPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators")?;
        write_groups(f, self.vars.generators())?;
        if !self.relations.is_empty() {
            writeln!(f, "relations")?;
            for r in &self.relations {
                writeln!(f, "  {r}")?;
            }
        }
        if !self.exterior.is_empty() {
            writeln!(f, "exterior")?;
            write_groups(f, &self.exterior)?;
        }
        Ok(())
    }
}
