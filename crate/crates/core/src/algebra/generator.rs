use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::{Error, Result};

/// A named generator carrying a topological degree.
///
/// Even degree means the generator commutes (polynomial part), odd degree
/// means it anticommutes (exterior part).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GradedGenerator {
    name: String,
    degree: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl GradedGenerator {
    pub fn new(name: impl Into<String>, degree: u32) -> Result<Self> {
        let name = name.into();
        if degree == 0 {
            return Err(Error::Grading(format!(
                "generator `{name}` must have positive degree"
            )));
        }
        if name.is_empty() {
            return Err(Error::Grading("generator name must not be empty".into()));
        }
        Ok(Self { name, degree })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn parity(&self) -> Parity {
        if self.degree.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(&self) -> bool {
        self.parity() == Parity::Odd
    }
}

impl fmt::Display for GradedGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (deg {})", self.name, self.degree)
    }
}

/// Checks that no two generators share a name.
pub fn ensure_unique<'a>(gens: impl IntoIterator<Item = &'a GradedGenerator>) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for g in gens {
        if !seen.insert(g.name()) {
            return Err(Error::DuplicateName(g.name().to_string()));
        }
    }
    Ok(())
}

/// The ordered set of even generators a commutative polynomial lives over.
#[derive(Debug)]
pub struct Vars {
    gens: Vec<GradedGenerator>,
    index: HashMap<String, usize>,
}

/// Shared handle to a variable context.
pub type VarContext = Arc<Vars>;

impl Vars {
    pub fn new(gens: Vec<GradedGenerator>) -> Result<VarContext> {
        ensure_unique(&gens)?;
        if let Some(g) = gens.iter().find(|g| g.is_odd()) {
            return Err(Error::Grading(format!(
                "polynomial generator `{}` has odd degree {}",
                g.name(),
                g.degree()
            )));
        }
        let index = gens
            .iter()
            .enumerate()
            .map(|(i, g)| (g.name().to_string(), i))
            .collect();
        Ok(Arc::new(Self { gens, index }))
    }

    /// Convenience constructor for `names` all of the same degree.
    pub fn uniform(names: &[&str], degree: u32) -> Result<VarContext> {
        let gens = names
            .iter()
            .map(|n| GradedGenerator::new(*n, degree))
            .collect::<Result<Vec<_>>>()?;
        Self::new(gens)
    }

    pub fn empty() -> VarContext {
        Arc::new(Self {
            gens: Vec::new(),
            index: HashMap::new(),
        })
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

    pub fn degrees(&self) -> Vec<u32> {
        self.gens.iter().map(GradedGenerator::degree).collect()
    }

    pub(crate) fn same(a: &VarContext, b: &VarContext) -> bool {
        Arc::ptr_eq(a, b) || a.gens == b.gens
    }
}

impl PartialEq for Vars {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens
    }
}

impl Eq for Vars {}
