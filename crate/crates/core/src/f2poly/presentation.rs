use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::poly::{Monomial, Polynomial};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorInfo {
    pub name: String,
    pub degree: u32,
}

impl GeneratorInfo {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        GeneratorInfo {
            name: name.into(),
            degree,
        }
    }
}

/// Generators with degrees plus homogeneous relations.
///
/// The JSON form is
/// `{"generators":[{"name","degree"}],"relations":[[exponent vectors]],"formal_dimension","simply_connected"}`
/// and round-trips byte for byte.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: Vec<GeneratorInfo>,
    pub relations: Vec<Polynomial>,
    pub formal_dimension: Option<u32>,
    pub simply_connected: bool,
}

impl Presentation {
    pub fn new(
        generators: Vec<GeneratorInfo>,
        relations: Vec<Polynomial>,
        formal_dimension: Option<u32>,
        simply_connected: bool,
    ) -> Result<Self> {
        let p = Presentation {
            generators,
            relations,
            formal_dimension,
            simply_connected,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = HashSet::new();
        for g in &self.generators {
            if g.degree == 0 {
                return Err(Error::InvalidPresentation(format!(
                    "generator `{}` has degree 0",
                    g.name
                )));
            }
            if !seen.insert(g.name.as_str()) {
                return Err(Error::InvalidPresentation(format!(
                    "duplicate generator name `{}`",
                    g.name
                )));
            }
        }
        let n = self.generators.len();
        let degs = self.degrees();
        for (index, rel) in self.relations.iter().enumerate() {
            if let Some(m) = rel.monomials().find(|m| m.len() != n) {
                return Err(Error::Arity {
                    expected: n,
                    got: m.len(),
                });
            }
            if !rel.is_homogeneous(&degs) {
                return Err(Error::NonHomogeneous { index });
            }
        }
        Ok(())
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.generators.iter().map(|g| g.degree).collect()
    }

    pub fn names(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.name.clone()).collect()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// The monomial `name^power`, for building relations by hand.
    pub fn var(&self, name: &str, power: u32) -> Option<Monomial> {
        self.generator_index(name)
            .map(|i| Monomial::var(self.ngens(), i, power))
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.generators.iter().map(|g| g.degree).max().unwrap_or(1)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let p: Presentation = serde_json::from_str(s)?;
        p.validate()?;
        Ok(p)
    }

    /// Disjoint union of generators and relations. Clashing names from `other`
    /// get a `'` suffix until unique.
    pub fn tensor(&self, other: &Presentation) -> Result<Presentation> {
        let mut generators = self.generators.clone();
        let mut taken: HashSet<String> = generators.iter().map(|g| g.name.clone()).collect();
        for g in &other.generators {
            let mut name = g.name.clone();
            while taken.contains(&name) {
                name.push('\'');
            }
            taken.insert(name.clone());
            generators.push(GeneratorInfo::new(name, g.degree));
        }
        let (n1, n2) = (self.ngens(), other.ngens());
        let pad_right = |m: &Monomial| {
            let mut e = m.0.clone();
            e.resize(n1 + n2, 0);
            Monomial(e)
        };
        let pad_left = |m: &Monomial| {
            let mut e = vec![0; n1];
            e.extend_from_slice(&m.0);
            Monomial(e)
        };
        let relations = self
            .relations
            .iter()
            .map(|r| r.monomials().map(pad_right).collect())
            .chain(
                other
                    .relations
                    .iter()
                    .map(|r| r.monomials().map(pad_left).collect()),
            )
            .collect();
        let formal_dimension = match (self.formal_dimension, other.formal_dimension) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        Presentation::new(
            generators,
            relations,
            formal_dimension,
            self.simply_connected && other.simply_connected,
        )
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.names();
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|g| format!("{}:{}", g.name, g.degree))
            .collect();
        let rels: Vec<String> = self.relations.iter().map(|r| r.render(&names)).collect();
        write!(f, "F2[{}] / ({})", gens.join(", "), rels.join(", "))?;
        if let Some(d) = self.formal_dimension {
            write!(f, "  [formal dimension {d}]")?;
        }
        Ok(())
    }
}
