use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign};

use serde::{Deserialize, Serialize};

/// Exponent vector, one entry per generator of the owning presentation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize, power: u32) -> Self {
        let mut e = vec![0; nvars];
        e[index] = power;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Weighted degree under the given generator degrees.
    pub fn degree(&self, degrees: &[u32]) -> u32 {
        self.0.iter().zip(degrees).map(|(e, d)| e * d).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Render with generator names, e.g. `a^2*b`.
    pub fn render(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(names)
            .filter(|(e, _)| **e > 0)
            .map(|(e, n)| {
                if *e == 1 {
                    n.clone()
                } else {
                    format!("{n}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// A polynomial over F2: the set of monomials with coefficient one.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Polynomial(BTreeSet<Monomial>);

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial(BTreeSet::new())
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_monomial(Monomial::one(nvars))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut s = BTreeSet::new();
        s.insert(m);
        Polynomial(s)
    }

    /// Builds a polynomial from exponent vectors; repeated monomials cancel in pairs.
    pub fn from_exponents<I, V>(terms: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: Into<Vec<u32>>,
    {
        let mut p = Polynomial::zero();
        for t in terms {
            p.toggle(Monomial(t.into()));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.0.iter()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.0.contains(m)
    }

    /// Adds a single monomial (F2: present monomials cancel).
    pub fn toggle(&mut self, m: Monomial) {
        if !self.0.remove(&m) {
            self.0.insert(m);
        }
    }

    /// Degrees of the monomials present, sorted and deduplicated.
    pub fn degrees(&self, degrees: &[u32]) -> Vec<u32> {
        let s: BTreeSet<u32> = self.0.iter().map(|m| m.degree(degrees)).collect();
        s.into_iter().collect()
    }

    pub fn max_degree(&self, degrees: &[u32]) -> Option<u32> {
        self.0.iter().map(|m| m.degree(degrees)).max()
    }

    pub fn is_homogeneous(&self, degrees: &[u32]) -> bool {
        self.degrees(degrees).len() <= 1
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "0".to_string();
        }
        // Highest-degree terms first, then lexicographic, for stable output.
        let degs: Vec<u32> = vec![1; names.len()];
        let mut terms: Vec<&Monomial> = self.0.iter().collect();
        terms.sort_by(|a, b| b.degree(&degs).cmp(&a.degree(&degs)).then(b.cmp(a)));
        terms
            .into_iter()
            .map(|m| m.render(names))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl FromIterator<Monomial> for Polynomial {
    fn from_iter<T: IntoIterator<Item = Monomial>>(iter: T) -> Self {
        let mut p = Polynomial::zero();
        for m in iter {
            p.toggle(m);
        }
        p
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for m in &rhs.0 {
            self.toggle(m.clone());
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial(self.0.symmetric_difference(&rhs.0).cloned().collect())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}
