use serde::Serialize;

use super::groebner;
use super::packed::{self, Elem, Layout, PMono};
use super::poly::{Monomial, Polynomial};
use super::presentation::Presentation;
use super::DEFAULT_SAFETY_LIMIT;
use crate::{Error, Result};

/// A presentation completed to a confluent rewrite basis through `degree_cap`.
///
/// Everything above the cap is treated as zero: the ring is the truncation of
/// the presented algebra. Catalog rings vanish above their formal dimension,
/// so truncating there loses nothing. Immutable once built; all queries take
/// `&self` and may run concurrently.
#[derive(Clone, Debug)]
pub struct ReducedRing {
    presentation: Presentation,
    cap: u32,
    layout: Layout,
    basis: Vec<Elem>,
    standard: Vec<Vec<PMono>>,
    hilbert: Vec<usize>,
}

/// Completes `p` through degree `degree_cap` with the default safety limit.
pub fn complete_presentation(p: &Presentation, degree_cap: u32) -> Result<ReducedRing> {
    ReducedRing::complete_with_limit(p, degree_cap, DEFAULT_SAFETY_LIMIT)
}

pub fn normal_form(p: &Polynomial, ring: &ReducedRing) -> Result<Polynomial> {
    ring.normal_form(p)
}

pub fn multiply(p: &Polynomial, q: &Polynomial, ring: &ReducedRing) -> Result<Polynomial> {
    ring.multiply(p, q)
}

pub fn hilbert_function(ring: &ReducedRing) -> Vec<usize> {
    ring.hilbert().to_vec()
}

impl ReducedRing {
    /// Completes at the default cap: the formal dimension when declared,
    /// otherwise the highest relation degree.
    pub fn new(p: &Presentation) -> Result<Self> {
        let cap = match p.formal_dimension {
            Some(d) => d,
            None => {
                let degs = p.degrees();
                p.relations
                    .iter()
                    .filter_map(|r| r.max_degree(&degs))
                    .max()
                    .unwrap_or(0)
            }
        };
        complete_presentation(p, cap)
    }

    pub fn complete_with_limit(p: &Presentation, cap: u32, limit: u32) -> Result<Self> {
        if cap > limit {
            return Err(Error::SafetyLimit { cap, limit });
        }
        p.validate()?;
        let degs = p.degrees();
        let layout = Layout::new(&degs, cap)?;
        let mut rels = Vec::with_capacity(p.relations.len());
        for r in &p.relations {
            // Relations above the cap only constrain degrees that are truncated away.
            if r.max_degree(&degs).is_none_or(|d| d > cap) {
                continue;
            }
            let terms = r
                .monomials()
                .map(|m| layout.pack(&m.0))
                .collect::<Result<Vec<_>>>()?;
            rels.push(packed::collect(terms));
        }
        let basis = groebner::complete(&layout, rels, cap);
        let standard = enumerate_standard(&layout, &basis, cap);
        let hilbert: Vec<usize> = standard.iter().map(Vec::len).collect();
        let ring = ReducedRing {
            presentation: p.clone(),
            cap,
            layout,
            basis,
            standard,
            hilbert,
        };
        if let Some(declared) = p.formal_dimension {
            if declared <= cap && ring.hilbert[declared as usize] == 0 {
                return Err(Error::FormalDimension {
                    declared,
                    top: ring.top_degree(),
                });
            }
        }
        Ok(ring)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn degree_cap(&self) -> u32 {
        self.cap
    }

    pub fn ngens(&self) -> usize {
        self.presentation.ngens()
    }

    pub fn names(&self) -> Vec<String> {
        self.presentation.names()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.layout.degrees
    }

    /// Declared formal dimension, falling back to the top nonzero degree.
    pub fn formal_dimension(&self) -> u32 {
        self.presentation
            .formal_dimension
            .or_else(|| self.top_degree())
            .unwrap_or(0)
    }

    pub fn hilbert(&self) -> &[usize] {
        &self.hilbert
    }

    pub fn total_dimension(&self) -> usize {
        self.hilbert.iter().sum()
    }

    pub fn top_degree(&self) -> Option<u32> {
        self.hilbert.iter().rposition(|&h| h > 0).map(|d| d as u32)
    }

    /// Symmetric Hilbert function about the formal dimension with a
    /// one-dimensional top class.
    pub fn is_poincare_symmetric(&self) -> bool {
        let d = self.formal_dimension() as usize;
        if d >= self.hilbert.len() || self.hilbert[d] != 1 {
            return false;
        }
        if self.hilbert[d + 1..].iter().any(|&h| h != 0) {
            return false;
        }
        (0..=d).all(|i| self.hilbert[i] == self.hilbert[d - i])
    }

    pub fn rewrite_basis(&self) -> Vec<Polynomial> {
        self.basis.iter().map(|e| self.to_poly(e)).collect()
    }

    /// Irreducible monomials per degree, `0..=degree_cap`.
    pub fn basis_by_degree(&self) -> Vec<Vec<Monomial>> {
        self.standard
            .iter()
            .map(|ms| {
                ms.iter()
                    .map(|&m| Monomial(self.layout.unpack(m)))
                    .collect()
            })
            .collect()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        let e = self.to_elem(p)?;
        let r = self.nf(&e)?;
        Ok(self.to_poly(&r))
    }

    /// `nf(p*q)`; errors when the product degree exceeds the cap.
    pub fn multiply(&self, p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
        let a = self.to_elem(p)?;
        let b = self.to_elem(q)?;
        if let (Some(x), Some(y)) = (a.first(), b.first()) {
            if x.deg + y.deg > self.cap {
                return Err(Error::DegreeOverflow {
                    degree: x.deg + y.deg,
                    cap: self.cap,
                });
            }
        }
        let r = self.mul_elem(&a, &b);
        Ok(self.to_poly(&r))
    }

    pub fn generator(&self, name: &str) -> Option<Polynomial> {
        self.presentation
            .var(name, 1)
            .map(Polynomial::from_monomial)
    }

    pub fn render(&self, p: &Polynomial) -> String {
        p.render(&self.names())
    }

    // ---- crate-internal element API used by the searches ----

    pub(crate) fn layout(&self) -> &Layout {
        &self.layout
    }

    pub(crate) fn standard(&self, d: u32) -> &[PMono] {
        self.standard.get(d as usize).map_or(&[], Vec::as_slice)
    }

    pub(crate) fn one_elem(&self) -> Elem {
        vec![self.layout.one()]
    }

    pub(crate) fn gen_elem(&self, i: usize) -> Elem {
        let v = self.layout.var(i);
        if v.deg > self.cap {
            return Vec::new();
        }
        self.nf(&[v]).expect("generator reduces")
    }

    pub(crate) fn to_elem(&self, p: &Polynomial) -> Result<Elem> {
        let degs = self.degrees();
        let mut terms = Vec::with_capacity(p.len());
        for m in p.monomials() {
            if m.len() != self.ngens() {
                return Err(Error::Arity {
                    expected: self.ngens(),
                    got: m.len(),
                });
            }
            let d = m.degree(degs);
            if d > self.cap {
                return Err(Error::DegreeOverflow {
                    degree: d,
                    cap: self.cap,
                });
            }
            terms.push(self.layout.pack(&m.0)?);
        }
        Ok(packed::collect(terms))
    }

    pub(crate) fn to_poly(&self, e: &[PMono]) -> Polynomial {
        e.iter().map(|&m| Monomial(self.layout.unpack(m))).collect()
    }

    /// Normal form of a sorted element whose terms all lie within the cap.
    pub(crate) fn nf(&self, e: &[PMono]) -> Result<Elem> {
        let r = groebner::reduce(&self.layout, &self.basis, e);
        for m in &r {
            if self.standard(m.deg).binary_search_by(|s| m.cmp(s)).is_err() {
                return Err(Error::Reduction(format!(
                    "irreducible remainder {:?} is not a basis monomial",
                    self.layout.unpack(*m)
                )));
            }
        }
        Ok(r)
    }

    /// Product in the truncated ring: terms above the cap are dropped.
    pub(crate) fn mul_elem(&self, a: &[PMono], b: &[PMono]) -> Elem {
        let mut terms = Vec::with_capacity(a.len() * b.len());
        for &x in a {
            for &y in b {
                if x.deg + y.deg <= self.cap {
                    terms.push(self.layout.mul(x, y));
                }
            }
        }
        let c = packed::collect(terms);
        self.nf(&c)
            .expect("rewrite basis is complete through the cap")
    }

    pub(crate) fn pow_elem(&self, a: &[PMono], k: u32) -> Elem {
        let mut acc = self.one_elem();
        for _ in 0..k {
            if acc.is_empty() {
                break;
            }
            acc = self.mul_elem(&acc, a);
        }
        acc
    }
}

/// Depth-first enumeration of monomials not divisible by any leading term.
/// Divisibility is monotone, so a divisible prefix prunes its whole subtree.
fn enumerate_standard(layout: &Layout, basis: &[Elem], cap: u32) -> Vec<Vec<PMono>> {
    let leads: Vec<PMono> = basis.iter().map(|g| g[0]).collect();
    let mut out = vec![Vec::new(); cap as usize + 1];
    let n = layout.nvars();
    let mut exps = vec![0u32; n];

    fn rec(
        i: usize,
        deg: u32,
        exps: &mut Vec<u32>,
        layout: &Layout,
        leads: &[PMono],
        cap: u32,
        out: &mut Vec<Vec<PMono>>,
    ) {
        if i == layout.nvars() {
            let m = layout.pack(exps).expect("within cap");
            out[deg as usize].push(m);
            return;
        }
        let step = layout.degrees[i];
        let mut d = deg;
        loop {
            let m = layout.pack(exps).expect("within cap");
            if leads.iter().any(|&l| layout.divides(l, m)) {
                break;
            }
            rec(i + 1, d, exps, layout, leads, cap, out);
            if d + step > cap {
                break;
            }
            d += step;
            exps[i] += 1;
        }
        exps[i] = 0;
    }

    if n == 0 {
        out[0].push(layout.one());
    } else {
        rec(0, 0, &mut exps, layout, &leads, cap, &mut out);
    }
    for v in &mut out {
        v.sort_unstable_by(|a, b| b.cmp(a));
    }
    out
}

/// Summary used by the CLI and reports.
#[derive(Clone, Debug, Serialize)]
pub struct RingSummary {
    pub presentation: String,
    pub degree_cap: u32,
    pub hilbert: Vec<usize>,
    pub total_dimension: usize,
    pub rewrite_basis: Vec<String>,
}

impl ReducedRing {
    pub fn summary(&self) -> RingSummary {
        RingSummary {
            presentation: self.presentation.to_string(),
            degree_cap: self.cap,
            hilbert: self.hilbert.clone(),
            total_dimension: self.total_dimension(),
            rewrite_basis: self
                .rewrite_basis()
                .iter()
                .map(|p| self.render(p))
                .collect(),
        }
    }
}
