//! Helpers shared by the integration test targets: the catalog ring list and
//! an independent degreewise linear-algebra model of a graded quotient.
#![allow(dead_code)]

use std::collections::HashMap;

use milnor_core::catalog::{self, ParamBits, SpaceDescriptor};
use milnor_core::f2poly::{Monomial, Polynomial, Presentation, ReducedRing};
use rand::Rng;

/// A catalog ring under test. `duality` is true when the presentation is
/// expected to be a Poincaré duality algebra of its formal dimension.
pub struct CatalogRing {
    pub label: String,
    pub presentation: Presentation,
    pub duality: bool,
}

fn entry(label: impl Into<String>, presentation: Presentation, duality: bool) -> CatalogRing {
    CatalogRing {
        label: label.into(),
        presentation,
        duality,
    }
}

fn parsed(desc: &str) -> Presentation {
    desc.parse::<SpaceDescriptor>()
        .unwrap()
        .presentation()
        .unwrap()
}

/// Every catalog family with `r, s ≤ 5`. Parametrized quotients appear once
/// per parameter assignment; their `duality` flag comes from
/// [`catalog::duality_check`], since not every assignment is realizable.
pub fn catalog_rings() -> Vec<CatalogRing> {
    let mut out = Vec::new();
    for r in 1..=5 {
        for s in 1..=r {
            out.push(entry(
                format!("milnor-real:{r},{s}"),
                catalog::milnor_real(r, s).unwrap(),
                true,
            ));
            out.push(entry(
                format!("milnor-complex:{r},{s}"),
                catalog::milnor_complex(r, s).unwrap(),
                true,
            ));
        }
    }
    for n in 1..=5 {
        out.push(entry(format!("rp:{n}"), catalog::rp(n).unwrap(), true));
        out.push(entry(format!("cp:{n}"), catalog::cp(n).unwrap(), true));
    }
    for degrees in [&[1u32][..], &[2, 3], &[1, 1, 2], &[3, 5, 4]] {
        out.push(entry(
            format!("exterior{degrees:?}"),
            catalog::exterior(degrees).unwrap(),
            true,
        ));
    }
    for desc in ["pps:2,3", "pps:2,2", "pps:3,4,5", "pps:5"] {
        out.push(entry(desc, parsed(desc), true));
    }
    for desc in [
        "gpps-cs:5,3;2,3",
        "gpps-cs:5,3;4",
        "gpps-tensor:5,3;pps:2,3",
        "gpps-tensor:3,2;rp:3",
    ] {
        out.push(entry(desc, parsed(desc), true));
    }

    let quotients = [
        (
            "quot-real-z2",
            5,
            3,
            catalog::quotient_real_z2 as fn(u32, u32, &ParamBits) -> _,
        ),
        ("quot-complex-z2", 5, 3, catalog::quotient_complex_z2),
    ];
    for (name, r, s, build) in quotients {
        for params in catalog::ParamLayout::z2(s).assignments() {
            let p = build(r, s, &params).unwrap();
            let duality = catalog::duality_check(&p).unwrap().holds();
            out.push(entry(format!("{name}:{r},{s}@{params}"), p, duality));
        }
    }
    for r in (1..=5).step_by(2) {
        for s in (1..=r).step_by(2) {
            for params in catalog::ParamLayout::S1.assignments() {
                let p = catalog::quotient_real_s1(r, s, &params).unwrap();
                let duality = catalog::duality_check(&p).unwrap().holds();
                out.push(entry(format!("quot-real-s1:{r},{s}@{params}"), p, duality));
            }
        }
    }
    for params in ["0010000", "0011010", "1010101"] {
        let desc = format!("gpps-refl:real,5,3;(3,2)@{params}");
        let p = parsed(&desc);
        let duality = catalog::duality_check(&p).unwrap().holds();
        out.push(entry(desc, p, duality));
    }
    out
}

/// All exponent vectors of weighted degree `d`.
pub fn monomials_of_degree(degrees: &[u32], d: u32) -> Vec<Vec<u32>> {
    fn go(degrees: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == degrees.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for e in 0..=left / degrees[i] {
            cur.push(e);
            go(degrees, i + 1, left - e * degrees[i], cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(degrees, 0, d, &mut Vec::new(), &mut out);
    out
}

/// Row-echelon basis over F2 with rows stored as `u64` words.
struct Span {
    width: usize,
    rows: Vec<(usize, Vec<u64>)>,
}

fn pivot(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

impl Span {
    fn new(width: usize) -> Self {
        Span {
            width,
            rows: Vec::new(),
        }
    }

    fn reduce(&self, v: &mut [u64]) {
        for (p, row) in &self.rows {
            if v[p / 64] >> (p % 64) & 1 == 1 {
                for (a, b) in v.iter_mut().zip(row) {
                    *a ^= b;
                }
            }
        }
    }

    fn insert(&mut self, mut v: Vec<u64>) {
        self.reduce(&mut v);
        if let Some(p) = pivot(&v) {
            for (_, row) in &mut self.rows {
                if row[p / 64] >> (p % 64) & 1 == 1 {
                    for (a, b) in row.iter_mut().zip(&v) {
                        *a ^= b;
                    }
                }
            }
            self.rows.push((p, v));
        }
    }

    fn contains(&self, v: &[u64]) -> bool {
        let mut v = v.to_vec();
        self.reduce(&mut v);
        v.iter().all(|&w| w == 0)
    }

    fn words(&self) -> usize {
        self.width.div_ceil(64).max(1)
    }
}

/// The degree-`d` piece of the ideal, as the span of `m·rel` over all
/// monomials `m` and relations `rel` of matching degree.
pub struct DegreeOracle {
    pub monomials: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
    ideal: Span,
}

impl DegreeOracle {
    pub fn quotient_dimension(&self) -> usize {
        self.monomials.len() - self.ideal.rows.len()
    }

    fn vector(&self, p: &Polynomial) -> Vec<u64> {
        let mut v = vec![0u64; self.ideal.words()];
        for m in p.monomials() {
            let i = self.index[&m.0];
            v[i / 64] ^= 1 << (i % 64);
        }
        v
    }

    /// Whether the homogeneous polynomial `p` lies in the ideal.
    pub fn in_ideal(&self, p: &Polynomial) -> bool {
        self.ideal.contains(&self.vector(p))
    }
}

pub struct Oracle {
    pub degrees: Vec<u32>,
    pub by_degree: Vec<DegreeOracle>,
}

impl Oracle {
    /// Builds the model through degree `cap` straight from the presentation.
    pub fn new(p: &Presentation, cap: u32) -> Self {
        let degrees = p.degrees();
        let by_degree = (0..=cap)
            .map(|d| {
                let monomials = monomials_of_degree(&degrees, d);
                let index: HashMap<_, _> = monomials
                    .iter()
                    .enumerate()
                    .map(|(i, m)| (m.clone(), i))
                    .collect();
                let mut ideal = Span::new(monomials.len());
                for rel in &p.relations {
                    let Some(e) = rel.max_degree(&degrees) else {
                        continue;
                    };
                    if e > d {
                        continue;
                    }
                    for m in monomials_of_degree(&degrees, d - e) {
                        let mut v = vec![0u64; ideal.words()];
                        for t in rel.monomials() {
                            let prod: Vec<u32> = t.0.iter().zip(&m).map(|(a, b)| a + b).collect();
                            let i = index[&prod];
                            v[i / 64] ^= 1 << (i % 64);
                        }
                        ideal.insert(v);
                    }
                }
                DegreeOracle {
                    monomials,
                    index,
                    ideal,
                }
            })
            .collect();
        Oracle { degrees, by_degree }
    }

    pub fn hilbert(&self) -> Vec<usize> {
        self.by_degree
            .iter()
            .map(DegreeOracle::quotient_dimension)
            .collect()
    }

    /// Splits `p` into homogeneous components indexed by degree.
    pub fn components(&self, p: &Polynomial) -> Vec<Polynomial> {
        let mut parts = vec![Polynomial::zero(); self.by_degree.len()];
        for m in p.monomials() {
            parts[m.degree(&self.degrees) as usize].toggle(m.clone());
        }
        parts
    }

    /// A random polynomial with up to three homogeneous components.
    pub fn random_polynomial(&self, rng: &mut impl Rng) -> Polynomial {
        let mut p = Polynomial::zero();
        for _ in 0..rng.gen_range(1..=3) {
            let d = rng.gen_range(0..self.by_degree.len());
            for m in &self.by_degree[d].monomials {
                if rng.gen_bool(0.5) {
                    p.toggle(Monomial(m.clone()));
                }
            }
        }
        p
    }
}

/// Sum of two polynomials over F2.
pub fn add(p: &Polynomial, q: &Polynomial) -> Polynomial {
    let mut out = p.clone();
    for m in q.monomials() {
        out.toggle(m.clone());
    }
    out
}

/// Failures of the normal form against the oracle over `samples` random
/// polynomials, or of the Hilbert function. Empty means agreement.
pub fn check_against_oracle(ring: &ReducedRing, samples: usize, rng: &mut impl Rng) -> Vec<String> {
    let oracle = Oracle::new(ring.presentation(), ring.degree_cap());
    let mut problems = Vec::new();
    if oracle.hilbert() != ring.hilbert() {
        problems.push(format!(
            "hilbert {:?} but oracle gives {:?}",
            ring.hilbert(),
            oracle.hilbert()
        ));
    }
    let standard = ring.basis_by_degree();
    for _ in 0..samples {
        let p = oracle.random_polynomial(rng);
        let nf = ring.normal_form(&p).unwrap();
        let diff = oracle.components(&add(&p, &nf));
        let nf_parts = oracle.components(&nf);
        for (d, part) in diff.iter().enumerate() {
            if !oracle.by_degree[d].in_ideal(part) {
                problems.push(format!("p - nf(p) not in the ideal in degree {d}"));
            }
            if nf_parts[d].monomials().any(|m| !standard[d].contains(m)) {
                problems.push(format!("nf has a non-standard monomial in degree {d}"));
            }
        }
        if problems.len() > 5 {
            break;
        }
    }
    problems
}
