//! Cup-length, zero-divisor cup-length and the tensor-square machinery.
//!
//! # Why generator products suffice for cup-length
//!
//! Every positive-degree class is an F2-sum of monomials in the generators,
//! each of length at least one. Expanding a nonzero product of `k` such
//! classes by distributivity gives a sum of generator monomials, at least one
//! of which is nonzero, and each of those has at least `k` factors. So the
//! longest nonzero product of positive-degree classes has the same length as
//! the longest nonzero product of generators, and the search only has to
//! range over generator multisets.
//!
//! Zero-divisor cup-length comes in two flavours. [`zcl_basic`] only uses the
//! basic zero divisors `1⊗g + g⊗1`, which is all the lower-bound arguments in
//! the literature need. [`zcl_exhaustive`] uses the whole kernel of the
//! multiplication map and is meant as an oracle for small rings.

mod linalg;
mod search;
mod tensor;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::f2poly::{add_elems, Elem, PMono, Polynomial, ReducedRing};
use crate::{Error, Result};

use linalg::{BitVec, Echelon};
pub use tensor::{tensor_square, TensorSquare, DEFAULT_TENSOR_BUDGET};

/// Default number of product evaluations a multiset search may perform.
pub const DEFAULT_NODE_BUDGET: usize = 2_000_000;
/// Default cap on the kernel dimension per degree for [`zcl_exhaustive`].
pub const DEFAULT_KERNEL_BUDGET: usize = 24;

/// Which invariant a number is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Notion {
    CupLength,
    ZclBasic,
    ZclExhaustive,
}

impl fmt::Display for Notion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Notion::CupLength => "cl",
            Notion::ZclBasic => "zcl (basic zero divisors)",
            Notion::ZclExhaustive => "zcl (all zero divisors)",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessFactor {
    pub label: String,
    pub multiplicity: u32,
}

/// A computed invariant with a nonzero product attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantResult {
    pub value: usize,
    pub notion: Notion,
    /// Factors of the witness product; multiplicities sum to `value`.
    pub factors: Vec<WitnessFactor>,
    /// The witness rendered as `abar^3 * bbar^7`.
    pub witness: String,
    /// The nonzero normal form of the witness product.
    pub product: String,
    /// Product evaluations spent by the search.
    pub nodes: usize,
}

impl InvariantResult {
    fn new(
        notion: Notion,
        labels: &[String],
        mults: &[u32],
        product: String,
        nodes: usize,
    ) -> Self {
        let factors: Vec<WitnessFactor> = labels
            .iter()
            .zip(mults)
            .filter(|(_, &m)| m > 0)
            .map(|(l, &m)| WitnessFactor {
                label: l.clone(),
                multiplicity: m,
            })
            .collect();
        InvariantResult {
            value: mults.iter().map(|&m| m as usize).sum(),
            notion,
            witness: render_factors(&factors),
            factors,
            product,
            nodes,
        }
    }

    /// Multiplicities keyed by label, the shape [`zd_product`] expects.
    pub fn multiplicities(&self) -> BTreeMap<String, u32> {
        self.factors
            .iter()
            .map(|f| (f.label.clone(), f.multiplicity))
            .collect()
    }
}

fn render_factors(factors: &[WitnessFactor]) -> String {
    if factors.is_empty() {
        return "1".to_string();
    }
    factors
        .iter()
        .map(|f| match f.multiplicity {
            1 => f.label.clone(),
            m => format!("{}^{m}", f.label),
        })
        .collect::<Vec<_>>()
        .join(" * ")
}

/// Budgets and scheduling for the searches.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(default)]
pub struct SearchOptions {
    /// Maximum total dimension of a tensor square.
    pub tensor_budget: u128,
    /// Maximum number of product evaluations in one multiset search.
    pub node_budget: usize,
    /// Maximum kernel dimension per degree for the exhaustive oracle.
    pub kernel_budget: usize,
    pub parallel: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            tensor_budget: DEFAULT_TENSOR_BUDGET,
            node_budget: DEFAULT_NODE_BUDGET,
            kernel_budget: DEFAULT_KERNEL_BUDGET,
            parallel: true,
        }
    }
}

/// Longest nonzero product of positive-degree generators.
pub fn cup_length(ring: &ReducedRing) -> InvariantResult {
    cup_length_with(ring, &SearchOptions::default())
        .expect("cup-length search exceeded the default node budget")
}

pub fn cup_length_with(ring: &ReducedRing, opts: &SearchOptions) -> Result<InvariantResult> {
    let factors: Vec<Elem> = (0..ring.ngens()).map(|i| ring.gen_elem(i)).collect();
    let labels = ring.names();
    let out = search::longest_product(ring, &factors, opts.node_budget, opts.parallel);
    let product = product_of(ring, &factors, &out.witness);
    let result = InvariantResult::new(
        Notion::CupLength,
        &labels,
        &out.witness,
        ring.render(&ring.to_poly(&product)),
        out.nodes,
    );
    if out.exhausted {
        return Err(Error::SearchBudget {
            budget: opts.node_budget,
            best: Box::new(result),
        });
    }
    Ok(result)
}

fn product_of(ring: &ReducedRing, factors: &[Elem], mults: &[u32]) -> Elem {
    let mut acc = ring.one_elem();
    for (f, &m) in factors.iter().zip(mults) {
        acc = ring.mul_elem(&acc, &ring.pow_elem(f, m));
    }
    acc
}

/// One independent product in the exhaustive search: degree, element and
/// the kernel basis indices it was built from.
type Frontier = (u32, Elem, Vec<usize>);

/// `1⊗g + g⊗1` for a generator `g`, an element of the tensor square.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroDivisor {
    pub label: String,
    pub element: Polynomial,
}

/// A ring together with its tensor square and basic zero divisors, so several
/// products can share one completion.
#[derive(Clone, Debug)]
pub struct ZeroDivisorAlgebra {
    base: ReducedRing,
    square: TensorSquare,
    divisors: Vec<ZeroDivisor>,
    elems: Vec<Elem>,
}

impl ZeroDivisorAlgebra {
    pub fn new(ring: &ReducedRing) -> Result<Self> {
        Self::with_budget(ring, DEFAULT_TENSOR_BUDGET)
    }

    pub fn with_budget(ring: &ReducedRing, tensor_budget: u128) -> Result<Self> {
        let square = TensorSquare::new(ring, tensor_budget)?;
        let mut divisors = Vec::new();
        let mut elems = Vec::new();
        for (i, g) in ring.presentation().generators.iter().enumerate() {
            let e = add_elems(&square.left_gen(i), &square.right_gen(i));
            let element = square.ring.to_poly(&e);
            let image = square.multiplication_map(ring, &element)?;
            if !image.is_zero() {
                return Err(Error::Reduction(format!(
                    "basic zero divisor for `{}` maps to {} under multiplication",
                    g.name,
                    ring.render(&image)
                )));
            }
            divisors.push(ZeroDivisor {
                label: format!("{}bar", g.name),
                element,
            });
            elems.push(e);
        }
        Ok(ZeroDivisorAlgebra {
            base: ring.clone(),
            square,
            divisors,
            elems,
        })
    }

    pub fn base(&self) -> &ReducedRing {
        &self.base
    }

    pub fn square(&self) -> &TensorSquare {
        &self.square
    }

    pub fn divisors(&self) -> &[ZeroDivisor] {
        &self.divisors
    }

    fn labels(&self) -> Vec<String> {
        self.divisors.iter().map(|z| z.label.clone()).collect()
    }

    fn mult_vector(&self, mults: &BTreeMap<String, u32>) -> Result<Vec<u32>> {
        let mut v = vec![0; self.divisors.len()];
        for (label, &m) in mults {
            let i = self
                .divisors
                .iter()
                .position(|z| &z.label == label)
                .ok_or_else(|| Error::UnknownLabel(label.clone()))?;
            v[i] = m;
        }
        Ok(v)
    }

    /// Normal form of a product of basic zero divisors in the tensor square.
    pub fn product(&self, mults: &BTreeMap<String, u32>) -> Result<Polynomial> {
        let v = self.mult_vector(mults)?;
        let degs = self.base.degrees();
        let degree: u32 = v.iter().zip(degs).map(|(m, d)| m * d).sum();
        let cap = self.square.ring.degree_cap();
        if degree > cap {
            return Err(Error::DegreeOverflow { degree, cap });
        }
        let e = product_of(&self.square.ring, &self.elems, &v);
        Ok(self.square.ring.to_poly(&e))
    }

    pub fn render(&self, p: &Polynomial) -> String {
        self.square.ring.render(p)
    }

    pub fn zcl_basic(&self, opts: &SearchOptions) -> Result<InvariantResult> {
        let sq = &self.square.ring;
        let out = search::longest_product(sq, &self.elems, opts.node_budget, opts.parallel);
        let product = product_of(sq, &self.elems, &out.witness);
        let result = InvariantResult::new(
            Notion::ZclBasic,
            &self.labels(),
            &out.witness,
            sq.render(&sq.to_poly(&product)),
            out.nodes,
        );
        if out.exhausted {
            return Err(Error::SearchBudget {
                budget: opts.node_budget,
                best: Box::new(result),
            });
        }
        Ok(result)
    }

    /// Kernel of the multiplication map in each positive degree, as elements
    /// of the tensor square.
    fn kernel_by_degree(&self, budget: usize) -> Result<Vec<Vec<Elem>>> {
        let sq = &self.square.ring;
        let cap = sq.degree_cap();
        let mut out = vec![Vec::new(); cap as usize + 1];
        for d in 1..=cap {
            let monos = sq.standard(d);
            if monos.is_empty() {
                continue;
            }
            let target: Vec<PMono> = if d <= self.base.degree_cap() {
                self.base.standard(d).to_vec()
            } else {
                Vec::new()
            };
            let images: Vec<BitVec> = monos
                .iter()
                .map(|&m| {
                    let mut v = BitVec::zeros(target.len());
                    for t in self.square.mu_mono(&self.base, m) {
                        let j = target
                            .binary_search_by(|s| t.cmp(s))
                            .expect("normal form lies in the standard basis");
                        v.flip(j);
                    }
                    v
                })
                .collect();
            let ker = linalg::kernel(&images);
            if ker.len() > budget {
                return Err(Error::OracleUnavailable(format!(
                    "kernel of the multiplication map has dimension {} in degree {d}, over the budget of {budget}",
                    ker.len()
                )));
            }
            out[d as usize] = ker
                .iter()
                .map(|c| {
                    let mut e: Elem = c.ones().map(|i| monos[i]).collect();
                    e.sort_unstable_by(|a, b| b.cmp(a));
                    e
                })
                .collect();
        }
        Ok(out)
    }

    /// Largest `k` with `K^k ≠ 0`, where `K` is the kernel of the
    /// multiplication map. `K` is an ideal, so `K^k` is spanned by products of
    /// `k` kernel basis vectors, and spanning sets can be kept independent
    /// level by level.
    pub fn zcl_exhaustive(&self, kernel_budget: usize) -> Result<InvariantResult> {
        let sq = &self.square.ring;
        let kernel = self.kernel_by_degree(kernel_budget)?;
        let basis: Vec<(u32, &Elem)> = kernel
            .iter()
            .enumerate()
            .flat_map(|(d, v)| v.iter().map(move |e| (d as u32, e)))
            .collect();
        let cap = sq.degree_cap();

        let mut level: Vec<Frontier> = basis
            .iter()
            .enumerate()
            .map(|(i, (d, e))| (*d, (*e).clone(), vec![i]))
            .collect();
        let mut nodes = level.len();
        let mut value = if level.is_empty() { 0 } else { 1 };
        loop {
            let mut per_degree: BTreeMap<u32, (Echelon, Vec<Frontier>)> = BTreeMap::new();
            for (d1, e1, f1) in &level {
                for (j, (d2, e2)) in basis.iter().enumerate() {
                    let d = d1 + d2;
                    if d > cap {
                        continue;
                    }
                    nodes += 1;
                    let p = sq.mul_elem(e1, e2);
                    if p.is_empty() {
                        continue;
                    }
                    let monos = sq.standard(d);
                    let mut v = BitVec::zeros(monos.len());
                    for t in &p {
                        let idx = monos
                            .binary_search_by(|s| t.cmp(s))
                            .expect("normal form lies in the standard basis");
                        v.set(idx);
                    }
                    let (ech, kept) = per_degree.entry(d).or_default();
                    if ech.insert(v) {
                        let mut f = f1.clone();
                        f.push(j);
                        kept.push((d, p, f));
                    }
                }
            }
            let next: Vec<_> = per_degree.into_values().flat_map(|(_, k)| k).collect();
            if next.is_empty() {
                break;
            }
            level = next;
            value += 1;
        }

        let (product, factors) = match level.iter().max_by_key(|(d, _, _)| *d) {
            Some((_, p, f)) if value > 0 => (sq.to_poly(p), f.clone()),
            _ => (Polynomial::one(sq.ngens()), Vec::new()),
        };
        let labels: Vec<String> = factors
            .iter()
            .map(|&i| format!("({})", sq.render(&sq.to_poly(basis[i].1))))
            .collect();
        let mut counts: BTreeMap<&String, u32> = BTreeMap::new();
        for l in &labels {
            *counts.entry(l).or_default() += 1;
        }
        let factors: Vec<WitnessFactor> = counts
            .into_iter()
            .map(|(l, m)| WitnessFactor {
                label: l.clone(),
                multiplicity: m,
            })
            .collect();
        Ok(InvariantResult {
            value,
            notion: Notion::ZclExhaustive,
            witness: render_factors(&factors),
            factors,
            product: sq.render(&product),
            nodes,
        })
    }
}

/// Basic zero divisors of `ring`, one per generator, each checked to lie in
/// the kernel of the multiplication map.
pub fn basic_zero_divisors(ring: &ReducedRing) -> Result<Vec<ZeroDivisor>> {
    Ok(ZeroDivisorAlgebra::new(ring)?.divisors)
}

/// Product of basic zero divisors with the given multiplicities, keyed by
/// label (`abar`, `bbar`, ...).
pub fn zd_product(
    ring: &ReducedRing,
    multiplicities: &BTreeMap<String, u32>,
) -> Result<Polynomial> {
    ZeroDivisorAlgebra::new(ring)?.product(multiplicities)
}

pub fn zcl_basic(ring: &ReducedRing) -> Result<InvariantResult> {
    zcl_basic_with(ring, &SearchOptions::default())
}

pub fn zcl_basic_with(ring: &ReducedRing, opts: &SearchOptions) -> Result<InvariantResult> {
    ZeroDivisorAlgebra::with_budget(ring, opts.tensor_budget)?.zcl_basic(opts)
}

/// Exhaustive zero-divisor cup-length. Refuses with
/// [`Error::OracleUnavailable`] when some degree of the kernel is larger than
/// `dimension_budget`.
pub fn zcl_exhaustive(ring: &ReducedRing, dimension_budget: usize) -> Result<InvariantResult> {
    ZeroDivisorAlgebra::new(ring)?.zcl_exhaustive(dimension_budget)
}

/// `C(n, k) mod 2` by Lucas: odd exactly when the bits of `k` are a subset of
/// the bits of `n`.
pub fn binom_parity(n: u64, k: u64) -> u8 {
    (k <= n && k & !n == 0) as u8
}

/// Convenience for building multiplicity maps in tests and callers.
pub fn multiplicities<const N: usize>(pairs: [(&str, u32); N]) -> BTreeMap<String, u32> {
    pairs.iter().map(|&(l, m)| (l.to_string(), m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2poly::{GeneratorInfo, Monomial, Presentation};

    fn truncated(name: &str, degree: u32, n: u32) -> ReducedRing {
        let p = Presentation::new(
            vec![GeneratorInfo::new(name, degree)],
            vec![Polynomial::from_exponents([vec![n + 1]])],
            Some(n * degree),
            false,
        )
        .unwrap();
        ReducedRing::new(&p).unwrap()
    }

    fn klein() -> ReducedRing {
        let p = Presentation::new(
            vec![GeneratorInfo::new("a", 1), GeneratorInfo::new("b", 1)],
            vec![
                Polynomial::from_exponents([vec![2, 0]]),
                Polynomial::from_exponents([vec![0, 2], vec![1, 1]]),
            ],
            Some(2),
            false,
        )
        .unwrap();
        ReducedRing::new(&p).unwrap()
    }

    #[test]
    fn cup_length_of_truncated_rings() {
        for n in 0..6 {
            let r = cup_length(&truncated("a", 1, n));
            assert_eq!(r.value, n as usize);
        }
        assert_eq!(cup_length(&truncated("a", 2, 2)).witness, "a^2");
    }

    #[test]
    fn circle_zero_divisor_squares_to_zero() {
        let ring = truncated("a", 1, 1);
        let z = ZeroDivisorAlgebra::new(&ring).unwrap();
        assert_eq!(z.divisors()[0].label, "abar");
        assert!(!z.product(&multiplicities([("abar", 1)])).unwrap().is_zero());
        assert!(z.product(&multiplicities([("abar", 2)])).unwrap().is_zero());
        assert_eq!(zcl_exhaustive(&ring, 24).unwrap().value, 1);
    }

    #[test]
    fn rp2_cube() {
        let ring = truncated("a", 1, 2);
        let z = ZeroDivisorAlgebra::new(&ring).unwrap();
        let p = z.product(&multiplicities([("abar", 3)])).unwrap();
        let expect: Polynomial = [Monomial(vec![2, 1]), Monomial(vec![1, 2])]
            .into_iter()
            .collect();
        assert_eq!(p, expect);
        assert_eq!(z.zcl_basic(&SearchOptions::default()).unwrap().value, 3);
        assert_eq!(z.zcl_exhaustive(24).unwrap().value, 3);
    }

    #[test]
    fn klein_bottle_zcl() {
        let ring = klein();
        let z = ZeroDivisorAlgebra::new(&ring).unwrap();
        let zero = |m| z.product(&m).unwrap().is_zero();
        assert!(zero(multiplicities([("abar", 2)])));
        assert!(zero(multiplicities([("bbar", 4)])));
        assert!(zero(multiplicities([("abar", 1), ("bbar", 3)])));
        assert!(!zero(multiplicities([("bbar", 3)])));
        let r = z.zcl_basic(&SearchOptions::default()).unwrap();
        assert_eq!(r.value, 3);
        assert!(!z.product(&r.multiplicities()).unwrap().is_zero());
        let ex = z.zcl_exhaustive(24).unwrap().value;
        assert!((3..=4).contains(&ex));
    }

    #[test]
    fn unknown_label_and_overflow() {
        let z = ZeroDivisorAlgebra::new(&klein()).unwrap();
        assert!(matches!(
            z.product(&multiplicities([("cbar", 1)])),
            Err(Error::UnknownLabel(_))
        ));
        assert!(matches!(
            z.product(&multiplicities([("abar", 5)])),
            Err(Error::DegreeOverflow { .. })
        ));
        assert_eq!(z.product(&BTreeMap::new()).unwrap(), Polynomial::one(4));
    }

    #[test]
    fn exhaustive_budget_refuses() {
        let ring = truncated("a", 1, 6);
        assert!(matches!(
            zcl_exhaustive(&ring, 0),
            Err(Error::OracleUnavailable(_))
        ));
    }

    #[test]
    fn search_budget_reports_best() {
        let ring = truncated("a", 1, 6);
        let opts = SearchOptions {
            node_budget: 3,
            ..SearchOptions::default()
        };
        match cup_length_with(&ring, &opts) {
            Err(Error::SearchBudget { best, .. }) => assert_eq!(best.value, 3),
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn lucas_parity() {
        assert_eq!(binom_parity(5, 2), 0);
        assert_eq!(binom_parity(7, 0), 1);
        assert_eq!(binom_parity(3, 5), 0);
        for t in 0..=10u32 {
            let n = (1u64 << t) - 1;
            assert!((0..=n).all(|l| binom_parity(n, l) == 1));
        }
    }
}
