//! Packed exponent vectors.
//!
//! Each generator owns a fixed-width bit field inside a `u128`, generator 0 in
//! the most significant field. The top bit of every field is a guard bit that
//! stays clear in valid monomials, which lets divisibility be tested with one
//! subtraction. Exponents never exceed the degree cap, so the field width is
//! `bitlen(cap) + 1`.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::{Error, Result};

/// A packed monomial together with its weighted degree.
///
/// Ordered by graded reverse lexicographic order with the generators ranked
/// in reverse listing order: higher degree is larger; on ties, the monomial
/// with the smaller exponent in the first generator where they differ is
/// larger. With generator 0 in the most significant field this is the reverse
/// of integer order on `bits`.
///
/// So for generators `a, b` of degree one, `b² > ab > a²`, and the leading
/// term of `b^r + a·b^(r-1) + …` is `b^r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct PMono {
    pub deg: u32,
    pub bits: u128,
}

impl Ord for PMono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg
            .cmp(&other.deg)
            .then_with(|| other.bits.cmp(&self.bits))
    }
}

impl PartialOrd for PMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ring element: distinct monomials sorted in decreasing monomial order.
pub(crate) type Elem = Vec<PMono>;

#[derive(Clone, Debug)]
pub(crate) struct Layout {
    pub degrees: Vec<u32>,
    width: u32,
    field: u128,
    guard: u128,
}

impl Layout {
    pub fn new(degrees: &[u32], cap: u32) -> Result<Self> {
        let width = (32 - cap.leading_zeros()) + 1;
        let n = degrees.len() as u32;
        if n * width > 128 {
            return Err(Error::TooManyGenerators(degrees.len()));
        }
        let field = (1u128 << width) - 1;
        let mut guard = 0u128;
        for i in 0..n {
            guard |= 1u128 << (i * width + width - 1);
        }
        Ok(Layout {
            degrees: degrees.to_vec(),
            width,
            field,
            guard,
        })
    }

    pub fn nvars(&self) -> usize {
        self.degrees.len()
    }

    #[inline]
    fn shift(&self, i: usize) -> u32 {
        (self.nvars() - 1 - i) as u32 * self.width
    }

    fn max_exponent(&self) -> u32 {
        (1u32 << (self.width - 1)) - 1
    }

    pub fn one(&self) -> PMono {
        PMono { deg: 0, bits: 0 }
    }

    pub fn var(&self, i: usize) -> PMono {
        PMono {
            deg: self.degrees[i],
            bits: 1u128 << self.shift(i),
        }
    }

    pub fn pack(&self, exps: &[u32]) -> Result<PMono> {
        if exps.len() != self.nvars() {
            return Err(Error::Arity {
                expected: self.nvars(),
                got: exps.len(),
            });
        }
        let mut bits = 0u128;
        let mut deg = 0u32;
        for (i, &e) in exps.iter().enumerate() {
            if e > self.max_exponent() {
                return Err(Error::DegreeOverflow {
                    degree: e * self.degrees[i],
                    cap: self.max_exponent(),
                });
            }
            bits |= (e as u128) << self.shift(i);
            deg += e * self.degrees[i];
        }
        Ok(PMono { deg, bits })
    }

    pub fn exponent(&self, m: PMono, i: usize) -> u32 {
        ((m.bits >> self.shift(i)) & self.field) as u32
    }

    pub fn unpack(&self, m: PMono) -> Vec<u32> {
        (0..self.nvars()).map(|i| self.exponent(m, i)).collect()
    }

    /// `a` divides `b`.
    #[inline]
    pub fn divides(&self, a: PMono, b: PMono) -> bool {
        a.deg <= b.deg && ((b.bits | self.guard) - a.bits) & self.guard == self.guard
    }

    /// `b / a`; caller guarantees divisibility.
    #[inline]
    pub fn quotient(&self, b: PMono, a: PMono) -> PMono {
        PMono {
            deg: b.deg - a.deg,
            bits: b.bits - a.bits,
        }
    }

    /// Product; caller guarantees the result stays within the cap.
    #[inline]
    pub fn mul(&self, a: PMono, b: PMono) -> PMono {
        PMono {
            deg: a.deg + b.deg,
            bits: a.bits + b.bits,
        }
    }

    /// Least common multiple, or `None` when its degree exceeds `cap`.
    pub fn lcm(&self, a: PMono, b: PMono, cap: u32) -> Option<PMono> {
        let mut bits = 0u128;
        let mut deg = 0u32;
        for i in 0..self.nvars() {
            let e = self.exponent(a, i).max(self.exponent(b, i));
            deg += e * self.degrees[i];
            bits |= (e as u128) << self.shift(i);
        }
        (deg <= cap).then_some(PMono { deg, bits })
    }

    pub fn coprime(&self, a: PMono, b: PMono) -> bool {
        (0..self.nvars()).all(|i| self.exponent(a, i) == 0 || self.exponent(b, i) == 0)
    }
}

/// Symmetric difference of two sorted elements.
pub(crate) fn add(a: &[PMono], b: &[PMono]) -> Elem {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Sorts arbitrary terms into an element, cancelling pairs.
pub(crate) fn collect(mut terms: Vec<PMono>) -> Elem {
    terms.sort_unstable_by(|a, b| b.cmp(a));
    let mut out: Elem = Vec::with_capacity(terms.len());
    for t in terms {
        if out.last() == Some(&t) {
            out.pop();
        } else {
            out.push(t);
        }
    }
    out
}

/// Toggle-set used as the work list of a reduction.
pub(crate) fn toggle(set: &mut BTreeSet<PMono>, m: PMono) {
    if !set.remove(&m) {
        set.insert(m);
    }
}
