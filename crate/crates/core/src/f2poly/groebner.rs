//! Degree-truncated Buchberger completion for homogeneous ideals over F2.
//!
//! Inputs and S-polynomials are processed in increasing degree. For
//! homogeneous input, a new basis element of degree `d` only creates pairs
//! whose lcm has degree above `d`, so once degree `d` is finished the basis is
//! final through degree `d`. Pairs above the cap are dropped.

use std::collections::{BTreeMap, BTreeSet};

use super::packed::{self, Elem, Layout, PMono};

/// Fully reduces `p` modulo `basis` (every element's first term is its lead).
pub(crate) fn reduce(layout: &Layout, basis: &[Elem], p: &[PMono]) -> Elem {
    let mut work: BTreeSet<PMono> = p.iter().copied().collect();
    let mut out = Vec::new();
    while let Some(t) = work.pop_last() {
        match basis.iter().find(|g| layout.divides(g[0], t)) {
            Some(g) => {
                let q = layout.quotient(t, g[0]);
                for &u in &g[1..] {
                    packed::toggle(&mut work, layout.mul(q, u));
                }
            }
            None => out.push(t),
        }
    }
    out
}

fn shift(layout: &Layout, q: PMono, g: &[PMono]) -> Elem {
    g.iter().map(|&u| layout.mul(q, u)).collect()
}

/// Returns a reduced Gröbner basis, valid for every degree up to `cap`,
/// sorted by leading monomial.
pub(crate) fn complete(layout: &Layout, relations: Vec<Elem>, cap: u32) -> Vec<Elem> {
    let mut pending: BTreeMap<u32, Vec<Elem>> = BTreeMap::new();
    for r in relations {
        if let Some(lead) = r.first() {
            if lead.deg <= cap {
                pending.entry(lead.deg).or_default().push(r);
            }
        }
    }
    let mut basis: Vec<Elem> = Vec::new();
    let mut pairs: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();

    while let Some(d) = {
        let a = pending.keys().next().copied();
        let b = pairs.keys().next().copied();
        match (a, b) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    } {
        let mut items = pending.remove(&d).unwrap_or_default();
        for (i, j) in pairs.remove(&d).unwrap_or_default() {
            let (gi, gj) = (&basis[i], &basis[j]);
            let l = layout
                .lcm(gi[0], gj[0], cap)
                .expect("pair lcm was checked against the cap");
            let s = packed::add(
                &shift(layout, layout.quotient(l, gi[0]), gi),
                &shift(layout, layout.quotient(l, gj[0]), gj),
            );
            items.push(s);
        }
        for item in items {
            let r = reduce(layout, &basis, &item);
            if r.is_empty() {
                continue;
            }
            let idx = basis.len();
            for (k, g) in basis.iter().enumerate() {
                if layout.coprime(g[0], r[0]) {
                    continue;
                }
                if let Some(l) = layout.lcm(g[0], r[0], cap) {
                    pairs.entry(l.deg).or_default().push((k, idx));
                }
            }
            basis.push(r);
        }
    }
    interreduce(layout, basis)
}

fn interreduce(layout: &Layout, basis: Vec<Elem>) -> Vec<Elem> {
    // Drop elements whose lead is divisible by another lead.
    let mut minimal: Vec<Elem> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(j, h)| j != i && layout.divides(h[0], g[0]) && (h[0] != g[0] || j < i));
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out: Vec<Elem> = minimal
        .iter()
        .map(|g| {
            let mut tail = reduce(layout, &minimal, &g[1..]);
            let mut e = vec![g[0]];
            e.append(&mut tail);
            e
        })
        .collect();
    out.sort_by(|a, b| a[0].cmp(&b[0]));
    out
}
