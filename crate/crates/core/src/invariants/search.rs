//! Longest nonzero product over multisets of fixed factors.
//!
//! Vanishing is monotone: if a multiset's product is zero, so is the product
//! of every larger multiset. The search therefore proceeds level by level in
//! the total multiplicity, and a candidate is only evaluated when every
//! multiset obtained by removing one factor survived the previous level. The
//! surviving level is the memo of the nonvanishing frontier.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::f2poly::{Elem, ReducedRing};

pub(crate) struct Outcome {
    /// Canonical witness multiplicities (see [`pick_witness`]).
    pub witness: Vec<u32>,
    /// Product evaluations performed.
    pub nodes: usize,
    /// True when the node budget stopped the search early.
    pub exhausted: bool,
}

pub(crate) fn longest_product(
    ring: &ReducedRing,
    factors: &[Elem],
    node_budget: usize,
    parallel: bool,
) -> Outcome {
    let m = factors.len();
    let mut level: BTreeMap<Vec<u32>, Elem> = BTreeMap::new();
    level.insert(vec![0; m], ring.one_elem());
    let mut nodes = 0;

    loop {
        let mut candidates: BTreeSet<(Vec<u32>, usize)> = BTreeSet::new();
        for v in level.keys() {
            for i in 0..m {
                let mut w = v.clone();
                w[i] += 1;
                let all_preds_alive = (0..m).filter(|&j| w[j] > 0).all(|j| {
                    let mut p = w.clone();
                    p[j] -= 1;
                    level.contains_key(&p)
                });
                if !all_preds_alive {
                    continue;
                }
                // Canonical predecessor: drop the last nonzero factor.
                let last = (0..m).rev().find(|&j| w[j] > 0).expect("nonzero");
                candidates.insert((w, last));
            }
        }
        if candidates.is_empty() {
            break;
        }
        if nodes + candidates.len() > node_budget {
            return Outcome {
                witness: pick_witness(ring, &level),
                nodes,
                exhausted: true,
            };
        }
        nodes += candidates.len();
        let eval = |(w, last): &(Vec<u32>, usize)| {
            let mut p = w.clone();
            p[*last] -= 1;
            let prod = ring.mul_elem(&level[&p], &factors[*last]);
            (w.clone(), prod)
        };
        let cands: Vec<_> = candidates.into_iter().collect();
        let evaluated: Vec<(Vec<u32>, Elem)> = if parallel {
            cands.par_iter().map(eval).collect()
        } else {
            cands.iter().map(eval).collect()
        };
        let next: BTreeMap<Vec<u32>, Elem> = evaluated
            .into_iter()
            .filter(|(_, e)| !e.is_empty())
            .collect();
        if next.is_empty() {
            break;
        }
        level = next;
    }
    Outcome {
        witness: pick_witness(ring, &level),
        nodes,
        exhausted: false,
    }
}

/// Highest total degree first, then the lexicographically largest
/// multiplicity vector.
fn pick_witness(_ring: &ReducedRing, level: &BTreeMap<Vec<u32>, Elem>) -> Vec<u32> {
    level
        .iter()
        .max_by(|(va, ea), (vb, eb)| {
            let da = ea.first().map_or(0, |t| t.deg);
            let db = eb.first().map_or(0, |t| t.deg);
            da.cmp(&db).then_with(|| va.cmp(vb))
        })
        .map(|(v, _)| v.clone())
        .unwrap_or_default()
}
