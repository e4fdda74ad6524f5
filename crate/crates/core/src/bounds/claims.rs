//! Machine-checked regression suite over the stated results, run at desk
//! scale.

use rayon::prelude::*;
use serde::Serialize;

use super::{cat_bounds, eq_bounds, report, tc_bounds, tc_rp, BoundOptions};
use crate::catalog::{duality_check, Group, ParamBits, ParamLayout, SpaceDescriptor};
use crate::f2poly::{Polynomial, ReducedRing};
use crate::invariants::{binom_parity, cup_length_with, multiplicities, ZeroDivisorAlgebra};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub id: String,
    pub statement: String,
    pub status: ClaimStatus,
    pub details: String,
}

type Check = fn(&BoundOptions) -> Result<(bool, String)>;

struct Claim {
    id: &'static str,
    statement: &'static str,
    check: Check,
}

const CLAIMS: &[Claim] = &[
    Claim {
        id: "binom-parity-mersenne",
        statement: "C(2^t - 1, l) is odd for all l, t <= 10",
        check: binom_mersenne,
    },
    Claim {
        id: "cat-milnor-exact",
        statement: "cat(RH_{r,s}) = cat(CH_{r,s}) = r + s for 1 <= s <= r <= 8",
        check: cat_milnor_exact,
    },
    Claim {
        id: "cl-milnor-top-class",
        statement: "a^s b^(r-1) and c^s d^(r-1) are nonzero for 1 <= s <= r <= 8",
        check: milnor_top_class,
    },
    Claim {
        id: "circle-tc",
        statement: "TC(RH_{1,1}) = 2",
        check: circle_tc,
    },
    Claim {
        id: "eq-s1-cat-5-3",
        statement: "(s+r)/2 <= cat_S1(RH_{5,3}) <= s+r-1 for every parameter choice",
        check: eq_s1_cat,
    },
    Claim {
        id: "eq-s1-tc-5-3",
        statement: "wbar xbar^(s-2) ybar^(r-2) != 0 in the circle quotient of RH_{5,3}",
        check: eq_s1_tc,
    },
    Claim {
        id: "eq-z2-cat-5-3",
        statement: "(s+r)/2+1 <= cat_Z2(RH_{5,3}) <= s+r for every parameter choice",
        check: eq_z2_cat,
    },
    Claim {
        id: "eq-z2-complex-cat-5-3",
        statement: "(s+r)/2+2 <= cat_Z2(CH_{5,3}) <= 2(s+r)-1 for every parameter choice",
        check: eq_z2_complex_cat,
    },
    Claim {
        id: "eq-z2-tc-5-3",
        statement: "zbar xbar^(s-2) ybar^(r-2) != 0, so s+r-2 <= TC_Z2(RH_{5,3})",
        check: eq_z2_tc,
    },
    Claim {
        id: "gpps-cs-cl",
        statement: "cl(X(CH_{5,3}, 2, 3)) = r+s+n_1+k-2 = 10 and cat >= 11",
        check: gpps_cs_cl,
    },
    Claim {
        id: "gpps-refl-complex-cl",
        statement: "cl(X((3,2)(4,2), CH_{5,3})) = cl(CH_{5,3}/sigma) + 2",
        check: gpps_refl_complex_cl,
    },
    Claim {
        id: "gpps-refl-real-cat",
        statement: "(s+r)/2+k+1 <= cat(X((3,2), RH_{5,3})) <= r+s+k",
        check: gpps_refl_real_cat,
    },
    Claim {
        id: "gpps-refl-real-cl",
        statement: "cl(X((3,2), RH_{5,3})) = cl(RH_{5,3}/sigma) + 1",
        check: gpps_refl_real_cl,
    },
    Claim {
        id: "klein-annotation",
        statement: "TC(RH_{2,1}) = 5 is carried as a cited value, outside the computed interval",
        check: klein_annotation,
    },
    Claim {
        id: "klein-presentation",
        statement: "H*(RH_{2,1}) = F2[a,b]/(a^2, b^2 + ab)",
        check: klein_presentation,
    },
    Claim {
        id: "klein-zcl",
        statement: "zcl(RH_{2,1}) over basic zero divisors is 3",
        check: klein_zcl,
    },
    Claim {
        id: "pps-zcl",
        statement: "zcl(P(2,3)) = zcl(RP^2) + k - 1",
        check: pps_zcl,
    },
    Claim {
        id: "quotient-top-class-5-3",
        statement: "z x y^2, z^2 x y^2 and x y^2 are nonzero in the quotients of FH_{5,3} for every parameter choice giving a Poincaré duality ring",
        check: quotient_top_class,
    },
    Claim {
        id: "sharpness-4-3",
        statement: "abar^(2s-1) bbar^(2r-1) = 0 in RH_{4,3}",
        check: |_| sharpness(4, 3),
    },
    Claim {
        id: "sharpness-8-3",
        statement: "abar^(2s-1) bbar^(2r-1) = 0 in RH_{8,3}",
        check: |_| sharpness(8, 3),
    },
    Claim {
        id: "sharpness-8-5",
        statement: "abar^(2s-1) bbar^(2r-1) = 0 in RH_{8,5}",
        check: |_| sharpness(8, 5),
    },
    Claim {
        id: "sphere-tc",
        statement: "H*(CH_{1,1}) has Hilbert function [1,0,1] and TC(CH_{1,1}) = 3 is carried as a cited value",
        check: sphere_tc,
    },
    Claim {
        id: "tc-corollary-t2",
        statement: "TC(RH_{4,3}) = 2^3 + 3 = 11",
        check: |o| corollary(2, o),
    },
    Claim {
        id: "tc-corollary-t3",
        statement: "TC(RH_{8,3}) = 2^4 + 3 = 19",
        check: |o| corollary(3, o),
    },
    Claim {
        id: "tc-milnor-general",
        statement: "s+r <= TC(FH_{r,s}) <= 2(s+r)-1, and TC(RH_{r,s}) <= 2(s+r-1) for r, s odd, 1 <= s <= r <= 6",
        check: tc_milnor_general,
    },
    Claim {
        id: "tc-rp-table",
        statement: "TC(RP^(2^t)) = 2^(t+1) and TC(RP^3) = 4",
        check: tc_rp_table,
    },
    Claim {
        id: "zcl-lower-4-3",
        statement: "abar^(2s-3) bbar^(2r-1) != 0 in RH_{4,3}, so TC >= 2(s+r-1)-1",
        check: |o| zcl_lower(4, 3, o),
    },
    Claim {
        id: "zcl-lower-8-3",
        statement: "abar^(2s-3) bbar^(2r-1) != 0 in RH_{8,3}, so TC >= 2(s+r-1)-1",
        check: |o| zcl_lower(8, 3, o),
    },
    Claim {
        id: "zcl-lower-8-5",
        statement: "abar^(2s-3) bbar^(2r-1) != 0 in RH_{8,5}, so TC >= 2(s+r-1)-1",
        check: |o| zcl_lower(8, 5, o),
    },
];

/// Ids of every claim, sorted.
pub fn claim_ids() -> Vec<&'static str> {
    let mut ids: Vec<_> = CLAIMS.iter().map(|c| c.id).collect();
    ids.sort_unstable();
    ids
}

/// Runs the claims whose id matches `filter` (a glob, all by default) in
/// parallel. Failures are reported, never fatal; results come back sorted by
/// id.
pub fn verify_claims(filter: Option<&str>, opts: &BoundOptions) -> Result<Vec<ClaimReport>> {
    let pattern = filter
        .map(glob::Pattern::new)
        .transpose()
        .map_err(|e| Error::Config(format!("bad claim filter: {e}")))?;
    let mut out: Vec<ClaimReport> = CLAIMS
        .par_iter()
        .filter(|c| pattern.as_ref().is_none_or(|p| p.matches(c.id)))
        .map(|c| {
            let (status, details) = match (c.check)(opts) {
                Ok((true, d)) => (ClaimStatus::Pass, d),
                Ok((false, d)) => (ClaimStatus::Fail, d),
                Err(e) if e.is_budget() => (ClaimStatus::Skipped, e.to_string()),
                Err(e) => (ClaimStatus::Fail, format!("error: {e}")),
            };
            ClaimReport {
                id: c.id.to_string(),
                statement: c.statement.to_string(),
                status,
                details,
            }
        })
        .collect();
    out.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(out)
}

fn space(s: &str) -> SpaceDescriptor {
    s.parse().expect("claim descriptors are well formed")
}

fn ring(s: &str) -> Result<ReducedRing> {
    space(s).ring()
}

/// Product of generator powers in `ring`.
fn gen_product(ring: &ReducedRing, factors: &[(&str, u32)]) -> Result<Polynomial> {
    let mut acc = Polynomial::one(ring.ngens());
    for &(name, power) in factors {
        let g = ring
            .generator(name)
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))?;
        for _ in 0..power {
            acc = ring.multiply(&acc, &g)?;
        }
    }
    Ok(acc)
}

fn binom_mersenne(_: &BoundOptions) -> Result<(bool, String)> {
    let ok = (1..=10u32).all(|t| {
        let n = (1u64 << t) - 1;
        (0..=n).all(|l| binom_parity(n, l) == 1)
    });
    Ok((ok, "checked t = 1..10".into()))
}

fn cat_milnor_exact(opts: &BoundOptions) -> Result<(bool, String)> {
    for r in 1..=8 {
        for s in 1..=r {
            for fam in ["milnor-real", "milnor-complex"] {
                let iv = cat_bounds(&space(&format!("{fam}:{r},{s}")), opts)?;
                if iv.point() != Some((r + s) as u64) {
                    return Ok((false, format!("{fam}:{r},{s} gives cat in {iv}")));
                }
            }
        }
    }
    Ok((true, "72 spaces, each a single point".into()))
}

fn milnor_top_class(_: &BoundOptions) -> Result<(bool, String)> {
    for r in 1..=8u32 {
        for s in 1..=r {
            for (fam, g, h) in [("milnor-real", "a", "b"), ("milnor-complex", "c", "d")] {
                let ring = ring(&format!("{fam}:{r},{s}"))?;
                if gen_product(&ring, &[(g, s), (h, r - 1)])?.is_zero() {
                    return Ok((
                        false,
                        format!("{g}^{s} {h}^{} vanishes in {fam}:{r},{s}", r - 1),
                    ));
                }
            }
        }
    }
    Ok((true, "72 rings".into()))
}

fn circle_tc(opts: &BoundOptions) -> Result<(bool, String)> {
    let iv = tc_bounds(&space("milnor-real:1,1"), opts)?;
    Ok((iv.point() == Some(2), format!("TC in {iv}")))
}

fn sphere_tc(opts: &BoundOptions) -> Result<(bool, String)> {
    let r = report(&space("milnor-complex:1,1"), None, opts)?;
    let cited = r
        .annotations
        .iter()
        .any(|a| a.invariant == "TC" && a.value == 3);
    let hilbert = ring("milnor-complex:1,1")?.hilbert().to_vec();
    let contains = r.tc.lower <= 3 && r.tc.upper.is_none_or(|u| u >= 3);
    Ok((
        cited && contains && hilbert == [1, 0, 1],
        format!("Hilbert {hilbert:?}, computed TC in {}, cited 3", r.tc),
    ))
}

fn sharpness(r: u32, s: u32) -> Result<(bool, String)> {
    let alg = ZeroDivisorAlgebra::new(&ring(&format!("milnor-real:{r},{s}"))?)?;
    let p = alg.product(&multiplicities([("abar", 2 * s - 1), ("bbar", 2 * r - 1)]))?;
    Ok((
        p.is_zero(),
        format!("abar^{} bbar^{} = {}", 2 * s - 1, 2 * r - 1, alg.render(&p)),
    ))
}

fn zcl_lower(r: u32, s: u32, opts: &BoundOptions) -> Result<(bool, String)> {
    let desc = space(&format!("milnor-real:{r},{s}"));
    let alg = ZeroDivisorAlgebra::with_budget(&desc.ring()?, opts.search.tensor_budget)?;
    let p = alg.product(&multiplicities([("abar", 2 * s - 3), ("bbar", 2 * r - 1)]))?;
    let iv = tc_bounds(&desc, opts)?;
    let target = 2 * (s + r - 1) as u64 - 1;
    Ok((
        !p.is_zero() && iv.lower >= target,
        format!(
            "product has {} terms; TC in {iv}, target lower {target}",
            p.len()
        ),
    ))
}

fn corollary(t: u32, opts: &BoundOptions) -> Result<(bool, String)> {
    let iv = tc_bounds(&space(&format!("milnor-real:{},3", 1u32 << t)), opts)?;
    let v = (1u64 << (t + 1)) + 3;
    Ok((iv.point() == Some(v), format!("TC in {iv}, expected {v}")))
}

fn tc_milnor_general(opts: &BoundOptions) -> Result<(bool, String)> {
    for r in 1..=6u32 {
        for s in 1..=r {
            for fam in ["milnor-real", "milnor-complex"] {
                let iv = tc_bounds(&space(&format!("{fam}:{r},{s}")), opts)?;
                let (lo, hi) = ((s + r) as u64, 2 * (s + r) as u64 - 1);
                let mut ok = iv.lower >= lo && iv.upper.is_some_and(|u| u <= hi);
                if fam == "milnor-real" && r % 2 == 1 && s % 2 == 1 {
                    ok &= iv.upper.is_some_and(|u| u <= 2 * (s + r - 1) as u64);
                }
                if !ok {
                    return Ok((false, format!("{fam}:{r},{s} gives TC in {iv}")));
                }
            }
        }
    }
    Ok((true, "42 spaces".into()))
}

fn klein_presentation(_: &BoundOptions) -> Result<(bool, String)> {
    let p = space("milnor-real:2,1").presentation()?;
    let rels: Vec<Vec<Vec<u32>>> = p
        .relations
        .iter()
        .map(|r| r.monomials().map(|m| m.0.clone()).collect())
        .collect();
    let a2 = vec![vec![2, 0]];
    let b2ab = vec![vec![0, 2], vec![1, 1]];
    let ok = p.names() == ["a", "b"]
        && rels.len() == 2
        && rels.iter().any(|r| sorted(r) == sorted(&a2))
        && rels.iter().any(|r| sorted(r) == sorted(&b2ab));
    Ok((ok, format!("relations {rels:?}")))
}

fn sorted(v: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut v = v.to_vec();
    v.sort();
    v
}

fn klein_zcl(opts: &BoundOptions) -> Result<(bool, String)> {
    let z = crate::invariants::zcl_basic_with(&ring("milnor-real:2,1")?, &opts.search)?;
    Ok((
        z.value == 3,
        format!("zcl = {}, witness {}", z.value, z.witness),
    ))
}

fn klein_annotation(opts: &BoundOptions) -> Result<(bool, String)> {
    let r = report(&space("milnor-real:2,1"), None, opts)?;
    let cited = r
        .annotations
        .iter()
        .any(|a| a.invariant == "TC" && a.value == 5 && a.source.contains("Klein"));
    Ok((
        cited && r.tc.lower == 4,
        format!("computed TC in {}, cited 5", r.tc),
    ))
}

/// Runs `f` on the quotient ring for every parameter assignment.
fn every_assignment(
    desc: &str,
    layout: ParamLayout,
    mut f: impl FnMut(&SpaceDescriptor) -> Result<Option<String>>,
) -> Result<(bool, String)> {
    let base = space(desc);
    let mut n = 0;
    for bits in layout.assignments() {
        let q = base.with_params(bits)?;
        if let Some(why) = f(&q)? {
            return Ok((false, format!("{q}: {why}")));
        }
        n += 1;
    }
    Ok((true, format!("{n} parameter assignments")))
}

fn eq_cat_all(
    group: Group,
    base: &str,
    lo: u64,
    hi: u64,
    opts: &BoundOptions,
) -> Result<(bool, String)> {
    let space = space(base);
    let layout = space
        .quotient(group, ParamBits::default())?
        .param_layout()
        .expect("quotients have parameters");
    let mut n = 0;
    for bits in layout.assignments() {
        let eq = eq_bounds(&space, group, bits.clone(), opts)?;
        if eq.cat_g.lower < lo || eq.cat_g.upper != Some(hi) {
            return Ok((false, format!("params {bits}: cat_G in {}", eq.cat_g)));
        }
        n += 1;
    }
    Ok((
        true,
        format!("{n} parameter assignments, all within [{lo}, {hi}]"),
    ))
}

fn eq_z2_cat(opts: &BoundOptions) -> Result<(bool, String)> {
    eq_cat_all(Group::Z2, "milnor-real:5,3", 5, 8, opts)
}

fn eq_z2_complex_cat(opts: &BoundOptions) -> Result<(bool, String)> {
    eq_cat_all(Group::Z2, "milnor-complex:5,3", 6, 15, opts)
}

fn eq_s1_cat(opts: &BoundOptions) -> Result<(bool, String)> {
    eq_cat_all(Group::S1, "milnor-real:5,3", 4, 7, opts)
}

fn eq_zd_product(
    quotient: &str,
    factors: [(&str, u32); 3],
    opts: &BoundOptions,
) -> Result<(bool, String)> {
    let desc = space("milnor-real:5,3");
    let q = space(quotient);
    let alg = ZeroDivisorAlgebra::with_budget(&q.ring()?, opts.search.tensor_budget)?;
    let p = alg.product(&multiplicities(factors))?;
    let group = match q {
        SpaceDescriptor::QuotientRealS1 { .. } => Group::S1,
        _ => Group::Z2,
    };
    let eq = eq_bounds(&desc, group, q.params().cloned().unwrap_or_default(), opts)?;
    Ok((
        !p.is_zero() && eq.tc_g.lower >= 6,
        format!("product has {} terms; TC_G in {}", p.len(), eq.tc_g),
    ))
}

fn eq_z2_tc(opts: &BoundOptions) -> Result<(bool, String)> {
    eq_zd_product(
        "quot-real-z2:5,3",
        [("zbar", 1), ("xbar", 1), ("ybar", 3)],
        opts,
    )
}

fn eq_s1_tc(opts: &BoundOptions) -> Result<(bool, String)> {
    eq_zd_product(
        "quot-real-s1:5,3",
        [("wbar", 1), ("xbar", 1), ("ybar", 3)],
        opts,
    )
}

type Factors = &'static [(&'static str, u32)];

fn quotient_top_class(_: &BoundOptions) -> Result<(bool, String)> {
    let cases: [(&str, ParamLayout, Factors); 3] = [
        (
            "quot-real-z2:5,3",
            ParamLayout::z2(3),
            &[("z", 1), ("x", 1), ("y", 2)],
        ),
        (
            "quot-complex-z2:5,3",
            ParamLayout::z2(3),
            &[("z", 2), ("x", 1), ("y", 2)],
        ),
        ("quot-real-s1:5,3", ParamLayout::S1, &[("x", 1), ("y", 2)]),
    ];
    let mut details = Vec::new();
    for (desc, layout, factors) in cases {
        let mut vanishing = 0;
        let (ok, d) = every_assignment(desc, layout, |q| {
            if !gen_product(&q.ring()?, factors)?.is_zero() {
                return Ok(None);
            }
            vanishing += 1;
            // A vanishing top class is only a counterexample if the ring
            // could be the cohomology of a closed manifold.
            let pd = duality_check(&q.presentation()?)?.holds();
            Ok(pd.then(|| "top-class witness vanishes in a Poincaré duality ring".to_string()))
        })?;
        if !ok {
            return Ok((false, d));
        }
        details.push(format!(
            "{desc}: {d}, witness vanishes for {vanishing}, none of them Poincaré duality rings"
        ));
    }
    Ok((true, details.join("; ")))
}

fn pps_zcl(opts: &BoundOptions) -> Result<(bool, String)> {
    let z = |d: &str| crate::invariants::zcl_basic_with(&ring(d)?, &opts.search);
    let (p, rp) = (z("pps:2,3")?, z("rp:2")?);
    Ok((
        p.value == rp.value + 1,
        format!("zcl(P(2,3)) = {}, zcl(RP^2) = {}", p.value, rp.value),
    ))
}

fn cl(desc: &str, opts: &BoundOptions) -> Result<usize> {
    Ok(cup_length_with(&ring(desc)?, &opts.search)?.value)
}

fn gpps_cs_cl(opts: &BoundOptions) -> Result<(bool, String)> {
    let c = cl("gpps-cs:5,3;2,3", opts)?;
    let iv = cat_bounds(&space("gpps-cs:5,3;2,3"), opts)?;
    Ok((c == 10 && iv.lower >= 11, format!("cl = {c}, cat in {iv}")))
}

fn gpps_refl_real_cl(opts: &BoundOptions) -> Result<(bool, String)> {
    let (c, q) = (
        cl("gpps-refl:real,5,3;(3,2)", opts)?,
        cl("quot-real-z2:5,3", opts)?,
    );
    Ok((c == q + 1, format!("cl = {c}, cl(quotient) = {q}")))
}

fn gpps_refl_complex_cl(opts: &BoundOptions) -> Result<(bool, String)> {
    let (c, q) = (
        cl("gpps-refl:complex,5,3;(3,2)(4,2)", opts)?,
        cl("quot-complex-z2:5,3", opts)?,
    );
    Ok((c == q + 2, format!("cl = {c}, cl(quotient) = {q}")))
}

fn gpps_refl_real_cat(opts: &BoundOptions) -> Result<(bool, String)> {
    let iv = cat_bounds(&space("gpps-refl:real,5,3;(3,2)"), opts)?;
    Ok((iv.lower >= 6 && iv.upper == Some(9), format!("cat in {iv}")))
}

fn tc_rp_table(_: &BoundOptions) -> Result<(bool, String)> {
    let ok = (0..10).all(|t| tc_rp(1 << t) == Some(2 << t)) && tc_rp(3) == Some(4);
    Ok((ok, "t = 0..9 and n = 3".into()))
}
