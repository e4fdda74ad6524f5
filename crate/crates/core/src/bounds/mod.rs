//! Lower and upper bounds on LS-category and topological complexity.
//!
//! Every number in a [`BoundInterval`] comes from a named [`Rule`] and is
//! recorded in its provenance, together with the inputs the rule consumed.
//! Rules that would need data the crate does not have (an untabulated
//! `TC(RP^n)`, a zero-divisor search over budget) are listed as skipped with
//! the reason, never guessed.
//!
//! All values use the unreduced convention: `cat(point) = TC(point) = 1`.

mod claims;
mod output;
mod rules;
mod tcrp;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::catalog::{duality_check, Field, Group, ParamBits, SpaceDescriptor};
use crate::f2poly::ReducedRing;
use crate::invariants::{cup_length_with, InvariantResult, SearchOptions, ZeroDivisorAlgebra};
use crate::{Error, Result};

pub use claims::{claim_ids, verify_claims, ClaimReport, ClaimStatus};
pub use output::{render_table, to_csv, to_json, CONVENTION_BANNER, CSV_HEADER};
pub use rules::{Rule, RuleSet};
pub use tcrp::{tc_rp, TcRpEntry, TcRpTable};

/// One rule's contribution to an interval.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub rule: Rule,
    pub citation: String,
    pub inputs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper: Option<u64>,
    /// Why an applicable rule produced nothing.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

/// `lower ≤ value ≤ upper`, with `upper = None` meaning unknown.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundInterval {
    pub lower: u64,
    #[serde(serialize_with = "upper_or_unknown")]
    pub upper: Option<u64>,
    pub provenance: Vec<Provenance>,
}

fn upper_or_unknown<S: Serializer>(u: &Option<u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match u {
        Some(v) => s.serialize_u64(*v),
        None => s.serialize_str("unknown"),
    }
}

impl BoundInterval {
    fn empty() -> Self {
        BoundInterval {
            lower: 0,
            upper: None,
            provenance: Vec::new(),
        }
    }

    /// The exact value, when the interval has collapsed to a point.
    pub fn point(&self) -> Option<u64> {
        self.upper.filter(|&u| u == self.lower)
    }

    pub fn is_consistent(&self) -> bool {
        self.upper.is_none_or(|u| self.lower <= u)
    }

    /// Rules that actually produced a number.
    pub fn contributing_rules(&self) -> Vec<Rule> {
        self.provenance
            .iter()
            .filter(|p| p.skipped.is_none())
            .map(|p| p.rule)
            .collect()
    }

    pub fn upper_string(&self) -> String {
        self.upper
            .map_or_else(|| "unknown".to_string(), |u| u.to_string())
    }
}

impl fmt::Display for BoundInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.upper {
            Some(u) => write!(f, "[{}, {u}]", self.lower),
            None => write!(f, "[{}, ?]", self.lower),
        }
    }
}

/// Builds an interval, ignoring rules that are switched off.
struct Assembler<'a> {
    rules: &'a RuleSet,
    iv: BoundInterval,
}

impl<'a> Assembler<'a> {
    fn new(rules: &'a RuleSet) -> Self {
        Assembler {
            rules,
            iv: BoundInterval::empty(),
        }
    }

    fn push(&mut self, rule: Rule, inputs: String, lower: Option<u64>, upper: Option<u64>) {
        self.push_cited(rule, rule.statement().to_string(), inputs, lower, upper)
    }

    fn push_cited(
        &mut self,
        rule: Rule,
        citation: String,
        inputs: String,
        lower: Option<u64>,
        upper: Option<u64>,
    ) {
        if !self.rules.contains(rule) {
            return;
        }
        if let Some(l) = lower {
            self.iv.lower = self.iv.lower.max(l);
        }
        if let Some(u) = upper {
            self.iv.upper = Some(self.iv.upper.map_or(u, |v| v.min(u)));
        }
        self.iv.provenance.push(Provenance {
            rule,
            citation,
            inputs,
            lower,
            upper,
            skipped: None,
        });
    }

    fn lower(&mut self, rule: Rule, inputs: String, v: u64) {
        self.push(rule, inputs, Some(v), None)
    }

    fn upper(&mut self, rule: Rule, inputs: String, v: u64) {
        self.push(rule, inputs, None, Some(v))
    }

    fn skip(&mut self, rule: Rule, inputs: String, reason: String) {
        if !self.rules.contains(rule) {
            return;
        }
        self.iv.provenance.push(Provenance {
            rule,
            citation: rule.statement().to_string(),
            inputs,
            lower: None,
            upper: None,
            skipped: Some(reason),
        });
    }

    fn finish(self) -> BoundInterval {
        self.iv
    }
}

/// Everything that steers a report.
#[derive(Clone, Debug, Default)]
pub struct BoundOptions {
    pub search: SearchOptions,
    /// Also run the all-zero-divisor oracle and use it when it is larger.
    pub exhaustive: bool,
    pub tc_rp: TcRpTable,
    pub rules: RuleSet,
}

/// A value stated for the space that rests on a geometric identification
/// rather than on ring data. Never folded into the intervals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Annotation {
    pub invariant: String,
    pub value: u64,
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivariantBounds {
    pub group: Group,
    pub quotient: String,
    pub quotient_dim: u32,
    pub cl: InvariantResult,
    pub zcl_basic: Option<InvariantResult>,
    pub cat_g: BoundInterval,
    pub tc_g: BoundInterval,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub descriptor: String,
    pub space: SpaceDescriptor,
    pub dim: u32,
    pub cl: InvariantResult,
    pub zcl_basic: Option<InvariantResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zcl_exhaustive: Option<InvariantResult>,
    pub cat: BoundInterval,
    pub tc: BoundInterval,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equivariant: Option<EquivariantBounds>,
    pub annotations: Vec<Annotation>,
    pub notes: Vec<String>,
}

/// Ring-level invariants of one space.
struct Computed {
    ring: ReducedRing,
    cl: InvariantResult,
    zcl_basic: Option<InvariantResult>,
    zcl_exhaustive: Option<InvariantResult>,
    notes: Vec<String>,
}

impl Computed {
    fn new(space: &SpaceDescriptor, opts: &BoundOptions, want_zcl: bool) -> Result<Self> {
        let ring = space.ring()?;
        let mut notes = Vec::new();
        let cl = match cup_length_with(&ring, &opts.search) {
            Ok(r) => r,
            Err(Error::SearchBudget { budget, best }) => {
                notes.push(format!(
                    "cup-length search stopped after {budget} products; cl >= {} is a lower bound",
                    best.value
                ));
                *best
            }
            Err(e) => return Err(e),
        };
        let mut zcl_basic = None;
        let mut zcl_exhaustive = None;
        if want_zcl {
            match ZeroDivisorAlgebra::with_budget(&ring, opts.search.tensor_budget) {
                Ok(alg) => {
                    zcl_basic = budgeted(alg.zcl_basic(&opts.search), "zcl", &mut notes)?;
                    if opts.exhaustive {
                        zcl_exhaustive = budgeted(
                            alg.zcl_exhaustive(opts.search.kernel_budget),
                            "exhaustive zcl",
                            &mut notes,
                        )?;
                    }
                }
                Err(e) if e.is_budget() => notes.push(format!("zcl not computed: {e}")),
                Err(e) => return Err(e),
            }
        }
        Ok(Computed {
            ring,
            cl,
            zcl_basic,
            zcl_exhaustive,
            notes,
        })
    }

    fn dim(&self) -> u32 {
        self.ring.formal_dimension()
    }

    /// The largest zero-divisor cup-length available and its notion.
    fn best_zcl(&self) -> Option<&InvariantResult> {
        match (&self.zcl_basic, &self.zcl_exhaustive) {
            (Some(b), Some(e)) if e.value > b.value => Some(e),
            (Some(b), _) => Some(b),
            (None, e) => e.as_ref(),
        }
    }
}

/// Turns budget failures into a note, keeping any partial lower bound.
fn budgeted(
    r: Result<InvariantResult>,
    what: &str,
    notes: &mut Vec<String>,
) -> Result<Option<InvariantResult>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::SearchBudget { budget, best }) => {
            notes.push(format!(
                "{what} search stopped after {budget} products; {what} >= {} is a lower bound",
                best.value
            ));
            Ok(Some(*best))
        }
        Err(e) if e.is_budget() => {
            notes.push(format!("{what} not computed: {e}"));
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

fn two_pow_plus_one(n: u32) -> bool {
    n >= 3 && (n - 1).is_power_of_two()
}

fn cat_interval(
    space: &SpaceDescriptor,
    c: &Computed,
    opts: &BoundOptions,
) -> Result<BoundInterval> {
    use SpaceDescriptor::*;
    let mut a = Assembler::new(&opts.rules);
    let dim = c.dim() as u64;
    a.lower(
        Rule::R1,
        format!("cl = {}", c.cl.value),
        c.cl.value as u64 + 1,
    );
    a.upper(Rule::R2, format!("dim = {dim}"), dim + 1);
    if c.ring.presentation().simply_connected {
        a.upper(
            Rule::R3,
            format!("dim = {dim}, simply connected"),
            dim / 2 + 1,
        );
    }
    match space {
        ProjectiveProductSpace { ns } => {
            let (n1, k) = (ns[0] as u64, ns.len() as u64);
            a.upper(Rule::R10, format!("n_1 = {n1}, k = {k}"), n1 + k);
        }
        GppsComplexSpheres { r, s, ns } => {
            let (n1, k) = (ns[0] as u64, ns.len() as u64);
            let (r, s) = (*r as u64, *s as u64);
            a.upper(
                Rule::G1,
                format!("r = {r}, s = {s}, n_1 = {n1}, k = {k}"),
                n1 + k + 2 * (s + r) - 2,
            );
        }
        GppsTensor { r, s, factor } => {
            if opts.rules.contains(Rule::G2) {
                let base = cat_bounds(factor, opts)?;
                let inputs = format!("r = {r}, s = {s}, cat({factor}) in {base}");
                match base.upper {
                    Some(u) => a.upper(Rule::G2, inputs, u + 2 * (*s as u64 + *r as u64) - 2),
                    None => a.skip(
                        Rule::G2,
                        inputs,
                        "cat(N/tau) has no known upper bound".into(),
                    ),
                }
            }
        }
        GppsReflection {
            field,
            r,
            s,
            spheres,
            ..
        } => {
            let (r, s, k) = (*r as u64, *s as u64, spheres.len() as u64);
            let v = match field {
                Field::Real => r + s + k,
                Field::Complex => 2 * (s + r) + k - 1,
            };
            a.upper(Rule::G3, format!("{field}, r = {r}, s = {s}, k = {k}"), v);
        }
        _ => {}
    }
    Ok(a.finish())
}

fn tc_interval(
    space: &SpaceDescriptor,
    c: &Computed,
    cat: &BoundInterval,
    opts: &BoundOptions,
) -> BoundInterval {
    use SpaceDescriptor::*;
    let mut a = Assembler::new(&opts.rules);
    match c.best_zcl() {
        Some(z) => a.lower(
            Rule::R4,
            format!("{} = {}, witness {}", z.notion, z.value, z.witness),
            z.value as u64 + 1,
        ),
        None => a.skip(
            Rule::R4,
            String::new(),
            "zero-divisor cup-length unavailable within budget".into(),
        ),
    }
    a.push(
        Rule::R5,
        format!("cat in {cat}"),
        Some(cat.lower),
        cat.upper.map(|u| 2 * u - 1),
    );
    match *space {
        MilnorReal { r, s } => {
            if r % 2 == 1 && s % 2 == 1 {
                a.upper(
                    Rule::R6,
                    format!("r = {r}, s = {s}"),
                    2 * (s as u64 + r as u64 - 1),
                );
            }
            let inputs = format!("r = {r}, s = {s}");
            if s == 0 {
                a.skip(Rule::R7, inputs, "needs s >= 1".into());
            } else {
                match (opts.tc_rp.lookup(r), opts.tc_rp.lookup(s)) {
                    (Some(tr), Some(ts)) => a.push_cited(
                        Rule::R7,
                        format!("{}; {}; {}", Rule::R7.statement(), tr.citation, ts.citation),
                        format!("TC(RP^{r}) = {}, TC(RP^{s}) = {}", tr.value, ts.value),
                        None,
                        Some(tr.value + ts.value - 1),
                    ),
                    (tr, _) => {
                        let missing = if tr.is_none() { r } else { s };
                        a.skip(
                            Rule::R7,
                            inputs,
                            format!("TC(RP^{missing}) is not tabulated; it can be supplied in the configuration"),
                        )
                    }
                }
            }
            if s == 3 && r >= 4 && r.is_power_of_two() {
                let v = 2 * r as u64 + 3;
                a.push(Rule::R8, format!("r = {r}"), Some(v), Some(v));
            }
        }
        Rp { n } => match opts.tc_rp.lookup(n) {
            Some(e) => a.push_cited(
                Rule::R9,
                e.citation,
                format!("n = {n}"),
                Some(e.value),
                Some(e.value),
            ),
            None => a.skip(
                Rule::R9,
                format!("n = {n}"),
                format!("TC(RP^{n}) is not tabulated"),
            ),
        },
        GppsReflection {
            r, s, ref spheres, ..
        } => {
            let applies = !spheres.is_empty()
                && spheres.iter().all(|&(n, p)| p > 1 && n >= 2)
                && two_pow_plus_one(r)
                && two_pow_plus_one(s);
            if applies {
                let k = spheres.len() as u64;
                a.lower(
                    Rule::G4,
                    format!("r = {r}, s = {s}, k = {k}"),
                    s as u64 + r as u64 + k - 1,
                );
            }
        }
        _ => {}
    }
    a.finish()
}

/// cat interval of a catalog space.
pub fn cat_bounds(space: &SpaceDescriptor, opts: &BoundOptions) -> Result<BoundInterval> {
    let c = Computed::new(space, opts, false)?;
    cat_interval(space, &c, opts)
}

/// TC interval of a catalog space.
pub fn tc_bounds(space: &SpaceDescriptor, opts: &BoundOptions) -> Result<BoundInterval> {
    let c = Computed::new(space, opts, true)?;
    let cat = cat_interval(space, &c, opts)?;
    Ok(tc_interval(space, &c, &cat, opts))
}

/// Bounds on `cat_G` and `TC_G` for a free `G`-action on a Milnor manifold,
/// read off the quotient ring with the given parameter bits.
pub fn eq_bounds(
    space: &SpaceDescriptor,
    group: Group,
    params: ParamBits,
    opts: &BoundOptions,
) -> Result<EquivariantBounds> {
    let quotient = space.quotient(group, params)?;
    let c = Computed::new(&quotient, opts, true)?;
    let mut notes = c.notes.clone();
    notes.extend(duality_note(&quotient)?);
    let dim = c.dim() as u64;

    let mut cat = Assembler::new(&opts.rules);
    cat.lower(
        Rule::E1,
        format!("cl({quotient}) = {}, witness {}", c.cl.value, c.cl.witness),
        c.cl.value as u64 + 1,
    );
    cat.upper(Rule::E2, format!("dim({quotient}) = {dim}"), dim + 1);

    let mut tc = Assembler::new(&opts.rules);
    match &c.zcl_basic {
        Some(z) => tc.lower(
            Rule::E3,
            format!("zcl({quotient}) = {}, witness {}", z.value, z.witness),
            z.value as u64 + 1,
        ),
        None => tc.skip(
            Rule::E3,
            String::new(),
            "zero-divisor cup-length of the quotient unavailable within budget".into(),
        ),
    }
    let (r, s) = match *space {
        SpaceDescriptor::MilnorReal { r, s } | SpaceDescriptor::MilnorComplex { r, s } => (r, s),
        _ => unreachable!("quotient() only accepts Milnor manifolds"),
    };
    if two_pow_plus_one(r) && two_pow_plus_one(s) {
        tc.lower(Rule::E4, format!("r = {r}, s = {s}"), (s + r - 2) as u64);
    }
    if group == Group::S1 {
        notes.push(format!(
            "cat_G lower bound is cl + 1 = {}; the top-class witness x^((s-1)/2) y^((r-1)/2) alone has (s+r)/2 - 1 = {} factors",
            c.cl.value + 1,
            (s + r) / 2 - 1
        ));
    }
    Ok(EquivariantBounds {
        group,
        quotient: quotient.to_string(),
        quotient_dim: c.dim(),
        cl: c.cl,
        zcl_basic: c.zcl_basic,
        cat_g: cat.finish(),
        tc_g: tc.finish(),
        notes,
    })
}

/// A warning when a parametrized ring does not cut out a Poincaré duality
/// algebra of its stated dimension.
fn duality_note(space: &SpaceDescriptor) -> Result<Option<String>> {
    if space.params().is_none() {
        return Ok(None);
    }
    let check = duality_check(&space.presentation()?)?;
    Ok((!check.holds()).then(|| {
        format!(
            "the relations of {space} do not define a Poincaré duality algebra of the stated dimension \
             (vanishes above: {}, symmetric: {}); bounds are computed from the ring as presented",
            check.vanishes_above, check.poincare_symmetric
        )
    }))
}

fn annotations(space: &SpaceDescriptor) -> Vec<Annotation> {
    use SpaceDescriptor::*;
    let tc = |value: u64, source: &str| Annotation {
        invariant: "TC".into(),
        value,
        source: source.into(),
    };
    match *space {
        MilnorReal { r: 1, s: 1 } => vec![tc(2, "RH_{1,1} is the circle")],
        MilnorReal { r: 2, s: 1 } => vec![tc(
            5,
            "RH_{2,1} is the Klein bottle; its TC is an external result, not derived from ring data",
        )],
        MilnorComplex { r: 1, s: 1 } => vec![tc(3, "CH_{1,1} is the 2-sphere")],
        MilnorComplex { r: 2, s: 1 } => vec![tc(
            5,
            "CH_{2,1} is CP^2 # CP^2, whose TC is at least TC(CP^2) = 5 by an external result",
        )],
        _ => Vec::new(),
    }
}

/// The full report for a catalog space, optionally with equivariant bounds.
pub fn report(
    space: &SpaceDescriptor,
    group: Option<(Group, ParamBits)>,
    opts: &BoundOptions,
) -> Result<BoundReport> {
    let c = Computed::new(space, opts, true)?;
    let cat = cat_interval(space, &c, opts)?;
    let tc = tc_interval(space, &c, &cat, opts);
    let mut notes = c.notes.clone();
    notes.extend(duality_note(space)?);
    let equivariant = match group {
        Some((g, params)) => Some(eq_bounds(space, g, params, opts)?),
        None => None,
    };
    Ok(BoundReport {
        descriptor: space.to_string(),
        space: space.clone(),
        dim: c.dim(),
        cl: c.cl,
        zcl_basic: c.zcl_basic,
        zcl_exhaustive: c.zcl_exhaustive,
        cat,
        tc,
        equivariant,
        annotations: annotations(space),
        notes,
    })
}

/// [`report`] restricted to the projective-product families.
pub fn gpps_bounds(space: &SpaceDescriptor, opts: &BoundOptions) -> Result<BoundReport> {
    use SpaceDescriptor::*;
    match space {
        ProjectiveProductSpace { .. }
        | GppsTensor { .. }
        | GppsComplexSpheres { .. }
        | GppsReflection { .. } => report(space, None, opts),
        _ => Err(Error::param(
            "gpps",
            format!("{} is not a projective product family", space.family_name()),
        )),
    }
}
