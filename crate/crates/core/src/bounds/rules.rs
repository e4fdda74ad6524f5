use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

/// A bound rule. Each one turns computed invariants or family parameters
/// into a lower or upper bound on one of cat, TC, cat_G or TC_G.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Rule {
    /// `cl(X) + 1 ≤ cat(X)`.
    R1,
    /// `cat(X) ≤ dim(X) + 1`.
    R2,
    /// Simply connected: `cat(X) ≤ ⌊dim(X)/2⌋ + 1`.
    R3,
    /// `zcl(X) + 1 ≤ TC(X)`.
    R4,
    /// `cat(X) ≤ TC(X) ≤ cat(X×X) ≤ 2·cat(X) − 1`.
    R5,
    /// Free circle action on `RH_{r,s}` (r, s odd): `TC ≤ 2(s+r−1)`.
    R6,
    /// `TC(RH_{r,s}) ≤ TC(RP^r) + TC(RP^s) − 1`.
    R7,
    /// `TC(RH_{2^t,3}) = 2^{t+1} + 3`.
    R8,
    /// Tabulated values of `TC(RP^n)`.
    R9,
    /// `cat(P(n_1,…,n_k)) ≤ n_1 + k` for `2 ≤ n_1 ≤ … ≤ n_k`.
    R10,
    /// Free action: `cl(X/G) + 1 ≤ cat_G(X)`.
    E1,
    /// Free action: `cat_G(X) = cat(X/G) ≤ dim(X/G) + 1`.
    E2,
    /// `zcl(X/G) + 1 ≤ TC_G(X)`.
    E3,
    /// `s + r − 2 ≤ TC_G(FH_{r,s})` for `s = 2^{t_1}+1`, `r = 2^{t_2}+1`.
    E4,
    /// `cat(X(CH_{r,s}, n_1,…,n_k)) ≤ n_1 + k + 2(s+r) − 2`.
    G1,
    /// `cat(X(CH_{r,s}, N)) ≤ cat(N/τ) + 2(s+r) − 2`.
    G2,
    /// Sphere reflections: `cat ≤ r+s+k` (real) or `2(s+r)+k−1` (complex).
    G3,
    /// Sphere reflections with `p_j > 1`, `n_j ≥ 2`, `s = 2^{t_1}+1`,
    /// `r = 2^{t_2}+1`: `s + r + k − 1 ≤ TC`.
    G4,
}

impl Rule {
    pub const ALL: [Rule; 18] = [
        Rule::R1,
        Rule::R2,
        Rule::R3,
        Rule::R4,
        Rule::R5,
        Rule::R6,
        Rule::R7,
        Rule::R8,
        Rule::R9,
        Rule::R10,
        Rule::E1,
        Rule::E2,
        Rule::E3,
        Rule::E4,
        Rule::G1,
        Rule::G2,
        Rule::G3,
        Rule::G4,
    ];

    /// The inequality the rule applies, in the unreduced convention.
    pub fn statement(self) -> &'static str {
        match self {
            Rule::R1 => "cl(X) + 1 <= cat(X)",
            Rule::R2 => "cat(X) <= dim(X) + 1",
            Rule::R3 => "X simply connected: cat(X) <= floor(dim(X)/2) + 1",
            Rule::R4 => "zcl(X) + 1 <= TC(X)",
            Rule::R5 => "cat(X) <= TC(X) <= cat(X x X) <= 2 cat(X) - 1",
            Rule::R6 => "r, s odd: free circle action gives TC(RH_{r,s}) <= 2(s+r-1)",
            Rule::R7 => "TC(RH_{r,s}) <= TC(RP^r) + TC(RP^s) - 1",
            Rule::R8 => "TC(RH_{2^t,3}) = 2^(t+1) + 3",
            Rule::R9 => "tabulated TC(RP^n)",
            Rule::R10 => "cat(P(n_1,...,n_k)) <= n_1 + k",
            Rule::E1 => "free action: cl(X/G) + 1 <= cat_G(X)",
            Rule::E2 => "free action: cat_G(X) = cat(X/G) <= dim(X/G) + 1",
            Rule::E3 => "zcl(X/G) + 1 <= TC_G(X)",
            Rule::E4 => "s = 2^t1 + 1, r = 2^t2 + 1: s + r - 2 <= TC_G(FH_{r,s})",
            Rule::G1 => "cat(X(CH_{r,s}, n_1..n_k)) <= n_1 + k + 2(s+r) - 2",
            Rule::G2 => "cat(X(CH_{r,s}, N)) <= cat(N/tau) + 2(s+r) - 2",
            Rule::G3 => "cat(X((n_j,p_j), FH_{r,s})) <= r+s+k (real), 2(s+r)+k-1 (complex)",
            Rule::G4 => {
                "p_j > 1, s = 2^t1 + 1, r = 2^t2 + 1: s + r + k - 1 <= TC(X((n_j,p_j), FH_{r,s}))"
            }
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The rules a report may use. All of them by default; tests switch single
/// rules off to check that none is dead weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleSet(BTreeSet<Rule>);

impl RuleSet {
    pub fn all() -> Self {
        RuleSet(Rule::ALL.into_iter().collect())
    }

    pub fn without(mut self, rule: Rule) -> Self {
        self.0.remove(&rule);
        self
    }

    pub fn contains(&self, rule: Rule) -> bool {
        self.0.contains(&rule)
    }
}

impl Default for RuleSet {
    fn default() -> Self {
        RuleSet::all()
    }
}
