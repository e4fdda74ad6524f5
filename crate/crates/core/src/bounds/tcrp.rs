use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A known value of `TC(RP^n)` together with where it comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TcRpEntry {
    pub value: u64,
    pub citation: String,
}

/// `TC(RP^n)` for the values that ship with the crate: the circle, powers of
/// two and `n = 3`. Everything else is unknown.
pub fn tc_rp(n: u32) -> Option<u64> {
    shipped(n).map(|e| e.value)
}

fn shipped(n: u32) -> Option<TcRpEntry> {
    let entry = |value: u64, citation: &str| {
        Some(TcRpEntry {
            value,
            citation: citation.to_string(),
        })
    };
    match n {
        1 => entry(2, "RP^1 is the circle, TC(S^1) = 2"),
        3 => entry(4, "TC(RP^3) = 4"),
        n if n.is_power_of_two() => entry(2 * n as u64, "TC(RP^(2^t)) = 2^(t+1)"),
        _ => None,
    }
}

/// Shipped values plus user-supplied ones from configuration.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TcRpTable {
    overrides: BTreeMap<u32, TcRpEntry>,
}

impl TcRpTable {
    /// Adds a value for `TC(RP^n)`. The citation is mandatory, and shipped
    /// values cannot be contradicted.
    pub fn insert(&mut self, n: u32, entry: TcRpEntry) -> Result<()> {
        if entry.citation.trim().is_empty() {
            return Err(Error::Config(format!(
                "TC(RP^{n}) override needs a citation"
            )));
        }
        if n == 0 {
            return Err(Error::Config("TC(RP^n) overrides need n >= 1".into()));
        }
        if let Some(known) = shipped(n) {
            if known.value != entry.value {
                return Err(Error::Config(format!(
                    "TC(RP^{n}) override {} contradicts the shipped value {}",
                    entry.value, known.value
                )));
            }
        }
        // TC(RP^n) always lies in [n+1, 2n+1].
        if entry.value < n as u64 + 1 || entry.value > 2 * n as u64 + 1 {
            return Err(Error::Config(format!(
                "TC(RP^{n}) = {} is outside [n+1, 2n+1]",
                entry.value
            )));
        }
        self.overrides.insert(n, entry);
        Ok(())
    }

    pub fn lookup(&self, n: u32) -> Option<TcRpEntry> {
        shipped(n).or_else(|| self.overrides.get(&n).cloned())
    }
}
