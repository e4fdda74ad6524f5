//! Run configuration, read from a TOML file.
//!
//! ```toml
//! format = "table"            # json | csv | table
//!
//! [search]
//! tensor_budget = 200000      # max total dimension of a tensor square
//! node_budget = 2000000       # max product evaluations per search
//! kernel_budget = 24          # max kernel dimension per degree (exhaustive zcl)
//! parallel = true
//!
//! [params]                    # default parameter bits for quotients
//! z2 = "0010000"
//! s1 = "01"
//!
//! [[tc_rp]]                   # extra TC(RP^n) values; citation is required
//! n = 5
//! value = 8
//! citation = "where the value comes from"
//! ```
//!
//! The tensor budget can also be set with the `MILNOR_TENSOR_BUDGET`
//! environment variable. Precedence, lowest first: built-in default,
//! environment, config file, command-line flag.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::Deserialize;

use crate::bounds::{BoundOptions, TcRpEntry, TcRpTable};
use crate::catalog::{Group, ParamBits};
use crate::invariants::SearchOptions;
use crate::{Error, Result};

pub const TENSOR_BUDGET_ENV: &str = "MILNOR_TENSOR_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Table,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "table" => Ok(OutputFormat::Table),
            _ => Err(Error::Config(format!(
                "unknown format `{s}`, expected json, csv or table"
            ))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Table => "table",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchSection {
    pub tensor_budget: Option<u64>,
    pub node_budget: Option<u64>,
    pub kernel_budget: Option<u64>,
    pub parallel: Option<bool>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamDefaults {
    pub z2: Option<ParamBits>,
    pub s1: Option<ParamBits>,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TcRpOverride {
    pub n: u32,
    pub value: u64,
    pub citation: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Config {
    pub format: Option<OutputFormat>,
    pub search: SearchSection,
    pub params: ParamDefaults,
    pub tc_rp: Vec<TcRpOverride>,
}

impl Config {
    pub fn from_toml_str(s: &str) -> Result<Self> {
        toml::from_str(s).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }

    /// Search budgets after applying the environment and then this file.
    pub fn search_options(&self) -> Result<SearchOptions> {
        let mut opts = SearchOptions::default();
        if let Ok(v) = std::env::var(TENSOR_BUDGET_ENV) {
            opts.tensor_budget = v.trim().parse().map_err(|_| {
                Error::Config(format!(
                    "{TENSOR_BUDGET_ENV} must be a positive integer, got `{v}`"
                ))
            })?;
        }
        let s = &self.search;
        if let Some(v) = s.tensor_budget {
            opts.tensor_budget = v as u128;
        }
        if let Some(v) = s.node_budget {
            opts.node_budget = v as usize;
        }
        if let Some(v) = s.kernel_budget {
            opts.kernel_budget = v as usize;
        }
        if let Some(v) = s.parallel {
            opts.parallel = v;
        }
        Ok(opts)
    }

    pub fn tc_rp_table(&self) -> Result<TcRpTable> {
        let mut table = TcRpTable::default();
        for o in &self.tc_rp {
            table.insert(
                o.n,
                TcRpEntry {
                    value: o.value,
                    citation: o.citation.clone(),
                },
            )?;
        }
        Ok(table)
    }

    pub fn bound_options(&self) -> Result<BoundOptions> {
        Ok(BoundOptions {
            search: self.search_options()?,
            tc_rp: self.tc_rp_table()?,
            ..BoundOptions::default()
        })
    }

    /// Parameter bits to use for `group` when none are given explicitly.
    pub fn default_params(&self, group: Group) -> ParamBits {
        let p = match group {
            Group::Z2 => &self.params.z2,
            Group::S1 => &self.params.s1,
        };
        p.clone().unwrap_or_default()
    }
}
