use std::fmt::Write as _;

use super::{BoundInterval, BoundReport};
use crate::Result;

pub const CONVENTION_BANNER: &str = "# unreduced convention: cat(point) = TC(point) = 1";

pub const CSV_HEADER: [&str; 9] = [
    "family", "params", "dim", "cl", "zcl", "cat_lo", "cat_hi", "tc_lo", "tc_hi",
];

pub fn to_json(report: &BoundReport) -> Result<String> {
    Ok(serde_json::to_string_pretty(report)?)
}

/// One row per report, columns as in [`CSV_HEADER`].
pub fn to_csv(reports: &[BoundReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in reports {
        let text = r.descriptor.as_str();
        let params = text.split_once(':').map_or("", |(_, p)| p);
        w.write_record([
            r.space.family_name().to_string(),
            params.to_string(),
            r.dim.to_string(),
            r.cl.value.to_string(),
            r.zcl_basic
                .as_ref()
                .map_or(String::new(), |z| z.value.to_string()),
            r.cat.lower.to_string(),
            r.cat.upper_string(),
            r.tc.lower.to_string(),
            r.tc.upper_string(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn interval_block(out: &mut String, name: &str, iv: &BoundInterval) {
    let _ = writeln!(out, "{name:<8}{iv}");
    for p in &iv.provenance {
        let effect = match (p.lower, p.upper, &p.skipped) {
            (_, _, Some(_)) => "skipped".to_string(),
            (Some(l), Some(u), _) if l == u => format!("= {l}"),
            (Some(l), Some(u), _) => format!(">= {l}, <= {u}"),
            (Some(l), None, _) => format!(">= {l}"),
            (None, Some(u), _) => format!("<= {u}"),
            (None, None, _) => String::new(),
        };
        let _ = write!(out, "  {:<4}{effect:<16}{}", p.rule.to_string(), p.citation);
        if !p.inputs.is_empty() {
            let _ = write!(out, "  [{}]", p.inputs);
        }
        out.push('\n');
        if let Some(why) = &p.skipped {
            let _ = writeln!(out, "{:<24}{why}", "");
        }
    }
}

/// Human-readable report, headed by the convention banner.
pub fn render_table(report: &BoundReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{CONVENTION_BANNER}");
    let _ = writeln!(out, "space   {}", report.descriptor);
    let _ = writeln!(out, "dim     {}", report.dim);
    let _ = writeln!(out, "cl      {} ({})", report.cl.value, report.cl.witness);
    match &report.zcl_basic {
        Some(z) => {
            let _ = writeln!(out, "zcl     {} ({})", z.value, z.witness);
        }
        None => out.push_str("zcl     unavailable\n"),
    }
    if let Some(z) = &report.zcl_exhaustive {
        let _ = writeln!(
            out,
            "zcl*    {} ({}, all zero divisors)",
            z.value, z.witness
        );
    }
    interval_block(&mut out, "cat", &report.cat);
    interval_block(&mut out, "TC", &report.tc);
    if let Some(eq) = &report.equivariant {
        let _ = writeln!(
            out,
            "quotient {} by {} (dim {}, cl {}, zcl {})",
            eq.quotient,
            eq.group,
            eq.quotient_dim,
            eq.cl.value,
            eq.zcl_basic
                .as_ref()
                .map_or("unavailable".to_string(), |z| z.value.to_string())
        );
        interval_block(&mut out, "cat_G", &eq.cat_g);
        interval_block(&mut out, "TC_G", &eq.tc_g);
        for n in &eq.notes {
            let _ = writeln!(out, "note    {n}");
        }
    }
    for a in &report.annotations {
        let _ = writeln!(out, "cited   {} = {} ({})", a.invariant, a.value, a.source);
    }
    for n in &report.notes {
        let _ = writeln!(out, "note    {n}");
    }
    out
}
