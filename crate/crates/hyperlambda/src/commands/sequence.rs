use std::path::{Path, PathBuf};

use hyperlambda_core::extremal::{kns_sequence, theorem1_sequence, EnumerationConfig, SequenceChecks};
use hyperlambda_core::{PropertyMode, PropertySpec};
use serde::{Deserialize, Serialize};

use super::{witness_text, Exit, Format, Outcome};
use crate::error::{input_error, CliError};
use crate::hg;
use crate::input;
use crate::output::{to_json, Cell, Table, SCHEMA_VERSION};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum PropertyKind {
    /// No forbidden graph as a subgraph.
    Mon,
    /// No forbidden graph as an induced subgraph.
    Her,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SequenceArgs {
    pub r: usize,
    pub property: PropertyKind,
    pub forbid: Vec<String>,
    pub chi: Option<usize>,
    pub weak_chi: Option<usize>,
    /// Without an exponent only the edge densities are computed.
    pub alpha: Option<f64>,
    pub orders: Vec<usize>,
    /// Stem of the `.csv` and `.json` files to write.
    pub out: Option<String>,
    pub format: Format,
    pub enumeration: EnumerationConfig,
}

#[derive(Serialize)]
struct PropertyInfo {
    r: usize,
    mode: PropertyMode,
    forbidden: Vec<String>,
    bound: Option<usize>,
}

#[derive(Serialize)]
struct Row {
    n: usize,
    ex: u64,
    slots: u64,
    ex_density: f64,
    lambda_pn: Option<f64>,
    kns_ratio: Option<f64>,
    th1_ratio: Option<f64>,
    converged: Option<bool>,
    extremal_witness: String,
    lambda_witness: Option<String>,
}

#[derive(Serialize)]
struct Document<'a> {
    schema_version: u32,
    command: &'static str,
    property: PropertyInfo,
    alpha: Option<f64>,
    rows: Vec<Row>,
    checks: &'a SequenceChecks,
    hard_violations: Vec<&'static str>,
}

const CSV_COLUMNS: [&str; 10] = [
    "n",
    "ex",
    "slots",
    "ex_density",
    "lambda_pn",
    "kns_ratio",
    "th1_ratio",
    "converged",
    "extremal_witness",
    "lambda_witness",
];

/// Parses `a..b` (inclusive) or a single order.
pub fn parse_orders(s: &str) -> Result<Vec<usize>, CliError> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| input_error!("bad order {t:?} in --n {s:?}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b)?);
            if a > b {
                return Err(input_error!("empty order range {s:?}"));
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![num(s)?]),
    }
}

fn property(a: &SequenceArgs, base: &Path) -> Result<(PropertySpec, Vec<input::InputDigest>), CliError> {
    let picked = usize::from(!a.forbid.is_empty()) + usize::from(a.chi.is_some()) + usize::from(a.weak_chi.is_some());
    if picked > 1 {
        return Err(input_error!("--forbid, --chi and --weak-chi are mutually exclusive"));
    }
    if let Some(p) = a.chi {
        return Ok((PropertySpec::chromatic(a.r, p)?, Vec::new()));
    }
    if let Some(q) = a.weak_chi {
        return Ok((PropertySpec::weak_chromatic(a.r, q)?, Vec::new()));
    }
    let mut graphs = Vec::new();
    let mut digests = Vec::new();
    for f in &a.forbid {
        let l = input::load(f, base)?;
        graphs.push(l.graph);
        digests.push(l.digest);
    }
    let spec = match a.property {
        PropertyKind::Mon => PropertySpec::monotone(a.r, graphs)?,
        PropertyKind::Her => PropertySpec::hereditary(a.r, graphs)?,
    };
    Ok((spec, digests))
}

pub(super) fn run(a: &SequenceArgs, base: &Path) -> Result<Outcome, CliError> {
    let (spec, inputs) = property(a, base)?;
    let report = match a.alpha {
        Some(alpha) => theorem1_sequence(&spec, &a.orders, alpha, &a.enumeration)?,
        None => kns_sequence(&spec, &a.orders, &a.enumeration)?,
    };
    let rows: Vec<Row> = report
        .rows
        .iter()
        .map(|r| Row {
            n: r.n,
            ex: r.ex,
            slots: r.slots,
            ex_density: r.ex_density,
            lambda_pn: r.lambda_pn,
            kns_ratio: r.kns_ratio,
            th1_ratio: r.th1_ratio,
            converged: r.converged,
            extremal_witness: witness_text(&r.extremal_witness),
            lambda_witness: r.lambda_witness.as_ref().map(witness_text),
        })
        .collect();
    let mut table = Table::new(&CSV_COLUMNS);
    for (row, src) in rows.iter().zip(&report.rows) {
        table.push(vec![
            row.n.cell(),
            row.ex.cell(),
            row.slots.cell(),
            row.ex_density.cell(),
            row.lambda_pn.cell(),
            row.kns_ratio.cell(),
            row.th1_ratio.cell(),
            row.converged.cell(),
            hg::compact(&src.extremal_witness),
            src.lambda_witness.as_ref().map(hg::compact).cell(),
        ]);
    }
    let hard_violations = report.hard_violations();
    let doc = Document {
        schema_version: SCHEMA_VERSION,
        command: "sequence",
        property: PropertyInfo {
            r: spec.r,
            mode: spec.mode,
            forbidden: spec.forbidden.iter().map(hg::write).collect(),
            bound: (spec.bound > 0).then_some(spec.bound),
        },
        alpha: a.alpha,
        rows,
        checks: &report.checks,
        hard_violations: hard_violations.clone(),
    };
    let json = to_json(&doc)?;
    let csv = table.render()?;
    let mut files = Vec::new();
    if let Some(stem) = &a.out {
        let stem = PathBuf::from(stem);
        files.push((stem.with_extension("csv"), csv.clone()));
        files.push((stem.with_extension("json"), json.clone()));
    }
    let stdout = match a.format {
        Format::Json => json,
        Format::Csv => csv,
    };
    let exit = if hard_violations.is_empty() { Exit::Success } else { Exit::Violation };
    Ok(Outcome { stdout, exit, inputs, files })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(parse_orders("3..6").unwrap(), vec![3, 4, 5, 6]);
        assert_eq!(parse_orders("5").unwrap(), vec![5]);
        assert!(parse_orders("6..3").is_err());
        assert!(parse_orders("a..3").is_err());
    }
}
