use std::path::Path;

use hyperlambda_core::polyform::{lambda_alpha, lambda_min_alpha};
use hyperlambda_core::SolverConfig;
use serde::{Deserialize, Serialize};

use super::{load_one, Exit, Format, GraphInfo, Outcome};
use crate::error::CliError;
use crate::output::{list_cell, to_json, Cell, Table, SCHEMA_VERSION};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LambdaArgs {
    pub input: String,
    pub alpha: f64,
    /// Minimize over the signed sphere instead of maximizing.
    pub min: bool,
    pub format: Format,
    pub solver: SolverConfig,
}

#[derive(Serialize)]
struct Document<'a> {
    schema_version: u32,
    command: &'static str,
    input: GraphInfo,
    alpha: f64,
    objective: &'static str,
    value: f64,
    residual: f64,
    iterations: usize,
    converged: bool,
    starts_used: usize,
    witness: &'a [f64],
}

pub(super) fn run(a: &LambdaArgs, base: &Path) -> Result<Outcome, CliError> {
    let (l, inputs) = load_one(&a.input, base)?;
    let res = if a.min {
        lambda_min_alpha(&l.graph, a.alpha, &a.solver)?
    } else {
        lambda_alpha(&l.graph, a.alpha, &a.solver)?
    };
    let doc = Document {
        schema_version: SCHEMA_VERSION,
        command: "lambda",
        input: GraphInfo::of(&l),
        alpha: a.alpha,
        objective: if a.min { "min" } else { "max" },
        value: res.value,
        residual: res.residual,
        iterations: res.iterations,
        converged: res.converged,
        starts_used: res.starts_used,
        witness: &res.witness.entries,
    };
    let stdout = match a.format {
        Format::Json => to_json(&doc)?,
        Format::Csv => {
            let mut t = Table::new(&[
                "source", "r", "n", "m", "alpha", "objective", "value", "residual", "iterations", "converged",
                "starts_used", "witness",
            ]);
            t.push(vec![
                doc.input.source.clone(),
                doc.input.r.cell(),
                doc.input.n.cell(),
                doc.input.m.cell(),
                doc.alpha.cell(),
                doc.objective.cell(),
                doc.value.cell(),
                doc.residual.cell(),
                doc.iterations.cell(),
                doc.converged.cell(),
                doc.starts_used.cell(),
                list_cell(doc.witness),
            ]);
            t.render()?
        }
    };
    let exit = if res.converged { Exit::Success } else { Exit::NotConverged };
    Ok(Outcome { stdout, exit, inputs, files: Vec::new() })
}
