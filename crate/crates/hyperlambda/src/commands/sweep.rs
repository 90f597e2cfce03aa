use std::path::Path;

use hyperlambda_core::bounds::SLACK_TOL;
use hyperlambda_core::polyform::{alpha_sweep, SweepRow};
use hyperlambda_core::SolverConfig;
use serde::{Deserialize, Serialize};

use super::{load_one, Exit, Format, GraphInfo, Outcome};
use crate::error::CliError;
use crate::output::{list_cell, to_json, Cell, Table, SCHEMA_VERSION};

/// The exponent grid used when none is given.
pub const DEFAULT_ALPHAS: [f64; 7] = [1.0, 1.25, 1.5, 2.0, 3.0, 8.0, 64.0];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepArgs {
    pub input: String,
    pub alphas: Vec<f64>,
    pub format: Format,
    pub solver: SolverConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub(crate) struct SweepChecks {
    pub lambda_nondecreasing: bool,
    pub h_nonincreasing: bool,
    pub f_nonincreasing: bool,
}

#[derive(Serialize)]
struct Document<'a> {
    schema_version: u32,
    command: &'static str,
    input: GraphInfo,
    rows: &'a [SweepRow],
    checks: SweepChecks,
}

fn tol(v: f64) -> f64 {
    SLACK_TOL * v.abs().max(1.0)
}

/// Monotonicity of the three columns, each within the bound tolerance.
pub(crate) fn sweep_checks(rows: &[SweepRow]) -> SweepChecks {
    let pairs = || rows.windows(2).map(|w| (&w[0], &w[1]));
    SweepChecks {
        lambda_nondecreasing: pairs().all(|(a, b)| b.lambda >= a.lambda - tol(a.lambda)),
        h_nonincreasing: pairs().all(|(a, b)| b.h <= a.h + tol(a.h)),
        f_nonincreasing: pairs().all(|(a, b)| match (a.f, b.f) {
            (Some(x), Some(y)) => y <= x + tol(x),
            _ => true,
        }),
    }
}

pub(super) fn run(a: &SweepArgs, base: &Path) -> Result<Outcome, CliError> {
    let (l, inputs) = load_one(&a.input, base)?;
    let rows = alpha_sweep(&l.graph, &a.alphas, &a.solver)?;
    let checks = sweep_checks(&rows);
    let stdout = match a.format {
        Format::Json => to_json(&Document {
            schema_version: SCHEMA_VERSION,
            command: "sweep",
            input: GraphInfo::of(&l),
            rows: &rows,
            checks,
        })?,
        Format::Csv => {
            let mut t = Table::new(&["alpha", "lambda", "h", "f", "residual", "converged", "witness"]);
            for r in &rows {
                t.push(vec![
                    r.alpha.cell(),
                    r.lambda.cell(),
                    r.h.cell(),
                    r.f.cell(),
                    r.residual.cell(),
                    r.converged.cell(),
                    list_cell(&r.witness),
                ]);
            }
            t.render()?
        }
    };
    let monotone = checks.lambda_nondecreasing && checks.h_nonincreasing && checks.f_nonincreasing;
    let exit = if !monotone {
        Exit::Violation
    } else if rows.iter().any(|r| !r.converged) {
        Exit::NotConverged
    } else {
        Exit::Success
    };
    Ok(Outcome { stdout, exit, inputs, files: Vec::new() })
}
