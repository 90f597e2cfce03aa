use std::path::Path;

use hyperlambda_core::polyform::{lagrangian, lagrangian_oracle_with_cap, OracleValue};
use hyperlambda_core::SolverConfig;
use serde::{Deserialize, Serialize};

use super::{load_one, Exit, Format, GraphInfo, Outcome};
use crate::error::{input_error, CliError};
use crate::output::{list_cell, to_json, Cell, Table, SCHEMA_VERSION};

/// Slack allowed between the exact oracle and the floating-point solver.
const DOMINANCE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleArgs {
    pub input: String,
    pub ps: Vec<usize>,
    /// Largest number of compositions a single denominator may visit.
    pub cap: u64,
    pub format: Format,
    pub solver: SolverConfig,
}

#[derive(Serialize)]
struct Row<'a> {
    p: usize,
    numerator: u128,
    denominator: u128,
    value: f64,
    weights: &'a [usize],
}

#[derive(Serialize)]
struct Solver {
    value: f64,
    residual: f64,
    converged: bool,
}

#[derive(Serialize)]
struct Checks {
    /// The oracle never beats the solver by more than the tolerance.
    dominated_by_solver: bool,
    /// `p | q` implies `oracle(p) <= oracle(q)`, compared exactly.
    nondecreasing_along_multiples: bool,
}

#[derive(Serialize)]
struct Document<'a> {
    schema_version: u32,
    command: &'static str,
    input: GraphInfo,
    rows: Vec<Row<'a>>,
    lagrangian: Solver,
    checks: Checks,
}

fn multiples_ok(vals: &[OracleValue]) -> bool {
    vals.iter().all(|a| {
        vals.iter()
            .filter(|b| b.p % a.p == 0)
            .all(|b| a.numerator * b.denominator <= b.numerator * a.denominator)
    })
}

pub(super) fn run(a: &OracleArgs, base: &Path) -> Result<Outcome, CliError> {
    let (l, inputs) = load_one(&a.input, base)?;
    if a.ps.is_empty() {
        return Err(input_error!("--p needs at least one denominator"));
    }
    let vals = a.ps.iter().map(|&p| lagrangian_oracle_with_cap(&l.graph, p, a.cap)).collect::<Result<Vec<_>, _>>()?;
    let lag = lagrangian(&l.graph, &a.solver)?;
    let checks = Checks {
        dominated_by_solver: vals.iter().all(|v| v.value() <= lag.value + DOMINANCE_TOL),
        nondecreasing_along_multiples: multiples_ok(&vals),
    };
    let exit = if !(checks.dominated_by_solver && checks.nondecreasing_along_multiples) {
        Exit::Violation
    } else if !lag.converged {
        Exit::NotConverged
    } else {
        Exit::Success
    };
    let stdout = match a.format {
        Format::Json => to_json(&Document {
            schema_version: SCHEMA_VERSION,
            command: "oracle",
            input: GraphInfo::of(&l),
            rows: vals
                .iter()
                .map(|v| Row {
                    p: v.p,
                    numerator: v.numerator,
                    denominator: v.denominator,
                    value: v.value(),
                    weights: &v.weights,
                })
                .collect(),
            lagrangian: Solver { value: lag.value, residual: lag.residual, converged: lag.converged },
            checks,
        })?,
        Format::Csv => {
            let mut t = Table::new(&["p", "numerator", "denominator", "value", "weights", "lagrangian"]);
            for v in &vals {
                t.push(vec![
                    v.p.cell(),
                    v.numerator.cell(),
                    v.denominator.cell(),
                    v.value().cell(),
                    list_cell(&v.weights),
                    lag.value.cell(),
                ]);
            }
            t.render()?
        }
    };
    Ok(Outcome { stdout, exit, inputs, files: Vec::new() })
}
