use std::path::Path;

use hyperlambda_core::bounds::{
    check_2graph_classics, check_chromatic_bounds, check_degree_bound, check_flat_bounds, check_lemma1,
    check_lemma2, check_minx, check_regular_identity, check_size_bounds, BoundReport,
};
use hyperlambda_core::polyform::lambda_alpha;
use hyperlambda_core::SolverConfig;
use serde::{Deserialize, Serialize};

use super::{load_one, Exit, GraphInfo, Outcome};
use crate::error::{input_error, CliError};
use crate::output::{to_json, SCHEMA_VERSION};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Size,
    Degree,
    Lemma1,
    Lemma2,
    Flat,
    Chromatic,
    Classics,
    All,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyArgs {
    pub input: String,
    pub alphas: Vec<f64>,
    pub suites: Vec<Suite>,
    pub pi: Option<f64>,
    pub solver: SolverConfig,
}

#[derive(Serialize)]
struct Solve {
    alpha: f64,
    value: f64,
    residual: f64,
    converged: bool,
}

#[derive(Serialize)]
struct Document {
    schema_version: u32,
    command: &'static str,
    input: GraphInfo,
    suites: Vec<Suite>,
    pi: Option<f64>,
    solves: Vec<Solve>,
    failures: usize,
    reports: Vec<BoundReport>,
}

/// The concrete suites to run. `all` covers `flat` only when a density was
/// given and `classics` only for 2-graphs; naming them explicitly makes the
/// missing prerequisite an error.
fn expand(a: &VerifyArgs, r: usize) -> Result<Vec<Suite>, CliError> {
    let all = a.suites.contains(&Suite::All);
    let mut out = Vec::new();
    for s in [Suite::Size, Suite::Degree, Suite::Lemma1, Suite::Lemma2, Suite::Flat, Suite::Chromatic, Suite::Classics] {
        let named = a.suites.contains(&s);
        if !(named || all) {
            continue;
        }
        match s {
            Suite::Flat if a.pi.is_none() => {
                if named {
                    return Err(input_error!("the flat suite needs --pi"));
                }
            }
            Suite::Classics if r != 2 => {
                if named {
                    return Err(input_error!("the classics suite needs a 2-graph, got r = {r}"));
                }
            }
            _ => out.push(s),
        }
    }
    if out.is_empty() {
        return Err(input_error!("no suite selected"));
    }
    Ok(out)
}

pub(super) fn run(a: &VerifyArgs, base: &Path) -> Result<Outcome, CliError> {
    let (l, inputs) = load_one(&a.input, base)?;
    let g = &l.graph;
    let r = g.uniformity();
    let suites = expand(a, r)?;
    if a.alphas.is_empty() {
        return Err(input_error!("--alpha needs at least one value"));
    }
    let mut solves = Vec::new();
    let mut reports = Vec::new();
    for &alpha in &a.alphas {
        let res = lambda_alpha(g, alpha, &a.solver)?;
        let lam = res.value;
        for &s in &suites {
            match s {
                Suite::Size => reports.extend(check_size_bounds(g, alpha, lam)),
                Suite::Degree => {
                    reports.extend(check_degree_bound(g, alpha, lam));
                    reports.push(check_regular_identity(g, alpha, lam));
                }
                Suite::Lemma1 => {
                    reports.push(check_lemma1(g, alpha, &res)?);
                    if r == 2 && alpha == 2.0 {
                        reports.push(check_minx(g, &res)?);
                    }
                }
                Suite::Lemma2 => reports.push(check_lemma2(g, alpha, &res)?),
                Suite::Flat => reports.extend(check_flat_bounds(g, alpha, lam, a.pi.expect("expanded"))?),
                Suite::Chromatic => reports.extend(check_chromatic_bounds(g, alpha, lam)?),
                Suite::Classics | Suite::All => {}
            }
        }
        solves.push(Solve { alpha, value: lam, residual: res.residual, converged: res.converged });
    }
    if suites.contains(&Suite::Classics) {
        reports.extend(check_2graph_classics(g, &a.solver)?);
    }
    let failures = reports.iter().filter(|b| b.is_failure()).count();
    let doc = Document {
        schema_version: SCHEMA_VERSION,
        command: "verify",
        input: GraphInfo::of(&l),
        suites,
        pi: a.pi,
        solves,
        failures,
        reports,
    };
    let exit = if failures == 0 { Exit::Success } else { Exit::Violation };
    Ok(Outcome { stdout: to_json(&doc)?, exit, inputs, files: Vec::new() })
}
