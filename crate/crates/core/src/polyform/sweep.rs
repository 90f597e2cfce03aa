//! Solving across a grid of exponents with warm starts between neighbours.
//!
//! Three exact transfers make the computed columns monotone whenever each
//! solve is a local optimum of its own start set:
//!
//! * `x -> x^(a/b)` maps the unit `l^a` sphere to the unit `l^b` sphere and,
//!   for `a <= b`, does not decrease `P` (entries are at most 1);
//! * `x / |x|_a` for a point of the `l^b` sphere, `a <= b`, carries the bound
//!   `lambda_a n^(r/a) >= lambda_b n^(r/b)` (power-mean inequality);
//! * `x -> x^(b/a)` from `l^b` to `l^a`, `a <= b`, carries
//!   `(lambda_a / (r! e))^a >= (lambda_b / (r! e))^b` (Jensen on edge products).

use alloc::vec::Vec;

use super::ascent::{check_alpha, Ascent};
use super::{lambda_alpha, normalize, Incidence, SolverConfig, SpectralResult, WeightVector};
use crate::error::{invalid, Result};
use crate::hypergraph::{factorial, Hypergraph};

const MAX_ROUNDS: usize = 4;

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SweepRow {
    pub alpha: f64,
    pub lambda: f64,
    /// `lambda * n^(r/alpha)`
    pub h: f64,
    /// `(lambda / (r! e))^alpha`, absent for edgeless graphs.
    pub f: Option<f64>,
    pub residual: f64,
    pub converged: bool,
    pub witness: Vec<f64>,
}

fn power(x: &[f64], e: f64) -> Vec<f64> {
    x.iter().map(|&v| if v > 0.0 { libm::pow(v, e) } else { 0.0 }).collect()
}

fn rescaled(x: &[f64], alpha: f64) -> Vec<f64> {
    let mut y = x.to_vec();
    normalize(&mut y, alpha);
    y
}

/// Tries `seeds` at exponent `alpha`; replaces `cur` if one ascends higher.
fn improve(g: &Hypergraph, alpha: f64, cfg: &SolverConfig, cur: &mut SpectralResult, seeds: &[Vec<f64>]) -> bool {
    let inc = Incidence::new(g);
    let ascent = Ascent { inc: &inc, alpha, cfg, sense: 1.0, signed: false };
    let mut changed = false;
    for s in seeds {
        if inc.value(&rescaled(s, alpha)) <= cur.value {
            continue;
        }
        let c = ascent.run(s);
        if c.value > cur.value {
            *cur = SpectralResult {
                value: c.value,
                witness: WeightVector { entries: c.x, alpha },
                residual: c.residual,
                iterations: c.iterations,
                converged: c.converged,
                starts_used: cur.starts_used + 1,
            };
            changed = true;
        }
    }
    changed
}

/// Solves every alpha in `alphas` (sorted, each `>= 1`) and reports
/// `lambda`, `h_G` and `f_G` per row.
pub fn alpha_sweep(g: &Hypergraph, alphas: &[f64], cfg: &SolverConfig) -> Result<Vec<SweepRow>> {
    if alphas.is_empty() {
        return Err(invalid!("alpha sweep needs at least one exponent"));
    }
    for &a in alphas {
        check_alpha(a)?;
    }
    if alphas.windows(2).any(|w| w[0] > w[1]) {
        return Err(invalid!("alphas must be sorted in increasing order"));
    }
    let mut res: Vec<SpectralResult> =
        alphas.iter().map(|&a| lambda_alpha(g, a, cfg)).collect::<Result<_>>()?;
    if g.size() > 0 {
        for _ in 0..MAX_ROUNDS {
            let mut changed = false;
            for i in 1..alphas.len() {
                let x = &res[i - 1].witness.entries;
                let seed = power(x, alphas[i - 1] / alphas[i]);
                changed |= improve(g, alphas[i], cfg, &mut res[i], &[seed]);
            }
            for i in (0..alphas.len() - 1).rev() {
                let x = &res[i + 1].witness.entries;
                let seeds = [rescaled(x, alphas[i]), power(x, alphas[i + 1] / alphas[i])];
                changed |= improve(g, alphas[i], cfg, &mut res[i], &seeds);
            }
            if !changed {
                break;
            }
        }
    }
    let r = g.uniformity() as f64;
    let n = g.order() as f64;
    let re = factorial(g.uniformity()) * g.size() as f64;
    Ok(alphas
        .iter()
        .zip(res)
        .map(|(&alpha, s)| SweepRow {
            alpha,
            lambda: s.value,
            h: s.value * libm::pow(n, r / alpha),
            f: (g.size() > 0).then(|| libm::pow(s.value / re, alpha)),
            residual: s.residual,
            converged: s.converged,
            witness: s.witness.entries,
        })
        .collect())
}
