//! Multistart local ascent on the nonnegative part of the `l^alpha` sphere.
//!
//! Each start is driven by one of three maps, chosen by alpha:
//!
//! * `alpha >= alpha_switch`: the shifted fixed point
//!   `y_k = (g_k + s x_k^(alpha-1))^(1/(alpha-1))`, renormalized. A step that
//!   lowers the value is replaced by a projected-gradient step.
//! * `1 < alpha < alpha_switch`: the multiplicative map
//!   `y_k = (x_k g_k / P(x))^(1/alpha)`, which lands on the sphere exactly;
//!   a step that lowers the value is replaced by a projected-gradient step
//!   with backtracking. Plain projected gradient stalls here because optimal
//!   entries can be many orders of magnitude apart.
//! * `alpha = 1`: the same map, `y_k = x_k g_k / P(x)` on the simplex, which
//!   never lowers `P`.
//!
//! At geometrically spaced checkpoints the point is handed to the Newton
//! polish; a polished point is kept only if it is feasible, does not lose
//! value, and meets the residual tolerance.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::newton::polish;
use super::{normalize, phi, Incidence, SolverConfig, SpectralResult, WeightVector};
use crate::error::{invalid, Result};
use crate::hypergraph::Hypergraph;
use crate::par;

const POLISH_THRESHOLDS: [f64; 5] = [0.0, 1e-12, 1e-8, 1e-5, 1e-3];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Method {
    FixedPoint,
    Multiplicative,
    Gradient,
    Replicator,
}

impl Method {
    pub(crate) fn for_alpha(alpha: f64, cfg: &SolverConfig) -> Method {
        if alpha == 1.0 {
            Method::Replicator
        } else if alpha >= cfg.alpha_switch {
            Method::FixedPoint
        } else {
            Method::Multiplicative
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Candidate {
    pub(crate) x: Vec<f64>,
    pub(crate) value: f64,
    pub(crate) residual: f64,
    pub(crate) iterations: usize,
    pub(crate) converged: bool,
}

impl Candidate {
    pub(crate) fn into_result(self, alpha: f64, starts_used: usize) -> SpectralResult {
        SpectralResult {
            value: self.value,
            witness: WeightVector { entries: self.x, alpha },
            residual: self.residual,
            iterations: self.iterations,
            converged: self.converged,
            starts_used,
        }
    }
}

pub(crate) struct Ascent<'a, 'g> {
    pub(crate) inc: &'a Incidence<'g>,
    pub(crate) alpha: f64,
    pub(crate) cfg: &'a SolverConfig,
    /// `+1` maximizes `P`, `-1` minimizes it.
    pub(crate) sense: f64,
    /// Whether coordinates may be negative.
    pub(crate) signed: bool,
}

impl Ascent<'_, '_> {
    fn objective(&self, x: &[f64]) -> f64 {
        self.sense * self.inc.value(x)
    }

    pub(crate) fn residual_at(&self, x: &[f64], grad: &mut [f64]) -> f64 {
        self.inc.gradient(x, grad);
        let lambda = self.inc.value(x);
        self.inc.residual(x, lambda, self.alpha, grad, self.signed)
    }

    fn fixed_point(&self, x: &[f64], grad: &[f64]) -> Vec<f64> {
        let e = 1.0 / (self.alpha - 1.0);
        let mut y: Vec<f64> = x
            .iter()
            .zip(grad)
            .map(|(&xk, &gk)| {
                let base = gk + self.cfg.shift * libm::pow(xk, self.alpha - 1.0);
                if base > 0.0 {
                    libm::pow(base, e)
                } else {
                    0.0
                }
            })
            .collect();
        if normalize(&mut y, self.alpha) == 0.0 {
            return x.to_vec();
        }
        y
    }

    fn multiplicative(&self, x: &[f64], grad: &[f64]) -> Vec<f64> {
        let p = self.inc.value(x);
        if p <= 0.0 {
            return x.to_vec();
        }
        let e = 1.0 / self.alpha;
        let mut y: Vec<f64> = x
            .iter()
            .zip(grad)
            .map(|(&xk, &gk)| {
                let u = xk * gk / p;
                if e == 1.0 || u <= 0.0 {
                    u.max(0.0)
                } else {
                    libm::pow(u, e)
                }
            })
            .collect();
        normalize(&mut y, self.alpha);
        y
    }

    /// One backtracking step along the tangent projection of `sense * grad P`.
    /// Returns `None` when no step improves the objective.
    fn gradient_step(&self, x: &[f64], grad: &[f64], step: &mut f64) -> Option<(Vec<f64>, f64)> {
        let r = self.inc.r as f64;
        let d: Vec<f64> = grad.iter().map(|g| self.sense * r * g).collect();
        let w: Vec<f64> = x.iter().map(|&v| phi(v, self.alpha)).collect();
        let ww: f64 = w.iter().map(|v| v * v).sum();
        let dw: f64 = d.iter().zip(&w).map(|(a, b)| a * b).sum();
        let c = if ww > 0.0 { dw / ww } else { 0.0 };
        let dt: Vec<f64> = d.iter().zip(&w).map(|(a, b)| a - c * b).collect();
        let v0 = self.objective(x);
        let mut t = *step * 2.0;
        for _ in 0..60 {
            let mut y: Vec<f64> = x.iter().zip(&dt).map(|(a, b)| a + t * b).collect();
            if !self.signed {
                y.iter_mut().for_each(|v| *v = v.max(0.0));
            }
            if normalize(&mut y, self.alpha) > 0.0 {
                let vy = self.objective(&y);
                if vy > v0 {
                    *step = t;
                    return Some((y, vy));
                }
            }
            t *= 0.5;
        }
        *step = 1e-3;
        None
    }

    fn tolerance_met(&self, res: f64) -> bool {
        res <= self.cfg.tolerance
    }

    /// Off-support coordinates whose gradient beats the multiplier (simplex
    /// KKT violations), which the multiplicative map cannot revive.
    fn kkt_violators(&self, x: &[f64], grad: &[f64]) -> Vec<usize> {
        let lambda = self.inc.value(x);
        (0..x.len())
            .filter(|&k| x[k] == 0.0 && grad[k] > lambda * (1.0 + 1e-12) + 1e-15)
            .collect()
    }

    fn try_polish(&self, x: &[f64], value: f64, grad: &mut [f64]) -> Option<(Vec<f64>, f64, f64)> {
        let mut best: Option<(Vec<f64>, f64, f64)> = None;
        for &th in &POLISH_THRESHOLDS {
            let Some(z) = polish(self.inc, self.alpha, x, th, self.signed) else {
                continue;
            };
            let vz = self.objective(&z);
            let rz = self.residual_at(&z, grad);
            let keeps_value = vz >= value - 1e-13 * libm::fabs(value).max(1.0);
            if keeps_value && self.tolerance_met(rz) && best.as_ref().is_none_or(|b| vz > b.1) {
                best = Some((z, vz, rz));
            }
        }
        best
    }

    /// Runs one start to convergence or the iteration budget.
    pub(crate) fn run(&self, x0: &[f64]) -> Candidate {
        let n = self.inc.n;
        let method = if self.signed {
            Method::Gradient
        } else {
            Method::for_alpha(self.alpha, self.cfg)
        };
        let mut x = x0.to_vec();
        if !self.signed {
            x.iter_mut().for_each(|v| *v = v.max(0.0));
        }
        normalize(&mut x, self.alpha);
        let mut grad = vec![0.0; n];
        let mut v = self.objective(&x);
        let mut step = 0.1;
        let mut iters = 0;
        let mut next_check = 16;
        let mut stalls = 0;
        loop {
            self.inc.gradient(&x, &mut grad);
            let proposal = match method {
                Method::FixedPoint => {
                    let y = self.fixed_point(&x, &grad);
                    let vy = self.objective(&y);
                    if vy >= v {
                        Some((y, vy))
                    } else {
                        self.gradient_step(&x, &grad, &mut step)
                    }
                }
                Method::Multiplicative => {
                    let y = self.multiplicative(&x, &grad);
                    let vy = self.objective(&y);
                    if vy >= v {
                        Some((y, vy))
                    } else {
                        self.gradient_step(&x, &grad, &mut step)
                    }
                }
                Method::Replicator => {
                    let y = self.multiplicative(&x, &grad);
                    let vy = self.objective(&y);
                    (vy >= v).then_some((y, vy))
                }
                Method::Gradient => self.gradient_step(&x, &grad, &mut step),
            };
            iters += 1;
            let stalled = match proposal {
                Some((y, vy)) => {
                    let small = vy - v <= 1e-15 * libm::fabs(v).max(1.0);
                    x = y;
                    v = vy;
                    small
                }
                None => true,
            };
            stalls = if stalled { stalls + 1 } else { 0 };
            let out_of_budget = iters >= self.cfg.max_iterations;
            if iters >= next_check || stalls > 0 || out_of_budget {
                next_check = iters * 2;
                let res = self.residual_at(&x, &mut grad);
                if self.tolerance_met(res) {
                    return self.finish(x, iters, true, &mut grad);
                }
                if let Some((z, _, _)) = self.try_polish(&x, v, &mut grad) {
                    return self.finish(z, iters, true, &mut grad);
                }
                if method == Method::Replicator {
                    self.inc.gradient(&x, &mut grad);
                    let add = self.kkt_violators(&x, &grad);
                    if !add.is_empty() {
                        let eps = 1e-2 / add.len() as f64;
                        x.iter_mut().for_each(|v| *v *= 1.0 - 1e-2);
                        for k in add {
                            x[k] = eps;
                        }
                        v = self.objective(&x);
                        stalls = 0;
                        continue;
                    }
                }
                if out_of_budget || stalls >= 3 {
                    return self.finish(x, iters, false, &mut grad);
                }
            }
        }
    }

    fn finish(&self, x: Vec<f64>, iterations: usize, converged: bool, grad: &mut [f64]) -> Candidate {
        let residual = self.residual_at(&x, grad);
        Candidate {
            value: self.inc.value(&x),
            residual,
            iterations,
            converged: converged && self.tolerance_met(residual),
            x,
        }
    }
}

/// Index of the reported candidate: best objective; among those within
/// `1e-12` relative of it, converged first, then the lexicographically
/// largest witness.
pub(crate) fn select(cands: &[Candidate], sense: f64) -> usize {
    let best = cands.iter().map(|c| sense * c.value).fold(f64::NEG_INFINITY, f64::max);
    let slack = 1e-12 * libm::fabs(best).max(1.0);
    let mut pick: Option<usize> = None;
    for (i, c) in cands.iter().enumerate() {
        if sense * c.value < best - slack {
            continue;
        }
        pick = match pick {
            None => Some(i),
            Some(j) => {
                let cj = &cands[j];
                let better = match (c.converged, cj.converged) {
                    (true, false) => true,
                    (false, true) => false,
                    _ => lex_cmp(&c.x, &cj.x).is_gt(),
                };
                Some(if better { i } else { j })
            }
        };
    }
    pick.expect("at least one candidate")
}

fn lex_cmp(a: &[f64], b: &[f64]) -> core::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.total_cmp(y) {
            core::cmp::Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

/// Uniform, degree-proportional, then `num_starts - 2` seeded exponential
/// starts.
pub(crate) fn default_starts(g: &Hypergraph, cfg: &SolverConfig) -> Vec<Vec<f64>> {
    let n = g.order();
    let mut starts = vec![vec![1.0; n]];
    if cfg.num_starts >= 2 {
        let deg = g.degree_profile().degrees;
        if deg.iter().any(|&d| d > 0) {
            starts.push(deg.iter().map(|&d| d as f64).collect());
        } else {
            starts.push(vec![1.0; n]);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    while starts.len() < cfg.num_starts {
        starts.push((0..n).map(|_| -libm::log(1.0 - rng.random::<f64>())).collect());
    }
    starts
}

pub(crate) fn trivial_result(g: &Hypergraph, alpha: f64) -> SpectralResult {
    let mut x = vec![1.0; g.order()];
    normalize(&mut x, alpha);
    SpectralResult {
        value: 0.0,
        witness: WeightVector { entries: x, alpha },
        residual: 0.0,
        iterations: 0,
        converged: true,
        starts_used: 1,
    }
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha >= 1.0) || !alpha.is_finite() {
        return Err(invalid!("alpha must be a finite real >= 1, got {alpha}"));
    }
    Ok(())
}

pub(crate) fn run_starts(
    g: &Hypergraph,
    alpha: f64,
    cfg: &SolverConfig,
    seeds: &[Vec<f64>],
) -> Vec<Candidate> {
    let inc = Incidence::new(g);
    let ascent = Ascent { inc: &inc, alpha, cfg, sense: 1.0, signed: false };
    let mut starts = default_starts(g, cfg);
    starts.extend(seeds.iter().filter(|s| s.len() == g.order()).cloned());
    par::map(&starts, |s| ascent.run(s))
}

/// One result per start (default starts only), in start order.
pub fn lambda_alpha_starts(
    g: &Hypergraph,
    alpha: f64,
    cfg: &SolverConfig,
) -> Result<Vec<SpectralResult>> {
    check_alpha(alpha)?;
    cfg.validate()?;
    if g.size() == 0 {
        return Ok(vec![trivial_result(g, alpha)]);
    }
    let cands = run_starts(g, alpha, cfg, &[]);
    let total = cands.len();
    Ok(cands.into_iter().map(|c| c.into_result(alpha, total)).collect())
}

/// `lambda_alpha` with additional caller-supplied starting points (used for
/// warm starts across an alpha sweep). Entries of a seed are clipped at 0.
pub fn lambda_alpha_seeded(
    g: &Hypergraph,
    alpha: f64,
    cfg: &SolverConfig,
    seeds: &[Vec<f64>],
) -> Result<SpectralResult> {
    check_alpha(alpha)?;
    cfg.validate()?;
    if alpha == 1.0 {
        return super::lagrangian::lagrangian_seeded(g, cfg, seeds);
    }
    if g.size() == 0 {
        return Ok(trivial_result(g, alpha));
    }
    let cands = run_starts(g, alpha, cfg, seeds);
    let i = select(&cands, 1.0);
    let total = cands.len();
    Ok(cands.into_iter().nth(i).expect("selected index").into_result(alpha, total))
}

/// Lower bound on `lambda_alpha(G)` from multistart ascent; `alpha = 1`
/// dispatches to [`lagrangian`](super::lagrangian).
pub fn lambda_alpha(g: &Hypergraph, alpha: f64, cfg: &SolverConfig) -> Result<SpectralResult> {
    lambda_alpha_seeded(g, alpha, cfg, &[])
}
