//! The polyform `P_G`, its gradient, and the solvers for `lambda_alpha`.
//!
//! Notation used across the submodules: `g_k = (r-1)! * sum over edges e
//! containing k of prod_{i in e, i != k} x_i`, so that `dP/dx_k = r * g_k`
//! and `sum_k x_k g_k = P(x)`. A maximizer on the `l^alpha` sphere satisfies
//! `lambda * x_k^(alpha-1) = g_k` with `lambda = P(x)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{invalid, Result};
use crate::hypergraph::{factorial, Hypergraph};
use crate::sum::CompensatedSum;

mod ascent;
mod lagrangian;
mod newton;
mod signed;
mod sweep;

pub use ascent::{lambda_alpha, lambda_alpha_seeded, lambda_alpha_starts};
pub use lagrangian::{lagrangian, lagrangian_oracle, lagrangian_oracle_with_cap, OracleValue, DEFAULT_ORACLE_CAP};
pub use signed::lambda_min_alpha;
pub use sweep::{alpha_sweep, SweepRow};

/// A point `x` together with the exponent of the norm it is measured in.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct WeightVector {
    pub entries: Vec<f64>,
    pub alpha: f64,
}

impl WeightVector {
    pub fn new(entries: Vec<f64>, alpha: f64) -> Result<Self> {
        if !(alpha >= 1.0) || !alpha.is_finite() {
            return Err(invalid!("alpha must be a finite real >= 1, got {alpha}"));
        }
        if entries.iter().any(|v| !v.is_finite()) {
            return Err(invalid!("weight vector has a non-finite entry"));
        }
        Ok(Self { entries, alpha })
    }

    /// Scales `entries` onto the unit `l^alpha` sphere. The zero vector is
    /// returned unchanged.
    pub fn normalized(entries: Vec<f64>, alpha: f64) -> Result<Self> {
        let mut w = Self::new(entries, alpha)?;
        normalize(&mut w.entries, alpha);
        Ok(w)
    }

    pub fn norm(&self) -> f64 {
        norm(&self.entries, self.alpha)
    }

    /// `sum |x_i|^alpha = 1` within `1e-12`.
    pub fn is_normalized(&self) -> bool {
        libm::fabs(power_sum(&self.entries, self.alpha) - 1.0) <= 1e-12
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|&v| v >= 0.0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Smallest entry (`+inf` for the empty vector).
    pub fn min_entry(&self) -> f64 {
        self.entries.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// Output of a solve. `value` is always `P_G(witness)` at a feasible point,
/// hence a lower bound on the optimum; `converged` says whether the
/// stationarity residual reached the tolerance.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SpectralResult {
    pub value: f64,
    pub witness: WeightVector,
    pub residual: f64,
    /// Iterations spent by the start that produced the witness.
    pub iterations: usize,
    pub converged: bool,
    pub starts_used: usize,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SolverConfig {
    pub tolerance: f64,
    pub max_iterations: usize,
    pub num_starts: usize,
    pub rng_seed: u64,
    /// Shift added to `x_k^(alpha-1)` in the fixed-point map.
    pub shift: f64,
    /// Below this alpha the fixed-point map is replaced by the multiplicative
    /// update.
    pub alpha_switch: f64,
    /// Number of compositions the Lagrangian solver may spend on its exact
    /// cross-check (0 disables it).
    pub oracle_budget: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            tolerance: 1e-10,
            max_iterations: 100_000,
            num_starts: 32,
            rng_seed: 0x5eed,
            shift: 1.0,
            alpha_switch: 1.25,
            oracle_budget: 20_000,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0) {
            return Err(invalid!("tolerance must be positive, got {}", self.tolerance));
        }
        if self.num_starts == 0 {
            return Err(invalid!("num_starts must be at least 1"));
        }
        if !(self.shift >= 0.0) || !self.shift.is_finite() {
            return Err(invalid!("shift must be a finite real >= 0, got {}", self.shift));
        }
        if !(self.alpha_switch >= 1.0) {
            return Err(invalid!("alpha_switch must be >= 1, got {}", self.alpha_switch));
        }
        Ok(())
    }
}

pub(crate) fn power_sum(x: &[f64], alpha: f64) -> f64 {
    if alpha == 1.0 {
        return x.iter().map(|v| libm::fabs(*v)).collect::<CompensatedSum>().value();
    }
    x.iter().map(|v| libm::pow(libm::fabs(*v), alpha)).collect::<CompensatedSum>().value()
}

pub(crate) fn norm(x: &[f64], alpha: f64) -> f64 {
    let s = power_sum(x, alpha);
    if alpha == 1.0 {
        s
    } else {
        libm::pow(s, 1.0 / alpha)
    }
}

/// In-place scaling onto the unit sphere; returns the old norm.
pub(crate) fn normalize(x: &mut [f64], alpha: f64) -> f64 {
    let nrm = norm(x, alpha);
    if nrm > 0.0 {
        x.iter_mut().for_each(|v| *v /= nrm);
    }
    nrm
}

/// `sign(t) |t|^(alpha-1)`, the derivative of `|t|^alpha / alpha`.
pub(crate) fn phi(t: f64, alpha: f64) -> f64 {
    if alpha == 1.0 {
        return if t > 0.0 {
            1.0
        } else if t < 0.0 {
            -1.0
        } else {
            0.0
        };
    }
    let m = libm::pow(libm::fabs(t), alpha - 1.0);
    if t < 0.0 {
        -m
    } else {
        m
    }
}

/// Edge list with the constant factors needed by the solvers.
pub(crate) struct Incidence<'a> {
    pub(crate) g: &'a Hypergraph,
    pub(crate) r: usize,
    pub(crate) n: usize,
    /// `(r-1)!`
    pub(crate) coef: f64,
}

impl<'a> Incidence<'a> {
    pub(crate) fn new(g: &'a Hypergraph) -> Self {
        let r = g.uniformity();
        Incidence { g, r, n: g.order(), coef: factorial(r - 1) }
    }

    /// `P(x)` with compensated summation in edge order.
    pub(crate) fn value(&self, x: &[f64]) -> f64 {
        let s: CompensatedSum = self.g.edges().map(|e| e.iter().map(|&v| x[v]).product()).collect();
        self.coef * self.r as f64 * s.value()
    }

    /// All `g_k` at once. Leave-one-out products use prefix/suffix products,
    /// so zero coordinates are handled exactly.
    pub(crate) fn gradient(&self, x: &[f64], out: &mut [f64]) {
        out.iter_mut().for_each(|v| *v = 0.0);
        let r = self.r;
        let mut pre = vec![1.0; r + 1];
        for e in self.g.edges() {
            for j in 0..r {
                pre[j + 1] = pre[j] * x[e[j]];
            }
            let mut suffix = 1.0;
            for j in (0..r).rev() {
                out[e[j]] += pre[j] * suffix;
                suffix *= x[e[j]];
            }
        }
        out.iter_mut().for_each(|v| *v *= self.coef);
    }

    /// Residual of the stationarity system at `x` with multiplier `lambda`,
    /// scaled by `1 / max(1, |lambda|)`.
    ///
    /// For `alpha > 1` every coordinate must satisfy `lambda phi(x_k) = g_k`.
    /// For `alpha = 1` on the simplex the KKT form is used: equality on the
    /// support, `g_k <= lambda` off it.
    pub(crate) fn residual(
        &self,
        x: &[f64],
        lambda: f64,
        alpha: f64,
        grad: &[f64],
        signed: bool,
    ) -> f64 {
        let mut worst = 0.0f64;
        for k in 0..self.n {
            let d = if alpha == 1.0 && !signed {
                if x[k] > 0.0 {
                    libm::fabs(lambda - grad[k])
                } else {
                    (grad[k] - lambda).max(0.0)
                }
            } else if alpha == 1.0 && x[k] == 0.0 {
                // subgradient of |t| at 0 is [-1, 1]
                (libm::fabs(grad[k]) - libm::fabs(lambda)).max(0.0)
            } else {
                libm::fabs(lambda * phi(x[k], alpha) - grad[k])
            };
            worst = worst.max(d);
        }
        worst / libm::fabs(lambda).max(1.0)
    }
}

fn check_len(g: &Hypergraph, x: &[f64]) -> Result<()> {
    if x.len() != g.order() {
        return Err(invalid!("vector has length {}, graph has {} vertices", x.len(), g.order()));
    }
    Ok(())
}

/// `P_G(x) = r! * sum over edges of prod x_i`, summed in edge order with
/// compensation.
pub fn eval_polyform(g: &Hypergraph, x: &[f64]) -> Result<f64> {
    check_len(g, x)?;
    Ok(Incidence::new(g).value(x))
}

/// `(1/r) dP_G/dx_k`.
pub fn partial_gradient(g: &Hypergraph, x: &[f64], k: usize) -> Result<f64> {
    check_len(g, x)?;
    if k >= g.order() {
        return Err(invalid!("vertex {k} out of range for n = {}", g.order()));
    }
    let r = g.uniformity();
    let s: CompensatedSum = g
        .edges()
        .filter(|e| e.contains(&k))
        .map(|e| e.iter().filter(|&&v| v != k).map(|&v| x[v]).product())
        .collect();
    Ok(factorial(r - 1) * s.value())
}

/// Relative residual of the eigen-equations at `x`; see the module notes.
pub fn eequ_residual(g: &Hypergraph, x: &WeightVector, lambda: f64) -> Result<f64> {
    check_len(g, &x.entries)?;
    let inc = Incidence::new(g);
    let mut grad = vec![0.0; g.order()];
    inc.gradient(&x.entries, &mut grad);
    Ok(inc.residual(&x.entries, lambda, x.alpha, &grad, !x.is_nonnegative()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k(r: usize, n: usize) -> Hypergraph {
        Hypergraph::complete(r, n).unwrap()
    }

    #[test]
    fn polyform_examples() {
        let e3 = k(3, 3);
        assert_eq!(eval_polyform(&e3, &[1.0, 1.0, 1.0]).unwrap(), 6.0);
        let t = 1.0 / 3.0;
        assert!((eval_polyform(&k(2, 3), &[t, t, t]).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        assert!(eval_polyform(&e3, &[1.0]).is_err());
    }

    #[test]
    fn gradient_examples() {
        assert_eq!(partial_gradient(&k(3, 3), &[1.0; 3], 0).unwrap(), 2.0);
        let empty = Hypergraph::empty(3, 4).unwrap();
        assert_eq!(partial_gradient(&empty, &[0.5; 4], 2).unwrap(), 0.0);
        assert!(partial_gradient(&empty, &[0.5; 4], 4).is_err());
    }

    #[test]
    fn residual_vanishes_at_uniform_point_of_complete_graph() {
        for (r, n, alpha) in [(3, 5, 3.0), (2, 4, 1.5), (3, 6, 1.0), (2, 6, 2.0)] {
            let g = k(r, n);
            let x = WeightVector::normalized(vec![1.0; n], alpha).unwrap();
            let lam = eval_polyform(&g, &x.entries).unwrap();
            assert!(eequ_residual(&g, &x, lam).unwrap() <= 1e-12);
        }
        let g = k(2, 3);
        let x = WeightVector::normalized(vec![1.0, 0.5, 0.2], 2.0).unwrap();
        let lam = eval_polyform(&g, &x.entries).unwrap();
        assert!(eequ_residual(&g, &x, lam).unwrap() > 1e-3);
    }

    #[test]
    fn weight_vector_contract() {
        assert!(WeightVector::new(vec![1.0], 0.5).is_err());
        assert!(WeightVector::new(vec![f64::NAN], 2.0).is_err());
        let w = WeightVector::normalized(vec![3.0, 4.0], 2.0).unwrap();
        assert!(w.is_normalized() && w.is_nonnegative());
        assert!((w.entries[0] - 0.6).abs() < 1e-15);
    }

    fn arb_graph() -> impl Strategy<Value = (Hypergraph, Vec<f64>)> {
        (2usize..=3, 3usize..=7).prop_flat_map(|(r, n)| {
            let subsets = crate::hypergraph::binomial(n, r) as usize;
            (
                proptest::collection::vec(any::<bool>(), subsets),
                proptest::collection::vec(0.05f64..1.0, n),
            )
                .prop_map(move |(mask, x)| {
                    let all = crate::hypergraph::Hypergraph::complete(r, n).unwrap();
                    let edges: Vec<Vec<usize>> =
                        all.edges().zip(&mask).filter(|(_, &m)| m).map(|(e, _)| e.to_vec()).collect();
                    (Hypergraph::from_edges(r, n, edges).unwrap(), x)
                })
        })
    }

    proptest! {
        #[test]
        fn euler_identity((g, x) in arb_graph()) {
            let inc = Incidence::new(&g);
            let mut grad = vec![0.0; g.order()];
            inc.gradient(&x, &mut grad);
            let p = inc.value(&x);
            let s: f64 = x.iter().zip(&grad).map(|(a, b)| a * b).sum();
            prop_assert!((p - s).abs() <= 1e-12 * p.abs().max(1.0));
            for v in 0..g.order() {
                let single = partial_gradient(&g, &x, v).unwrap();
                prop_assert!((grad[v] - single).abs() <= 1e-12 * single.abs().max(1.0));
            }
        }

        #[test]
        fn integer_weights_count_blow_up_edges((g, x) in arb_graph()) {
            let k: Vec<usize> = x.iter().map(|v| 1 + (v * 3.0) as usize).collect();
            let kf: Vec<f64> = k.iter().map(|&v| v as f64).collect();
            let b = g.blow_up(&k).unwrap();
            let r = g.uniformity();
            prop_assert_eq!(eval_polyform(&g, &kf).unwrap(), factorial(r) * b.size() as f64);
        }
    }
}
