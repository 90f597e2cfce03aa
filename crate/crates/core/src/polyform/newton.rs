//! Newton refinement of a near-stationary point on a fixed support.
//!
//! Unknowns are the support coordinates `x_S` and the multiplier `lambda`:
//!
//! ```text
//! F_k = g_k(x) - lambda * phi(x_k)      (k in S)
//! F_0 = sum_{k in S} |x_k|^alpha - 1
//! ```
//!
//! The Jacobian uses `dg_k/dx_j = H_kj = (r-1)! * sum over edges containing
//! k and j of the product of the other entries`. Singular systems (for
//! example a continuum of optima) fall back to a Levenberg-Marquardt step.
//!
//! For nonnegative points with `alpha > 1` the iteration runs in the
//! coordinates `t_k = ln x_k`: optimal entries can be tiny when alpha is close
//! to 1, and `x^(alpha-1)` is far better conditioned in `t`. On the simplex
//! (`alpha = 1`) it runs in `x`, and a coordinate that a full step would push
//! to zero or below leaves the support (face descent).

use alloc::vec;
use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector};

use super::{normalize, phi, Incidence};

const MAX_NEWTON: usize = 60;

fn dphi(t: f64, alpha: f64) -> f64 {
    if alpha == 1.0 {
        0.0
    } else {
        (alpha - 1.0) * libm::pow(libm::fabs(t), alpha - 2.0)
    }
}

struct System<'a, 'g> {
    inc: &'a Incidence<'g>,
    alpha: f64,
    support: Vec<usize>,
    pos: Vec<usize>,
}

impl System<'_, '_> {
    fn new<'a, 'g>(inc: &'a Incidence<'g>, alpha: f64, support: Vec<usize>) -> System<'a, 'g> {
        let mut pos = vec![usize::MAX; inc.n];
        for (a, &k) in support.iter().enumerate() {
            pos[k] = a;
        }
        System { inc, alpha, support, pos }
    }

    fn drop_vertices(&mut self, gone: &[usize]) {
        self.support.retain(|k| !gone.contains(k));
        self.pos.iter_mut().for_each(|p| *p = usize::MAX);
        for (a, &k) in self.support.iter().enumerate() {
            self.pos[k] = a;
        }
    }

    fn residual(&self, x: &[f64], lambda: f64, grad: &mut [f64]) -> Vec<f64> {
        self.inc.gradient(x, grad);
        let mut f: Vec<f64> =
            self.support.iter().map(|&k| grad[k] - lambda * phi(x[k], self.alpha)).collect();
        let s: f64 = self.support.iter().map(|&k| libm::pow(libm::fabs(x[k]), self.alpha)).sum();
        f.push(s - 1.0);
        f
    }

    fn jacobian(&self, x: &[f64], lambda: f64) -> DMatrix<f64> {
        let m = self.support.len();
        let mut j = DMatrix::<f64>::zeros(m + 1, m + 1);
        let r = self.inc.r;
        for e in self.inc.g.edges() {
            for a in 0..r {
                let pa = self.pos[e[a]];
                if pa == usize::MAX {
                    continue;
                }
                for b in a + 1..r {
                    let pb = self.pos[e[b]];
                    if pb == usize::MAX {
                        continue;
                    }
                    let mut prod = self.inc.coef;
                    for (c, &v) in e.iter().enumerate() {
                        if c != a && c != b {
                            prod *= x[v];
                        }
                    }
                    j[(pa, pb)] += prod;
                    j[(pb, pa)] += prod;
                }
            }
        }
        for (a, &k) in self.support.iter().enumerate() {
            j[(a, a)] -= lambda * dphi(x[k], self.alpha);
            let p = phi(x[k], self.alpha);
            j[(a, m)] = -p;
            j[(m, a)] = self.alpha * p;
        }
        j
    }
}

fn solve(j: DMatrix<f64>, f: &[f64]) -> Option<Vec<f64>> {
    let rhs = DVector::from_iterator(f.len(), f.iter().map(|v| -v));
    if let Some(d) = j.clone().lu().solve(&rhs) {
        if d.iter().all(|v| v.is_finite()) {
            return Some(d.iter().copied().collect());
        }
    }
    let jt = j.transpose();
    let normal = &jt * &j;
    let b = &jt * &rhs;
    let scale = (0..normal.nrows()).map(|i| normal[(i, i)]).fold(0.0f64, f64::max).max(1e-300);
    let mut mu = 1e-12 * scale;
    for _ in 0..8 {
        let mut a = normal.clone();
        for i in 0..a.nrows() {
            a[(i, i)] += mu;
        }
        if let Some(d) = a.lu().solve(&b) {
            if d.iter().all(|v| v.is_finite()) {
                return Some(d.iter().copied().collect());
            }
        }
        mu *= 100.0;
    }
    None
}

fn sq_norm(f: &[f64]) -> f64 {
    f.iter().map(|v| v * v).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Coordinates {
    Linear,
    Log,
}

/// Refines `x` on the support `{k : |x_k| > threshold * max |x|}`. Returns
/// the refined point, normalized, or `None` if the iteration broke down.
pub(crate) fn polish(
    inc: &Incidence<'_>,
    alpha: f64,
    x0: &[f64],
    threshold: f64,
    signed: bool,
) -> Option<Vec<f64>> {
    let top = x0.iter().fold(0.0f64, |m, v| m.max(libm::fabs(*v)));
    if top == 0.0 {
        return None;
    }
    let support: Vec<usize> =
        (0..inc.n).filter(|&k| libm::fabs(x0[k]) > threshold * top).collect();
    let mut x = vec![0.0; inc.n];
    for &k in &support {
        x[k] = x0[k];
    }
    normalize(&mut x, alpha);
    let coords = if !signed && alpha > 1.0 { Coordinates::Log } else { Coordinates::Linear };
    let mut sys = System::new(inc, alpha, support);
    let mut lambda = inc.value(&x);
    let mut grad = vec![0.0; inc.n];
    let mut f = sys.residual(&x, lambda, &mut grad);
    for _ in 0..MAX_NEWTON {
        let fmax = f.iter().fold(0.0f64, |m, v| m.max(libm::fabs(*v)));
        if fmax <= 1e-15 * libm::fabs(lambda).max(1.0) {
            break;
        }
        let mut j = sys.jacobian(&x, lambda);
        let m = sys.support.len();
        if coords == Coordinates::Log {
            for (b, &k) in sys.support.iter().enumerate() {
                for a in 0..=m {
                    j[(a, b)] *= x[k];
                }
            }
        }
        let d = solve(j, &f)?;
        if coords == Coordinates::Linear && !signed {
            let gone: Vec<usize> = sys
                .support
                .iter()
                .enumerate()
                .filter(|&(a, &k)| x[k] + d[a] <= 0.0)
                .map(|(_, &k)| k)
                .collect();
            if !gone.is_empty() {
                for &k in &gone {
                    x[k] = 0.0;
                }
                sys.drop_vertices(&gone);
                if sys.support.is_empty() {
                    return None;
                }
                normalize(&mut x, alpha);
                lambda = inc.value(&x);
                f = sys.residual(&x, lambda, &mut grad);
                continue;
            }
        }
        let base = sq_norm(&f);
        let mut t = 1.0;
        let mut accepted = false;
        for _ in 0..30 {
            let mut y = x.clone();
            for (a, &k) in sys.support.iter().enumerate() {
                y[k] = match coords {
                    Coordinates::Linear => x[k] + t * d[a],
                    Coordinates::Log => x[k] * libm::exp(t * d[a]),
                };
            }
            let mu = lambda + t * d[m];
            let fy = sys.residual(&y, mu, &mut grad);
            if sq_norm(&fy) < base && fy.iter().all(|v| v.is_finite()) {
                x = y;
                lambda = mu;
                f = fy;
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    if x.iter().any(|v| !v.is_finite()) {
        return None;
    }
    if !signed {
        x.iter_mut().for_each(|v| *v = v.max(0.0));
    }
    if normalize(&mut x, alpha) == 0.0 {
        return None;
    }
    Some(x)
}
