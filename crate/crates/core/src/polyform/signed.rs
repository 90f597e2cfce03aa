//! Smallest value of `P_G` on the signed `l^alpha` sphere.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ascent::{check_alpha, default_starts, select, trivial_result, Ascent, Candidate};
use super::{lambda_alpha, Incidence, SolverConfig, SpectralResult, WeightVector};
use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::par;

fn signed_descent(g: &Hypergraph, alpha: f64, cfg: &SolverConfig) -> Vec<Candidate> {
    let inc = Incidence::new(g);
    let descent = Ascent { inc: &inc, alpha, cfg, sense: -1.0, signed: true };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed ^ 0x9e37_79b9_7f4a_7c15);
    let starts: Vec<Vec<f64>> = default_starts(g, cfg)
        .into_iter()
        .map(|s| s.into_iter().map(|v| if rng.random_bool(0.5) { -v } else { v }).collect())
        .collect();
    par::map(&starts, |s| descent.run(s))
}

/// `min P_G(x)` over `sum |x_i|^alpha = 1`.
///
/// For odd `r` this is `-lambda_alpha(G)` since `P_G(-x) = -P_G(x)`; the
/// negated maximizer is compared with a direct signed descent and the smaller
/// value is returned. For even `r` only the signed descent is available.
pub fn lambda_min_alpha(g: &Hypergraph, alpha: f64, cfg: &SolverConfig) -> Result<SpectralResult> {
    check_alpha(alpha)?;
    cfg.validate()?;
    if g.size() == 0 {
        return Ok(trivial_result(g, alpha));
    }
    let mut cands = signed_descent(g, alpha, cfg);
    let mut used = cands.len();
    if g.uniformity() % 2 == 1 {
        let max = lambda_alpha(g, alpha, cfg)?;
        used += max.starts_used;
        cands.push(Candidate {
            x: max.witness.entries.iter().map(|v| -v).collect(),
            value: -max.value,
            residual: max.residual,
            iterations: max.iterations,
            converged: max.converged,
        });
    }
    let i = select(&cands, -1.0);
    let best = cands.swap_remove(i);
    Ok(SpectralResult {
        value: best.value,
        witness: WeightVector { entries: best.x, alpha },
        residual: best.residual,
        iterations: best.iterations,
        converged: best.converged,
        starts_used: used,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_has_eigenvalue_minus_one() {
        let g = Hypergraph::complete(2, 2).unwrap();
        let res = lambda_min_alpha(&g, 2.0, &SolverConfig::default()).unwrap();
        assert!((res.value + 1.0).abs() < 1e-10, "{}", res.value);
        assert!(res.converged);
    }

    #[test]
    fn odd_uniformity_is_negated_maximum() {
        let cfg = SolverConfig::default();
        let g = Hypergraph::from_edges(3, 5, [[0, 1, 2], [0, 3, 4], [1, 2, 3]]).unwrap();
        for alpha in [1.5, 3.0] {
            let lo = lambda_min_alpha(&g, alpha, &cfg).unwrap().value;
            let hi = lambda_alpha(&g, alpha, &cfg).unwrap().value;
            assert!((lo + hi).abs() < 1e-9 * hi);
        }
    }

    #[test]
    fn empty_and_invalid() {
        let cfg = SolverConfig::default();
        let e = Hypergraph::empty(2, 3).unwrap();
        assert_eq!(lambda_min_alpha(&e, 2.0, &cfg).unwrap().value, 0.0);
        assert!(lambda_min_alpha(&e, 0.9, &cfg).is_err());
    }

    #[test]
    fn cycle_smallest_eigenvalue() {
        // C_5: 2 cos(4 pi / 5)
        let g = Hypergraph::cycle(5).unwrap();
        let res = lambda_min_alpha(&g, 2.0, &SolverConfig::default()).unwrap();
        let want = 2.0 * libm::cos(4.0 * core::f64::consts::PI / 5.0);
        assert!((res.value - want).abs() < 1e-9, "{}", res.value);
    }
}
