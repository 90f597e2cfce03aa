use hyperlambda_core::hypergraph::{binomial, Hypergraph};
use hyperlambda_core::polyform::{
    alpha_sweep, eval_polyform, lagrangian, lagrangian_oracle, lambda_alpha, lambda_alpha_starts,
    lambda_min_alpha, partial_gradient,
};
use hyperlambda_core::SolverConfig;
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut ChaCha8Rng, r: usize, n: usize, p: f64) -> Hypergraph {
    let all = Hypergraph::complete(r, n).unwrap();
    let edges: Vec<Vec<usize>> = all.edges().filter(|_| rng.random_bool(p)).map(|e| e.to_vec()).collect();
    Hypergraph::from_edges(r, n, edges).unwrap()
}

fn spectral_radius(g: &Hypergraph) -> f64 {
    let n = g.order();
    let mut a = DMatrix::<f64>::zeros(n, n);
    for e in g.edges() {
        a[(e[0], e[1])] = 1.0;
        a[(e[1], e[0])] = 1.0;
    }
    a.symmetric_eigen().eigenvalues.iter().copied().fold(0.0, f64::max)
}

fn smallest_eigenvalue(g: &Hypergraph) -> f64 {
    let n = g.order();
    let mut a = DMatrix::<f64>::zeros(n, n);
    for e in g.edges() {
        a[(e[0], e[1])] = 1.0;
        a[(e[1], e[0])] = 1.0;
    }
    a.symmetric_eigen().eigenvalues.iter().copied().fold(0.0, f64::min)
}

#[test]
fn adjacency_spectral_radius() {
    let cfg = SolverConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let n = rng.random_range(2..=12);
        let p = rng.random_range(0.1..0.9);
        let g = random_graph(&mut rng, 2, n, p);
        let got = lambda_alpha(&g, 2.0, &cfg).unwrap();
        let want = spectral_radius(&g);
        assert!((got.value - want).abs() <= 1e-7 * want.max(1.0), "{g:?}: {} vs {want}", got.value);
    }
}

#[test]
fn smallest_adjacency_eigenvalue() {
    let cfg = SolverConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..20 {
        let n = rng.random_range(2..=8);
        let g = random_graph(&mut rng, 2, n, 0.5);
        let got = lambda_min_alpha(&g, 2.0, &cfg).unwrap().value;
        let want = smallest_eigenvalue(&g);
        assert!((got - want).abs() <= 1e-7, "{g:?}: {got} vs {want}");
    }
}

#[test]
fn size_sandwich_and_strictness() {
    let cfg = SolverConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..40 {
        let r = rng.random_range(2..=3);
        let n = rng.random_range(r..=7);
        let g = random_graph(&mut rng, r, n, 0.5);
        let re = (1..=r).product::<usize>() as f64 * g.size() as f64;
        for alpha in [1.0, 1.5, 2.0, 3.0] {
            let lam = lambda_alpha(&g, alpha, &cfg).unwrap().value;
            let lower = re / (n as f64).powf(r as f64 / alpha);
            let upper = re.powf(1.0 - 1.0 / alpha);
            assert!(lower - 1e-9 <= lam, "{g:?} {alpha}");
            assert!(lam <= upper + 1e-9);
            if g.size() > 0 && alpha > 1.0 {
                assert!(lam < upper);
            }
        }
    }
}

#[test]
fn blow_up_scaling() {
    let cfg = SolverConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..10 {
        let r = rng.random_range(2..=3);
        let n = rng.random_range(r..=5);
        let g = random_graph(&mut rng, r, n, 0.6);
        for alpha in [1.5, 2.0, r as f64] {
            let base = lambda_alpha(&g, alpha, &cfg).unwrap().value;
            let k = 2;
            let b = lambda_alpha(&g.uniform_blow_up(k).unwrap(), alpha, &cfg).unwrap().value;
            let want = (k as f64).powf(r as f64 - r as f64 / alpha) * base;
            assert!((b - want).abs() <= 1e-6 * want.max(1e-300), "{g:?} {alpha}: {b} vs {want}");
        }
    }
}

#[test]
fn lagrangian_dominates_oracle_on_random_graphs() {
    let cfg = SolverConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..15 {
        let r = rng.random_range(2..=3);
        let n = rng.random_range(r..=7);
        let g = random_graph(&mut rng, r, n, 0.5);
        let lam = lagrangian(&g, &cfg).unwrap();
        let mut prev = 0.0;
        for p in [6, 12] {
            let o = lagrangian_oracle(&g, p).unwrap().value();
            assert!(o >= prev - 1e-15);
            assert!(o <= lam.value + 1e-9, "{g:?}: oracle {o} > {}", lam.value);
            prev = o;
        }
    }
}

#[test]
fn gradient_matches_finite_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..100 {
        let r = rng.random_range(2..=4);
        let n = rng.random_range(r..=8);
        let g = random_graph(&mut rng, r, n, 0.5);
        let x: Vec<f64> = (0..n).map(|_| rng.random_range(0.1..1.0)).collect();
        let k = rng.random_range(0..n);
        let h = 1e-5;
        let mut xp = x.clone();
        let mut xm = x.clone();
        xp[k] += h;
        xm[k] -= h;
        let fd = (eval_polyform(&g, &xp).unwrap() - eval_polyform(&g, &xm).unwrap()) / (2.0 * h * r as f64);
        let an = partial_gradient(&g, &x, k).unwrap();
        assert!((fd - an).abs() <= 1e-6 * an.abs().max(1e-3), "{fd} vs {an}");
    }
}

#[test]
fn homogeneity_at_alpha_r() {
    let cfg = SolverConfig::default();
    let g = Hypergraph::from_edges(3, 5, [[0, 1, 2], [1, 2, 3], [2, 3, 4], [0, 3, 4]]).unwrap();
    let res = lambda_alpha(&g, 3.0, &cfg).unwrap();
    let scaled: Vec<f64> = res.witness.entries.iter().map(|v| 7.5 * v).collect();
    let norm3: f64 = scaled.iter().map(|v| v.powi(3)).sum();
    let ratio = eval_polyform(&g, &scaled).unwrap() / norm3;
    assert!((ratio - res.value).abs() <= 1e-10 * res.value);
}

#[test]
fn connected_graphs_have_one_positive_eigenvector() {
    let cfg = SolverConfig::default();
    let graphs = [
        Hypergraph::fano(),
        Hypergraph::path(5).unwrap(),
        Hypergraph::from_edges(3, 5, [[0, 1, 2], [1, 2, 3], [2, 3, 4]]).unwrap(),
    ];
    for g in graphs {
        assert!(g.is_connected());
        let r = g.uniformity() as f64;
        let runs = lambda_alpha_starts(&g, r, &cfg).unwrap();
        let conv: Vec<_> = runs.iter().filter(|s| s.converged).collect();
        assert!(!conv.is_empty());
        for s in &conv {
            for (a, b) in s.witness.entries.iter().zip(&conv[0].witness.entries) {
                assert!((a - b).abs() <= 1e-6, "{g:?}");
            }
            assert!(s.witness.entries.iter().all(|&v| v > 0.0));
        }
    }
}

#[test]
fn perturbation_bound() {
    let cfg = SolverConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..10 {
        let r = rng.random_range(2..=3);
        let n = rng.random_range(r + 1..=7);
        let g1 = random_graph(&mut rng, r, n, 0.5);
        let k = rng.random_range(1..=3).min(binomial(n, r) as usize);
        let all = Hypergraph::complete(r, n).unwrap();
        let mut toggles: Vec<Vec<usize>> = Vec::new();
        while toggles.len() < k {
            let e = all.edge(rng.random_range(0..all.size())).to_vec();
            if !toggles.contains(&e) {
                toggles.push(e);
            }
        }
        let g2 = g1.toggle_edges(&toggles).unwrap();
        for alpha in [1.5, 2.0, 3.0] {
            let a = lambda_alpha(&g1, alpha, &cfg).unwrap().value;
            let b = lambda_alpha(&g2, alpha, &cfg).unwrap().value;
            let rf = (1..=r).product::<usize>() as f64;
            assert!((a - b).abs() <= (rf * k as f64).powf(1.0 - 1.0 / alpha) + 1e-8);
        }
    }
}

#[test]
fn sweep_monotonicity_on_random_graphs() {
    let cfg = SolverConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    let alphas = [1.0, 1.25, 1.5, 2.0, 3.0, 8.0, 64.0];
    for _ in 0..8 {
        let r = rng.random_range(2..=3);
        let n = rng.random_range(r..=7);
        let g = random_graph(&mut rng, r, n, 0.5);
        let rows = alpha_sweep(&g, &alphas, &cfg).unwrap();
        for w in rows.windows(2) {
            assert!(w[1].lambda >= w[0].lambda - 1e-8, "{g:?}");
            assert!(w[1].h <= w[0].h + 1e-8 * w[0].h.max(1.0), "{g:?}");
            if let (Some(a), Some(b)) = (w[0].f, w[1].f) {
                assert!(b <= a + 1e-8, "{g:?}");
            }
        }
    }
}
