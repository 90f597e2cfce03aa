//! The Lagrangian (`alpha = 1`) and its exact composition oracle.
//!
//! For integer weights `k` with `sum k_i = p`, `P_G(k / p) = r! e(G(k)) / p^r`
//! where `G(k)` is the blow-up, so maximizing over compositions of `p` gives
//! an exact rational lower bound on the Lagrangian.

use alloc::vec;
use alloc::vec::Vec;

use super::ascent::{run_starts, select, trivial_result, Ascent, Candidate};
use super::{Incidence, SolverConfig, SpectralResult};
use crate::error::{invalid, limit, Result};
use crate::hypergraph::{binomial, Hypergraph};

/// Default cap on the number of compositions the oracle may visit.
pub const DEFAULT_ORACLE_CAP: u64 = 50_000_000;

/// Vertex sets up to this order are cross-checked against the oracle.
const ORACLE_ORDER_LIMIT: usize = 12;

/// `numerator / denominator = r! * max_k sum_e prod k_i / p^r`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct OracleValue {
    pub p: usize,
    pub numerator: u128,
    pub denominator: u128,
    /// A maximizing composition of `p` (zero on isolated vertices).
    pub weights: Vec<usize>,
}

impl OracleValue {
    pub fn value(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

fn compositions(parts: usize, p: usize) -> u64 {
    if parts == 0 {
        return u64::from(p == 0);
    }
    binomial(p + parts - 1, parts - 1)
}

struct Search {
    /// Edges grouped by the level of their last vertex, as level tuples.
    closing: Vec<Vec<Vec<usize>>>,
    k: Vec<u128>,
    best: u128,
    best_k: Vec<u128>,
}

impl Search {
    fn gain(&self, level: usize) -> u128 {
        self.closing[level].iter().map(|e| e.iter().map(|&l| self.k[l]).product::<u128>()).sum()
    }

    fn descend(&mut self, level: usize, left: usize, acc: u128) {
        let last = self.k.len() - 1;
        if level == last {
            self.k[level] = left as u128;
            let total = acc + self.gain(level);
            if total > self.best {
                self.best = total;
                self.best_k.clone_from(&self.k);
            }
            return;
        }
        for v in 0..=left {
            self.k[level] = v as u128;
            let gain = self.gain(level);
            self.descend(level + 1, left - v, acc + gain);
        }
    }
}

/// Exhaustive search over compositions of `p`, refusing more than `cap`
/// compositions.
pub fn lagrangian_oracle_with_cap(g: &Hypergraph, p: usize, cap: u64) -> Result<OracleValue> {
    if p == 0 {
        return Err(invalid!("oracle denominator must be at least 1"));
    }
    let r = g.uniformity();
    let denominator = (p as u128)
        .checked_pow(r as u32)
        .ok_or_else(|| limit!("p^r overflows for p = {p}, r = {r}"))?;
    let deg = g.degree_profile().degrees;
    let active: Vec<usize> = (0..g.order()).filter(|&v| deg[v] > 0).collect();
    let mut weights = vec![0usize; g.order()];
    if active.is_empty() {
        if let Some(w) = weights.first_mut() {
            *w = p;
        }
        return Ok(OracleValue { p, numerator: 0, denominator, weights });
    }
    let count = compositions(active.len(), p);
    if count > cap {
        return Err(limit!(
            "{count} compositions of {p} over {} vertices exceed the cap {cap}",
            active.len()
        ));
    }
    let mut level = vec![usize::MAX; g.order()];
    for (l, &v) in active.iter().enumerate() {
        level[v] = l;
    }
    let mut closing = vec![Vec::new(); active.len()];
    for e in g.edges() {
        let t: Vec<usize> = e.iter().map(|&v| level[v]).collect();
        let last = *t.iter().max().expect("edges are non-empty");
        closing[last].push(t);
    }
    let mut s = Search { closing, k: vec![0; active.len()], best: 0, best_k: vec![0; active.len()] };
    s.best_k[0] = p as u128;
    s.descend(0, p, 0);
    for (l, &v) in active.iter().enumerate() {
        weights[v] = s.best_k[l] as usize;
    }
    let fact: u128 = (1..=r as u128).product();
    Ok(OracleValue { p, numerator: fact * s.best, denominator, weights })
}

/// `max over compositions k of p of r! e(G(k)) / p^r`, with the default cap.
pub fn lagrangian_oracle(g: &Hypergraph, p: usize) -> Result<OracleValue> {
    lagrangian_oracle_with_cap(g, p, DEFAULT_ORACLE_CAP)
}

/// Largest `p` whose composition count fits the budget.
fn oracle_denominator(g: &Hypergraph, budget: u64) -> Option<usize> {
    let active = g.degree_profile().degrees.iter().filter(|&&d| d > 0).count();
    (1..=256).take_while(|&p| compositions(active, p) <= budget).last()
}

pub(crate) fn lagrangian_seeded(
    g: &Hypergraph,
    cfg: &SolverConfig,
    seeds: &[Vec<f64>],
) -> Result<SpectralResult> {
    cfg.validate()?;
    if g.size() == 0 {
        return Ok(trivial_result(g, 1.0));
    }
    let mut cands: Vec<Candidate> = run_starts(g, 1.0, cfg, seeds);
    let mut i = select(&cands, 1.0);
    if g.order() <= ORACLE_ORDER_LIMIT && cfg.oracle_budget > 0 {
        if let Some(p) = oracle_denominator(g, cfg.oracle_budget) {
            let o = lagrangian_oracle_with_cap(g, p, cfg.oracle_budget)?;
            if o.value() > cands[i].value + 1e-12 * cands[i].value.max(1.0) {
                let inc = Incidence::new(g);
                let ascent = Ascent { inc: &inc, alpha: 1.0, cfg, sense: 1.0, signed: false };
                let x: Vec<f64> = o.weights.iter().map(|&w| w as f64).collect();
                cands.push(ascent.run(&x));
                i = select(&cands, 1.0);
            }
        }
    }
    let total = cands.len();
    Ok(cands.swap_remove(i).into_result(1.0, total))
}

/// Maximum of `P_G` over the standard simplex.
pub fn lagrangian(g: &Hypergraph, cfg: &SolverConfig) -> Result<SpectralResult> {
    lagrangian_seeded(g, cfg, &[])
}
