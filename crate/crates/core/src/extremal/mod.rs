//! Exhaustive small-order extremal problems: `ex(P, n)`, `lambda_alpha(P, n)`
//! and the normalized sequences built from them.
//!
//! For a hereditary property `P` and its members `P_n` on `n` vertices,
//! `ex(P, n) = max e(G)` and `lambda_alpha(P, n) = max lambda_alpha(G)` over
//! `G` in `P_n`. The density `ex(P, n) / C(n, r)` is nonincreasing in `n`,
//! and so is `lambda_1(P, n)` nondecreasing; both are checked exactly on
//! every range computed here.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use crate::error::{invalid, Error, Result};
use crate::hypergraph::{binomial, chromatic_number, factorial, Hypergraph};
use crate::par;
use crate::polyform::{lambda_alpha, SolverConfig, SpectralResult};
use crate::property::PropertySpec;

mod canon;
mod enumerate;

pub use canon::{canonical_form, lex_min_form, CANON_ORDER_LIMIT, LEX_MIN_ORDER_LIMIT};
pub use enumerate::{enumerate_graphs, LABELED_EDGE_LIMIT};

use enumerate::{source, Catalog, Source};

/// Values within this relative distance count as ties.
const TIE: f64 = 1e-12;

/// Pruning keeps every graph whose upper bound is within this relative
/// distance of the incumbent.
const PRUNE_MARGIN: f64 = 1e-9;

/// Tolerance for the floating-point monotonicity checks.
pub const SEQUENCE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Reduction {
    Off,
    On,
    /// On at the cap, or once there are more than `2^10` labeled graphs.
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum EnumerationMode {
    Exhaustive,
    /// `samples` random labeled graphs, each filtered; values are then only
    /// lower bounds.
    Sampled { samples: usize },
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EnumerationConfig {
    /// `(r, largest n)` pairs; uniformities not listed get `r + 2`.
    pub n_caps: Vec<(usize, usize)>,
    pub canonical_reduction: Reduction,
    /// `None` uses the ambient pool.
    pub worker_count: Option<usize>,
    pub rng_seed: u64,
    pub mode: EnumerationMode,
    pub solver: SolverConfig,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        Self {
            n_caps: vec![(2, 8), (3, 6)],
            canonical_reduction: Reduction::Auto,
            worker_count: None,
            rng_seed: 0x5eed,
            mode: EnumerationMode::Exhaustive,
            solver: SolverConfig::default(),
        }
    }
}

impl EnumerationConfig {
    pub fn n_cap(&self, r: usize) -> usize {
        self.n_caps.iter().find(|c| c.0 == r).map_or(r + 2, |c| c.1)
    }

    pub fn uses_reduction(&self, r: usize, n: usize) -> bool {
        match self.canonical_reduction {
            Reduction::Off => false,
            Reduction::On => true,
            Reduction::Auto => n >= self.n_cap(r) || binomial(n, r) > 10,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.solver.validate()?;
        if let EnumerationMode::Sampled { samples: 0 } = self.mode {
            return Err(invalid!("sampled mode needs at least one sample"));
        }
        if self.worker_count == Some(0) {
            return Err(invalid!("worker count must be at least 1"));
        }
        Ok(())
    }

    fn canonical(&self, r: usize, n: usize) -> bool {
        self.mode == EnumerationMode::Exhaustive && self.uses_reduction(r, n)
    }
}

/// `ex(P, n)` with the lexicographically least extremal graph.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ExValue {
    pub n: usize,
    pub ex: u64,
    pub witness: Hypergraph,
}

/// `lambda_alpha(P, n)` with a maximizing graph and its solve.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LambdaValue {
    pub n: usize,
    pub alpha: f64,
    pub value: f64,
    pub witness: Hypergraph,
    pub result: SpectralResult,
    pub solved: usize,
    pub pruned: usize,
}

/// The reported labeling of `g` and the permutation producing it.
fn key(g: &Hypergraph, canonical: bool) -> Result<(Hypergraph, Option<Vec<usize>>)> {
    if canonical {
        let perm = canon::lex_min_labeling(g)?;
        Ok((g.relabel(&perm)?, Some(perm)))
    } else {
        Ok((g.clone(), None))
    }
}

fn no_members(spec: &PropertySpec, n: usize) -> Error {
    invalid!("{} has no members on {n} vertices", spec.label())
}

fn ex_from(spec: &PropertySpec, n: usize, src: &Source, canonical: bool) -> Result<ExValue> {
    type Acc = Result<Option<(u64, Hypergraph)>>;
    let offer = |acc: &mut Acc, e: u64, g: &Hypergraph, is_key: bool| {
        let Ok(cur) = acc else { return };
        let better = match cur {
            None => true,
            Some((best, _)) => e >= *best,
        };
        if !better {
            return;
        }
        let k = if is_key { Ok(g.clone()) } else { key(g, canonical).map(|k| k.0) };
        match k {
            Ok(k) => match cur {
                Some((best, w)) if e == *best && *w <= k => {}
                _ => *cur = Some((e, k)),
            },
            Err(err) => *acc = Err(err),
        }
    };
    let parts = src.fold(spec, || Ok(None), |acc: &mut Acc, g| offer(acc, g.size() as u64, g, false));
    let mut total: Acc = Ok(None);
    for p in parts {
        if let Some((e, w)) = p? {
            offer(&mut total, e, &w, true);
        }
    }
    let (ex, witness) = total?.ok_or_else(|| no_members(spec, n))?;
    Ok(ExValue { n, ex, witness })
}

/// `ex(P, n) = max e(G)` over members on `n` vertices.
pub fn ex_value(spec: &PropertySpec, n: usize, cfg: &EnumerationConfig) -> Result<ExValue> {
    cfg.validate()?;
    par::install(cfg.worker_count, || {
        let mut catalog = Catalog::new(spec);
        let src = source(spec, n, cfg, &mut catalog)?;
        ex_from(spec, n, &src, cfg.canonical(spec.r, n))
    })
}

/// A certified upper bound on `lambda_alpha(G)`: the size bound
/// `(r! e)^(1-1/alpha)` tightened by the chromatic factor
/// `(1 - chi^(1-r))^(1/alpha)`.
pub fn certified_upper_bound(g: &Hypergraph, alpha: f64) -> f64 {
    if g.size() == 0 {
        return 0.0;
    }
    let r = g.uniformity();
    let base = libm::pow(factorial(r) * g.size() as f64, 1.0 - 1.0 / alpha);
    match chromatic_number(g) {
        Ok(chi) => base * libm::pow(1.0 - libm::pow(chi as f64, 1.0 - r as f64), 1.0 / alpha),
        Err(_) => base,
    }
}

struct Best {
    value: f64,
    key: Hypergraph,
    result: SpectralResult,
}

fn permute_witness(mut res: SpectralResult, perm: &[usize]) -> SpectralResult {
    let mut x = vec![0.0; perm.len()];
    for (v, &p) in perm.iter().enumerate() {
        x[p] = res.witness.entries[v];
    }
    res.witness.entries = x;
    res
}

#[derive(Default)]
struct LambdaAcc {
    best: Option<Best>,
    solved: usize,
    pruned: usize,
    error: Option<Error>,
}

impl LambdaAcc {
    /// Whether a graph of value `v` would displace or tie the incumbent.
    fn wants(&self, v: f64) -> bool {
        match &self.best {
            None => true,
            Some(b) => v >= b.value - TIE * b.value.max(1.0),
        }
    }

    fn offer(&mut self, cand: Best) {
        let replace = match &self.best {
            None => true,
            Some(b) => {
                let tie = TIE * b.value.max(1.0);
                cand.value > b.value + tie || (cand.value >= b.value - tie && cand.key < b.key)
            }
        };
        if replace {
            self.best = Some(cand);
        }
    }
}

fn raise(incumbent: &AtomicU64, v: f64) {
    if v > 0.0 {
        incumbent.fetch_max(v.to_bits(), AtomicOrdering::Relaxed);
    }
}

fn lambda_from(
    spec: &PropertySpec,
    n: usize,
    alpha: f64,
    src: &Source,
    canonical: bool,
    solver: &SolverConfig,
) -> Result<LambdaValue> {
    let incumbent = AtomicU64::new(0f64.to_bits());
    let visit = |acc: &mut LambdaAcc, g: &Hypergraph| {
        if acc.error.is_some() {
            return;
        }
        let inc = f64::from_bits(incumbent.load(AtomicOrdering::Relaxed));
        let ub = certified_upper_bound(g, alpha);
        if ub < inc * (1.0 - PRUNE_MARGIN) - 1e-300 {
            acc.pruned += 1;
            return;
        }
        acc.solved += 1;
        let res = match lambda_alpha(g, alpha, solver) {
            Ok(res) => res,
            Err(e) => {
                acc.error = Some(e);
                return;
            }
        };
        raise(&incumbent, res.value);
        if !acc.wants(res.value) {
            return;
        }
        match key(g, canonical) {
            Ok((k, perm)) => {
                let result = match perm {
                    Some(p) => permute_witness(res, &p),
                    None => res,
                };
                acc.offer(Best { value: result.value, key: k, result })
            }
            Err(e) => acc.error = Some(e),
        }
    };
    let parts = match src {
        Source::Listed(list) => {
            // larger size bounds first, so the incumbent rises early
            let mut sorted = list.clone();
            sorted.sort_by(|a, b| b.size().cmp(&a.size()));
            Source::Listed(sorted).fold(spec, LambdaAcc::default, visit)
        }
        labeled => labeled.fold(spec, LambdaAcc::default, visit),
    };
    let mut total = LambdaAcc::default();
    for p in parts {
        if let Some(e) = p.error {
            return Err(e);
        }
        total.solved += p.solved;
        total.pruned += p.pruned;
        if let Some(b) = p.best {
            total.offer(b);
        }
    }
    let best = total.best.ok_or_else(|| no_members(spec, n))?;
    Ok(LambdaValue {
        n,
        alpha,
        value: best.value,
        witness: best.key,
        result: best.result,
        solved: total.solved,
        pruned: total.pruned,
    })
}

/// `lambda_alpha(P, n) = max lambda_alpha(G)` over members on `n` vertices.
///
/// Graphs whose certified upper bound falls below the incumbent are skipped
/// unsolved; they cannot be maximizers.
pub fn lambda_property(
    spec: &PropertySpec,
    n: usize,
    alpha: f64,
    cfg: &EnumerationConfig,
) -> Result<LambdaValue> {
    cfg.validate()?;
    if !(alpha >= 1.0) || !alpha.is_finite() {
        return Err(invalid!("alpha must be a finite real >= 1, got {alpha}"));
    }
    par::install(cfg.worker_count, || {
        let mut catalog = Catalog::new(spec);
        let src = source(spec, n, cfg, &mut catalog)?;
        lambda_from(spec, n, alpha, &src, cfg.canonical(spec.r, n), &cfg.solver)
    })
}

/// One order of a sequence.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SequenceRow {
    pub n: usize,
    pub ex: u64,
    /// `C(n, r)`
    pub slots: u64,
    pub ex_density: f64,
    pub lambda_pn: Option<f64>,
    /// `lambda_pn * n^(r/alpha - r)`
    pub kns_ratio: Option<f64>,
    /// `lambda_pn * n^(r/alpha - 1) / ((n-1)(n-2)...(n-r+1))`
    pub th1_ratio: Option<f64>,
    pub converged: Option<bool>,
    pub extremal_witness: Hypergraph,
    pub lambda_witness: Option<Hypergraph>,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SequenceChecks {
    /// `ex / C(n, r)` nonincreasing, compared in exact integers.
    pub density_nonincreasing: bool,
    /// `lambda_1(P, n)` nondecreasing; only checked at `alpha = 1`.
    pub lambda_nondecreasing: Option<bool>,
    /// Reported, never enforced: the limit argument needs `n` large.
    pub th1_nonincreasing: Option<bool>,
    /// `lambda_pn >= r! ex / n^(r/alpha)` on every row.
    pub inled_holds: Option<bool>,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SequenceReport {
    pub property: PropertySpec,
    pub alpha: Option<f64>,
    pub rows: Vec<SequenceRow>,
    pub checks: SequenceChecks,
}

impl SequenceReport {
    /// Names of the enforced invariants that failed.
    pub fn hard_violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.checks.density_nonincreasing {
            out.push("density_nonincreasing");
        }
        if self.checks.lambda_nondecreasing == Some(false) {
            out.push("lambda_nondecreasing");
        }
        if self.checks.inled_holds == Some(false) {
            out.push("inled_holds");
        }
        out
    }

    pub fn last_density(&self) -> Option<f64> {
        self.rows.last().map(|r| r.ex_density)
    }

    /// Last first difference of the density column.
    pub fn density_trend(&self) -> Option<f64> {
        let k = self.rows.len();
        (k >= 2).then(|| self.rows[k - 1].ex_density - self.rows[k - 2].ex_density)
    }
}

fn check_orders(spec: &PropertySpec, ns: &[usize]) -> Result<()> {
    if ns.is_empty() {
        return Err(invalid!("empty range of orders"));
    }
    if ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(invalid!("orders must be strictly increasing"));
    }
    if ns[0] < spec.r {
        return Err(invalid!("orders must be at least r = {} for densities to be defined", spec.r));
    }
    Ok(())
}

fn falling(n: usize, k: usize) -> f64 {
    (0..k).map(|i| (n - i) as f64).product()
}

fn build_sequence(
    spec: &PropertySpec,
    ns: &[usize],
    alpha: Option<f64>,
    cfg: &EnumerationConfig,
) -> Result<SequenceReport> {
    cfg.validate()?;
    check_orders(spec, ns)?;
    if let Some(a) = alpha {
        if !(a >= 1.0) || !a.is_finite() {
            return Err(invalid!("alpha must be a finite real >= 1, got {a}"));
        }
    }
    for &n in ns {
        enumerate::check_cap(spec, n, cfg)?;
    }
    let r = spec.r;
    let rf = r as f64;
    let rows = par::install(cfg.worker_count, || -> Result<Vec<SequenceRow>> {
        let mut catalog = Catalog::new(spec);
        let mut rows = Vec::new();
        for &n in ns {
            let src = source(spec, n, cfg, &mut catalog)?;
            let canonical = cfg.canonical(r, n);
            let ex = ex_from(spec, n, &src, canonical)?;
            let lam = match alpha {
                Some(a) => Some(lambda_from(spec, n, a, &src, canonical, &cfg.solver)?),
                None => None,
            };
            let slots = binomial(n, r);
            let nf = n as f64;
            rows.push(SequenceRow {
                n,
                ex: ex.ex,
                slots,
                ex_density: ex.ex as f64 / slots as f64,
                lambda_pn: lam.as_ref().map(|l| l.value),
                kns_ratio: lam.as_ref().map(|l| l.value * libm::pow(nf, rf / l.alpha - rf)),
                th1_ratio: lam
                    .as_ref()
                    .map(|l| l.value * libm::pow(nf, rf / l.alpha - 1.0) / falling(n - 1, r - 1)),
                converged: lam.as_ref().map(|l| l.result.converged),
                extremal_witness: ex.witness,
                lambda_witness: lam.map(|l| l.witness),
            });
        }
        Ok(rows)
    })?;
    let density_nonincreasing = rows
        .windows(2)
        .all(|w| w[0].ex as u128 * w[1].slots as u128 >= w[1].ex as u128 * w[0].slots as u128);
    let tol = |v: f64| SEQUENCE_TOL * v.abs().max(1.0);
    let lambda_nondecreasing = (alpha == Some(1.0)).then(|| {
        rows.windows(2).all(|w| w[1].lambda_pn.unwrap() >= w[0].lambda_pn.unwrap() - tol(w[0].lambda_pn.unwrap()))
    });
    let th1_nonincreasing = alpha.map(|_| {
        rows.windows(2).all(|w| w[1].th1_ratio.unwrap() <= w[0].th1_ratio.unwrap() + tol(w[0].th1_ratio.unwrap()))
    });
    let inled_holds = alpha.map(|a| {
        rows.iter().all(|row| {
            let lower = factorial(r) * row.ex as f64 / libm::pow(row.n as f64, rf / a);
            row.lambda_pn.unwrap() >= lower - 1e-8
        })
    });
    Ok(SequenceReport {
        property: spec.clone(),
        alpha,
        rows,
        checks: SequenceChecks { density_nonincreasing, lambda_nondecreasing, th1_nonincreasing, inled_holds },
    })
}

/// `ex(P, n) / C(n, r)` over `ns`, checked to be nonincreasing.
pub fn kns_sequence(spec: &PropertySpec, ns: &[usize], cfg: &EnumerationConfig) -> Result<SequenceReport> {
    build_sequence(spec, ns, None, cfg)
}

/// `ex` densities plus `lambda_alpha(P, n)` and its normalizations over `ns`.
pub fn theorem1_sequence(
    spec: &PropertySpec,
    ns: &[usize],
    alpha: f64,
    cfg: &EnumerationConfig,
) -> Result<SequenceReport> {
    build_sequence(spec, ns, Some(alpha), cfg)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Flatness {
    /// No order in range separates the Lagrangian from the density.
    ConsistentWithFlat,
    /// Some member has a Lagrangian above a density the limit cannot exceed.
    Gap,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct FlatnessReport {
    pub sequence: SequenceReport,
    pub sup_lagrangian: f64,
    pub sup_witness: Hypergraph,
    pub last_density: f64,
    pub density_trend: Option<f64>,
    pub verdict: Flatness,
    pub label: String,
}

/// Compares `sup_n lambda_1(P, n)` with the last `ex` density in range.
///
/// The density sequence decreases to `pi(P)` and `lambda_1(P, n)` increases
/// to `lambda_1(P)`, so `sup lambda_1 > last density` certifies
/// `lambda_1(P) > pi(P)`. Otherwise nothing is decided.
pub fn flatness_probe(spec: &PropertySpec, ns: &[usize], cfg: &EnumerationConfig) -> Result<FlatnessReport> {
    let sequence = theorem1_sequence(spec, ns, 1.0, cfg)?;
    let (sup_lagrangian, sup_witness) = sequence
        .rows
        .iter()
        .map(|r| (r.lambda_pn.unwrap(), r.lambda_witness.clone().unwrap()))
        .fold(None::<(f64, Hypergraph)>, |acc, (v, w)| match acc {
            Some((b, bw)) if b >= v => Some((b, bw)),
            _ => Some((v, w)),
        })
        .expect("at least one order");
    let last_density = sequence.last_density().expect("at least one order");
    let verdict = if sup_lagrangian > last_density + SEQUENCE_TOL {
        Flatness::Gap
    } else {
        Flatness::ConsistentWithFlat
    };
    let label = match verdict {
        Flatness::Gap => alloc::format!(
            "gap: lambda_1 >= {sup_lagrangian} > {last_density} >= pi on {} vertices",
            sup_witness.order()
        ),
        Flatness::ConsistentWithFlat => alloc::format!("consistent with flat at {last_density}"),
    };
    Ok(FlatnessReport {
        density_trend: sequence.density_trend(),
        sequence,
        sup_lagrangian,
        sup_witness,
        last_density,
        verdict,
        label,
    })
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BlowupRow {
    pub n: usize,
    pub base_ratio: f64,
    pub blowup_ratio: f64,
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BlowupReport {
    pub forbidden: Hypergraph,
    pub blown_up: Hypergraph,
    pub alpha: f64,
    pub rows: Vec<BlowupRow>,
    /// `blowup_ratio - base_ratio` at the last order.
    pub final_gap: f64,
    /// Whether `|gap|` shrinks from the first order to the last.
    pub gap_shrinks: bool,
}

/// `th1_ratio` of `Mon(F)` against `Mon(F(k))` across `ns`. The two limits
/// agree; finite orders only show the trend, so nothing is asserted.
pub fn blowup_invariance_probe(
    f: &Hypergraph,
    k: &[usize],
    alpha: f64,
    ns: &[usize],
    cfg: &EnumerationConfig,
) -> Result<BlowupReport> {
    let blown = f.blow_up(k)?;
    let r = f.uniformity();
    let base = theorem1_sequence(&PropertySpec::monotone(r, vec![f.clone()])?, ns, alpha, cfg)?;
    let other = if blown == *f {
        base.clone()
    } else {
        theorem1_sequence(&PropertySpec::monotone(r, vec![blown.clone()])?, ns, alpha, cfg)?
    };
    let rows: Vec<BlowupRow> = base
        .rows
        .iter()
        .zip(&other.rows)
        .map(|(a, b)| {
            let (x, y) = (a.th1_ratio.unwrap(), b.th1_ratio.unwrap());
            BlowupRow { n: a.n, base_ratio: x, blowup_ratio: y, gap: y - x }
        })
        .collect();
    let final_gap = rows.last().map_or(0.0, |r| r.gap);
    let gap_shrinks = rows.first().is_some_and(|f| libm::fabs(final_gap) <= libm::fabs(f.gap));
    Ok(BlowupReport { forbidden: f.clone(), blown_up: blown, alpha, rows, final_gap, gap_shrinks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(r: usize, n: usize) -> Hypergraph {
        Hypergraph::complete(r, n).unwrap()
    }

    fn labeled() -> EnumerationConfig {
        EnumerationConfig { canonical_reduction: Reduction::Off, ..Default::default() }
    }

    fn canonical() -> EnumerationConfig {
        EnumerationConfig { canonical_reduction: Reduction::On, ..Default::default() }
    }

    fn all(r: usize) -> PropertySpec {
        PropertySpec::monotone(r, vec![]).unwrap()
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(enumerate_graphs(3, 4, &all(3), &labeled()).unwrap().len(), 16);
        assert_eq!(enumerate_graphs(2, 5, &all(2), &labeled()).unwrap().len(), 1 << 10);
        let tf = PropertySpec::monotone(2, vec![k(2, 3)]).unwrap();
        assert_eq!(enumerate_graphs(2, 3, &tf, &labeled()).unwrap().len(), 7);
        assert!(enumerate_graphs(3, 4, &tf, &labeled()).is_err());
    }

    #[test]
    fn isomorphism_class_counts() {
        // graphs on 1..=6 vertices, and 3-graphs on 5 vertices
        let want = [1, 2, 4, 11, 34, 156];
        for (n, &w) in (1..=6).zip(&want) {
            assert_eq!(enumerate_graphs(2, n, &all(2), &canonical()).unwrap().len(), w, "n = {n}");
        }
        assert_eq!(enumerate_graphs(3, 5, &all(3), &canonical()).unwrap().len(), 34);
        let tf = PropertySpec::monotone(2, vec![k(2, 3)]).unwrap();
        // triangle-free graphs on 5 vertices
        assert_eq!(enumerate_graphs(2, 5, &tf, &canonical()).unwrap().len(), 14);
    }

    #[test]
    fn caps_are_enforced() {
        let cfg = EnumerationConfig::default();
        let e = ex_value(&all(2), 9, &cfg).unwrap_err();
        assert!(matches!(e, Error::ResourceLimit(_)));
        let sampled = EnumerationConfig { mode: EnumerationMode::Sampled { samples: 50 }, ..Default::default() };
        let tf = PropertySpec::monotone(2, vec![k(2, 3)]).unwrap();
        let ex = ex_value(&tf, 9, &sampled).unwrap();
        assert!(ex.ex <= 20);
    }

    #[test]
    fn ex_examples() {
        let cfg = EnumerationConfig::default();
        let tf = PropertySpec::monotone(2, vec![k(2, 3)]).unwrap();
        let ex = ex_value(&tf, 5, &cfg).unwrap();
        assert_eq!(ex.ex, 6);
        assert_eq!(ex.witness, lex_min_form(&Hypergraph::complete_multipartite(&[2, 3]).unwrap()).unwrap());
        let k43 = PropertySpec::monotone(3, vec![k(3, 4)]).unwrap();
        assert_eq!(ex_value(&k43, 4, &cfg).unwrap().ex, 3);
        let her = PropertySpec::hereditary(2, vec![Hypergraph::cycle(4).unwrap()]).unwrap();
        let ex = ex_value(&her, 4, &cfg).unwrap();
        assert_eq!((ex.ex, ex.witness), (6, k(2, 4)));
    }

    #[test]
    fn lambda_examples() {
        let cfg = EnumerationConfig::default();
        let tf = PropertySpec::monotone(2, vec![k(2, 3)]).unwrap();
        let l = lambda_property(&tf, 4, 2.0, &cfg).unwrap();
        assert!((l.value - 2.0).abs() < 1e-9);
        assert_eq!(l.witness.size(), 4);
        for n in 2..6 {
            assert!((lambda_property(&tf, n, 1.0, &cfg).unwrap().value - 0.5).abs() < 1e-9);
        }
        let l = lambda_property(&tf, 1, 2.0, &cfg).unwrap();
        assert_eq!(l.value, 0.0);
    }

    #[test]
    fn witness_vector_matches_reported_labeling() {
        let tf = PropertySpec::monotone(2, vec![k(2, 3)]).unwrap();
        let l = lambda_property(&tf, 5, 2.0, &canonical()).unwrap();
        let p = crate::polyform::eval_polyform(&l.witness, &l.result.witness.entries).unwrap();
        assert!((p - l.value).abs() < 1e-10 * l.value);
    }

    #[test]
    fn reduction_is_sound() {
        let props = [
            PropertySpec::monotone(2, vec![k(2, 3)]).unwrap(),
            PropertySpec::hereditary(2, vec![Hypergraph::cycle(4).unwrap()]).unwrap(),
            PropertySpec::chromatic(2, 2).unwrap(),
            PropertySpec::monotone(3, vec![k(3, 4)]).unwrap(),
        ];
        for p in &props {
            for n in p.r..=5 {
                let a = ex_value(p, n, &labeled()).unwrap();
                let b = ex_value(p, n, &canonical()).unwrap();
                assert_eq!(a, b, "{} n = {n}", p.label());
                for alpha in [1.0, 2.0] {
                    let a = lambda_property(p, n, alpha, &labeled()).unwrap();
                    let b = lambda_property(p, n, alpha, &canonical()).unwrap();
                    assert!((a.value - b.value).abs() < 1e-9, "{} n = {n}", p.label());
                    assert_eq!(a.witness, b.witness);
                }
            }
        }
    }

    #[test]
    fn mantel_densities() {
        let tf = PropertySpec::monotone(2, vec![k(2, 3)]).unwrap();
        let rep = kns_sequence(&tf, &[3, 4, 5, 6, 7], &EnumerationConfig::default()).unwrap();
        for row in &rep.rows {
            assert_eq!(row.ex, (row.n * row.n / 4) as u64);
        }
        assert!(rep.checks.density_nonincreasing);
        assert!(rep.hard_violations().is_empty());
        let rep = kns_sequence(&all(3), &[3, 4, 5], &EnumerationConfig::default()).unwrap();
        assert!(rep.rows.iter().all(|r| r.ex_density == 1.0));
        assert!(kns_sequence(&tf, &[1, 2], &EnumerationConfig::default()).is_err());
    }

    #[test]
    fn theorem1_ratios() {
        let cfg = EnumerationConfig::default();
        let tf = PropertySpec::monotone(2, vec![k(2, 3)]).unwrap();
        let rep = theorem1_sequence(&tf, &[4, 5], 2.0, &cfg).unwrap();
        assert!((rep.rows[0].th1_ratio.unwrap() - 2.0 / 3.0).abs() < 1e-9);
        assert!((rep.rows[1].th1_ratio.unwrap() - libm::sqrt(6.0) / 4.0).abs() < 1e-9);
        assert_eq!(rep.checks.th1_nonincreasing, Some(true));
        let rep = theorem1_sequence(&all(3), &[3, 4, 5], 3.0, &cfg).unwrap();
        assert!(rep.rows.iter().all(|r| (r.th1_ratio.unwrap() - 1.0).abs() < 1e-9));
        let rep = theorem1_sequence(&tf, &[3, 4, 5], 1.0, &cfg).unwrap();
        assert_eq!(rep.checks.lambda_nondecreasing, Some(true));
    }

    #[test]
    fn flatness_examples() {
        let cfg = EnumerationConfig::default();
        let f = k(2, 3).blow_up(&[1, 2, 2]).unwrap();
        let rep = flatness_probe(&PropertySpec::monotone(2, vec![f]).unwrap(), &[4, 5, 6], &cfg).unwrap();
        assert_eq!(rep.verdict, Flatness::Gap);
        assert!((rep.sup_lagrangian - 0.75).abs() < 1e-9);
        assert!(rep.sup_witness.induced(&[0, 1, 2, 3]).unwrap().size() >= 6 || rep.sup_witness.order() >= 4);
        let tf = PropertySpec::monotone(2, vec![k(2, 3)]).unwrap();
        assert_eq!(flatness_probe(&tf, &[4, 5, 6], &cfg).unwrap().verdict, Flatness::ConsistentWithFlat);
        let her = PropertySpec::hereditary(2, vec![Hypergraph::cycle(4).unwrap()]).unwrap();
        let rep = flatness_probe(&her, &[4, 5], &cfg).unwrap();
        assert_eq!(rep.verdict, Flatness::ConsistentWithFlat);
        assert_eq!(rep.last_density, 1.0);
    }

    #[test]
    fn blowup_probe_examples() {
        let cfg = EnumerationConfig::default();
        let rep = blowup_invariance_probe(&k(2, 3), &[1, 1, 1], 2.0, &[3, 4, 5], &cfg).unwrap();
        assert!(rep.rows.iter().all(|r| r.gap == 0.0));
        let rep = blowup_invariance_probe(&k(3, 3), &[2, 2, 2], 3.0, &[3, 4], &cfg).unwrap();
        assert!(rep.rows.iter().all(|r| r.base_ratio == 0.0));
    }
}
