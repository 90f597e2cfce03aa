//! Enumeration of the members of a hereditary property on `n` vertices.
//!
//! Labeled mode walks every edge mask in order. Canonical mode grows
//! isomorphism classes one vertex at a time: deleting the last vertex of a
//! member leaves a member, so extending every class on `n - 1` vertices by
//! every possible link of a new vertex reaches every class on `n` vertices.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::canon::canonical_form;
use super::{EnumerationConfig, EnumerationMode};
use crate::error::{invalid, limit, Result};
use crate::hypergraph::{all_subsets, binomial, Hypergraph};
use crate::par;
use crate::property::PropertySpec;

/// Labeled enumeration refuses more than `2^LABELED_EDGE_LIMIT` masks.
pub const LABELED_EDGE_LIMIT: usize = 24;

const CHUNKS: u64 = 256;

pub(crate) enum Source {
    Labeled { r: usize, n: usize, subsets: Vec<usize>, slots: usize },
    Listed(Vec<Hypergraph>),
}

impl Source {
    /// Folds every member into per-chunk accumulators, in a fixed chunk
    /// order.
    pub(crate) fn fold<A, I, F>(&self, spec: &PropertySpec, init: I, f: F) -> Vec<A>
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        F: Fn(&mut A, &Hypergraph) + Sync + Send,
    {
        match self {
            Source::Labeled { r, n, subsets, slots } => {
                let total = 1u64 << slots;
                let step = total.div_ceil(CHUNKS).max(1);
                let ranges: Vec<(u64, u64)> =
                    (0..total).step_by(step as usize).map(|lo| (lo, (lo + step).min(total))).collect();
                par::map(&ranges, |&(lo, hi)| {
                    let mut acc = init();
                    for mask in lo..hi {
                        let g = from_mask(*r, *n, subsets, mask);
                        if matches!(spec.admits(&g), Ok(true)) {
                            f(&mut acc, &g);
                        }
                    }
                    acc
                })
            }
            Source::Listed(list) => {
                let step = (list.len() as u64).div_ceil(CHUNKS).max(1) as usize;
                let chunks: Vec<&[Hypergraph]> = list.chunks(step).collect();
                par::map(&chunks, |chunk| {
                    let mut acc = init();
                    for g in *chunk {
                        f(&mut acc, g);
                    }
                    acc
                })
            }
        }
    }
}

fn from_mask(r: usize, n: usize, subsets: &[usize], mask: u64) -> Hypergraph {
    let mut flat = Vec::new();
    for (i, s) in subsets.chunks_exact(r).enumerate() {
        if mask >> i & 1 == 1 {
            flat.extend_from_slice(s);
        }
    }
    Hypergraph::from_sorted_flat(r, n, flat)
}

/// Isomorphism classes of members, level by level.
pub(crate) struct Catalog<'a> {
    spec: &'a PropertySpec,
    levels: Vec<Vec<Hypergraph>>,
}

impl<'a> Catalog<'a> {
    pub(crate) fn new(spec: &'a PropertySpec) -> Self {
        Catalog { spec, levels: Vec::new() }
    }

    pub(crate) fn level(&mut self, n: usize) -> Result<&[Hypergraph]> {
        let r = self.spec.r;
        if self.levels.is_empty() {
            let e = Hypergraph::empty(r, 0)?;
            let base = if self.spec.admits(&e)? { alloc::vec![e] } else { Vec::new() };
            self.levels.push(base);
        }
        while self.levels.len() <= n {
            let k = self.levels.len();
            let prev = &self.levels[k - 1];
            let links = all_subsets(r - 1, k - 1);
            let slots = links.len() / (r - 1);
            let spec = self.spec;
            let parts: Vec<Result<Vec<Hypergraph>>> = par::map(prev, |h| {
                let mut out = Vec::new();
                for mask in 0..1u64 << slots {
                    let mut edges: Vec<Vec<usize>> = h.edges().map(|e| e.to_vec()).collect();
                    for (i, s) in links.chunks_exact(r - 1).enumerate() {
                        if mask >> i & 1 == 1 {
                            let mut e = s.to_vec();
                            e.push(k - 1);
                            edges.push(e);
                        }
                    }
                    let g = Hypergraph::from_edges(r, k, edges)?;
                    if spec.admits(&g)? {
                        out.push(canonical_form(&g)?);
                    }
                }
                Ok(out)
            });
            let mut set = BTreeSet::new();
            for p in parts {
                set.extend(p?);
            }
            self.levels.push(set.into_iter().collect());
        }
        Ok(&self.levels[n])
    }
}

pub(crate) fn check_cap(spec: &PropertySpec, n: usize, cfg: &EnumerationConfig) -> Result<()> {
    if let EnumerationMode::Exhaustive = cfg.mode {
        let cap = cfg.n_cap(spec.r);
        if n > cap {
            return Err(limit!("n = {n} exceeds the exhaustive cap {cap} for r = {}", spec.r));
        }
    }
    Ok(())
}

fn sampled(spec: &PropertySpec, n: usize, samples: usize, seed: u64) -> Result<Vec<Hypergraph>> {
    let r = spec.r;
    let subsets = all_subsets(r, n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x2545_f491_4f6c_dd1d));
    let mut out = Vec::new();
    for _ in 0..samples {
        let p: f64 = rng.random();
        let mut flat = Vec::new();
        for s in subsets.chunks_exact(r) {
            if rng.random_bool(p) {
                flat.extend_from_slice(s);
            }
        }
        let g = Hypergraph::from_sorted_flat(r, n, flat);
        if spec.admits(&g)? {
            out.push(g);
        }
    }
    Ok(out)
}

/// The source for order `n`, reusing `catalog` for canonical mode.
pub(crate) fn source(
    spec: &PropertySpec,
    n: usize,
    cfg: &EnumerationConfig,
    catalog: &mut Catalog<'_>,
) -> Result<Source> {
    check_cap(spec, n, cfg)?;
    let r = spec.r;
    if let EnumerationMode::Sampled { samples } = cfg.mode {
        return Ok(Source::Listed(sampled(spec, n, samples, cfg.rng_seed)?));
    }
    if cfg.uses_reduction(r, n) {
        return Ok(Source::Listed(catalog.level(n)?.to_vec()));
    }
    let slots = binomial(n, r) as usize;
    if slots > LABELED_EDGE_LIMIT {
        return Err(limit!(
            "labeled enumeration of {slots} edge slots exceeds 2^{LABELED_EDGE_LIMIT} graphs; enable canonical reduction"
        ));
    }
    Ok(Source::Labeled { r, n, subsets: all_subsets(r, n), slots })
}

/// Every member of `filter` on `n` vertices: all labeled graphs, or one
/// canonical representative per isomorphism class when reduction is on.
/// Labeled output is in increasing edge-mask order, canonical output in
/// increasing [`Hypergraph`] order.
pub fn enumerate_graphs(
    r: usize,
    n: usize,
    filter: &PropertySpec,
    cfg: &EnumerationConfig,
) -> Result<Vec<Hypergraph>> {
    if r != filter.r {
        return Err(invalid!("property is {}-uniform, asked for r = {r}", filter.r));
    }
    cfg.validate()?;
    par::install(cfg.worker_count, || {
        let mut catalog = Catalog::new(filter);
        match source(filter, n, cfg, &mut catalog)? {
            Source::Listed(list) => Ok(list),
            labeled => Ok(labeled
                .fold(filter, Vec::new, |acc: &mut Vec<Hypergraph>, g| acc.push(g.clone()))
                .into_iter()
                .flatten()
                .collect()),
        }
    })
}
