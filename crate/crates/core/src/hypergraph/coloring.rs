//! Exact colouring numbers and clique number for small graphs.

use alloc::vec;
use alloc::vec::Vec;

use super::Hypergraph;
use crate::error::{invalid, limit, Result};

/// Largest order accepted by the exact searches.
pub const DEFAULT_EXACT_CAP: usize = 16;

struct Colouring<'a> {
    g: &'a Hypergraph,
    order: Vec<usize>,
    /// For each step, the edges whose last-coloured vertex is this step.
    closing: Vec<Vec<usize>>,
    colour: Vec<usize>,
    best: usize,
}

impl Colouring<'_> {
    fn new(g: &Hypergraph) -> Colouring<'_> {
        let deg = g.degree_profile().degrees;
        let mut order: Vec<usize> = (0..g.order()).collect();
        order.sort_by(|&a, &b| deg[b].cmp(&deg[a]).then(a.cmp(&b)));
        let mut pos = vec![0; g.order()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut closing = vec![Vec::new(); g.order()];
        for (i, e) in g.edges().enumerate() {
            let last = e.iter().map(|&v| pos[v]).max().expect("edges are non-empty");
            closing[last].push(i);
        }
        Colouring { g, order, closing, colour: vec![usize::MAX; g.order()], best: usize::MAX }
    }

    fn conflict(&self, step: usize) -> bool {
        let v = self.order[step];
        let c = self.colour[v];
        self.closing[step]
            .iter()
            .any(|&ei| self.g.edge(ei).iter().all(|&u| self.colour[u] == c))
    }

    /// Greedy first-fit in search order; an upper bound for the search.
    fn greedy(&mut self) -> usize {
        let mut used = 0;
        for step in 0..self.order.len() {
            let v = self.order[step];
            let mut c = 0;
            loop {
                self.colour[v] = c;
                if !self.conflict(step) {
                    break;
                }
                c += 1;
            }
            used = used.max(c + 1);
        }
        self.colour.iter_mut().for_each(|c| *c = usize::MAX);
        used
    }

    fn search(&mut self, step: usize, used: usize) {
        if used >= self.best {
            return;
        }
        if step == self.order.len() {
            self.best = used;
            return;
        }
        let v = self.order[step];
        // a fresh colour is only tried once (colour symmetry)
        for c in 0..=used.min(self.best.saturating_sub(2)) {
            self.colour[v] = c;
            if !self.conflict(step) {
                self.search(step + 1, used.max(c + 1));
            }
        }
        self.colour[v] = usize::MAX;
    }
}

fn check_cap(g: &Hypergraph, cap: usize) -> Result<()> {
    if g.order() > cap {
        return Err(limit!("exact colouring capped at {cap} vertices, graph has {}", g.order()));
    }
    Ok(())
}

/// Fewest parts such that no part contains a whole edge.
pub fn chromatic_number_with_cap(g: &Hypergraph, cap: usize) -> Result<usize> {
    check_cap(g, cap)?;
    if g.order() == 0 {
        return Ok(0);
    }
    let mut c = Colouring::new(g);
    c.best = c.greedy();
    c.search(0, 0);
    Ok(c.best)
}

pub fn chromatic_number(g: &Hypergraph) -> Result<usize> {
    chromatic_number_with_cap(g, DEFAULT_EXACT_CAP)
}

/// Fewest parts such that every part meets every edge in at most one
/// vertex; a proper colouring of the 2-section.
pub fn weak_chromatic_number_with_cap(g: &Hypergraph, cap: usize) -> Result<usize> {
    check_cap(g, cap)?;
    chromatic_number_with_cap(&g.shadow(), cap)
}

pub fn weak_chromatic_number(g: &Hypergraph) -> Result<usize> {
    weak_chromatic_number_with_cap(g, DEFAULT_EXACT_CAP)
}

/// Clique number of a 2-graph (0 for the vertexless graph).
pub fn clique_number(g: &Hypergraph) -> Result<usize> {
    if g.uniformity() != 2 {
        return Err(invalid!("clique number is defined here for 2-graphs only"));
    }
    if g.order() > 64 {
        return Err(limit!("clique search capped at 64 vertices"));
    }
    let n = g.order();
    let mut adj = vec![0u64; n];
    for e in g.edges() {
        adj[e[0]] |= 1 << e[1];
        adj[e[1]] |= 1 << e[0];
    }
    fn grow(adj: &[u64], size: usize, candidates: u64, best: &mut usize) {
        if candidates == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + candidates.count_ones() as usize <= *best {
            return;
        }
        let mut cand = candidates;
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            grow(adj, size + 1, cand & adj[v], best);
        }
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    grow(&adj, 0, all, &mut best);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force over all assignments of `k` colours.
    fn colourable(g: &Hypergraph, k: usize, weak: bool) -> bool {
        let n = g.order();
        let mut colour = vec![0usize; n];
        loop {
            let ok = g.edges().all(|e| {
                if weak {
                    (0..e.len()).all(|a| (a + 1..e.len()).all(|b| colour[e[a]] != colour[e[b]]))
                } else {
                    e.iter().any(|&v| colour[v] != colour[e[0]])
                }
            });
            if ok {
                return true;
            }
            let mut i = 0;
            while i < n {
                colour[i] += 1;
                if colour[i] < k {
                    break;
                }
                colour[i] = 0;
                i += 1;
            }
            if i == n {
                return false;
            }
        }
    }

    fn k(r: usize, n: usize) -> Hypergraph {
        Hypergraph::complete(r, n).unwrap()
    }

    #[test]
    fn chromatic_examples() {
        let e3 = Hypergraph::from_edges(3, 3, [[0, 1, 2]]).unwrap();
        assert_eq!(chromatic_number(&e3).unwrap(), 2);
        for n in 1..7 {
            assert_eq!(chromatic_number(&k(2, n)).unwrap(), n);
        }
        assert_eq!(chromatic_number(&k(3, 5)).unwrap(), 3);
        assert!(colourable(&k(3, 5), 3, false) && !colourable(&k(3, 5), 2, false));
        assert_eq!(chromatic_number(&Hypergraph::empty(3, 4).unwrap()).unwrap(), 1);
        assert_eq!(chromatic_number(&Hypergraph::empty(3, 0).unwrap()).unwrap(), 0);
        assert_eq!(chromatic_number(&Hypergraph::fano()).unwrap(), 3);
    }

    #[test]
    fn weak_chromatic_examples() {
        let e4 = Hypergraph::from_edges(4, 4, [[0, 1, 2, 3]]).unwrap();
        assert_eq!(weak_chromatic_number(&e4).unwrap(), 4);
        assert_eq!(weak_chromatic_number(&k(3, 4)).unwrap(), 4);
        assert_eq!(weak_chromatic_number(&Hypergraph::fano()).unwrap(), 7);
        assert!(!colourable(&Hypergraph::fano(), 6, true));
    }

    #[test]
    fn cap_is_enforced() {
        let big = Hypergraph::empty(2, 17).unwrap();
        assert!(matches!(chromatic_number(&big), Err(crate::Error::ResourceLimit(_))));
        assert!(chromatic_number_with_cap(&big, 20).is_ok());
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let r = rng.random_range(2..=3);
            let n = rng.random_range(r..=6);
            let edges: Vec<Vec<usize>> = super::super::construct::all_subsets(r, n)
                .chunks_exact(r)
                .filter(|_| rng.random_bool(0.5))
                .map(|e| e.to_vec())
                .collect();
            let g = Hypergraph::from_edges(r, n, edges).unwrap();
            let chi = chromatic_number(&g).unwrap();
            assert!(colourable(&g, chi, false));
            assert!(chi == 1 || !colourable(&g, chi - 1, false));
            let w = weak_chromatic_number(&g).unwrap();
            assert!(colourable(&g, w, true));
            assert!(w == 1 || !colourable(&g, w - 1, true));
            assert!(chi <= w);
            assert!(chi <= n.div_ceil(r - 1));
        }
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&k(2, 5)).unwrap(), 5);
        assert_eq!(clique_number(&Hypergraph::cycle(5).unwrap()).unwrap(), 2);
        assert_eq!(clique_number(&Hypergraph::empty(2, 3).unwrap()).unwrap(), 1);
        assert_eq!(clique_number(&Hypergraph::turan(7, 3).unwrap()).unwrap(), 3);
        assert!(clique_number(&k(3, 4)).is_err());
    }
}
