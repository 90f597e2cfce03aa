//! Isomorphism-invariant labelings.
//!
//! [`canonical_form`] refines vertex colours (degree, then the multiset of
//! colours seen through each incident edge) and then searches only the
//! permutations that keep colour classes in their invariant order. Among
//! those it picks the labeling whose edge indicator, read in colex order of
//! r-subsets, is largest; partial labelings fix a prefix of that indicator,
//! so worse prefixes are cut early.
//!
//! [`lex_min_form`] is the plain lexicographically smallest edge list over
//! all `n!` relabelings, used to report witnesses independently of the
//! enumeration path.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{invalid, Result};
use crate::hypergraph::{binomial, Hypergraph};

/// Largest order [`canonical_form`] accepts.
pub const CANON_ORDER_LIMIT: usize = 16;

/// Largest order for which [`lex_min_form`] scans all permutations.
pub const LEX_MIN_ORDER_LIMIT: usize = 9;

/// Stable colour refinement; colours are ranks of sorted signatures.
pub(crate) fn refine(g: &Hypergraph) -> Vec<usize> {
    let n = g.order();
    let inc = g.incidence_lists();
    let mut colour: Vec<usize> = g.degree_profile().degrees;
    let mut classes = {
        let mut c = colour.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        let sigs: Vec<(usize, Vec<Vec<usize>>)> = (0..n)
            .map(|v| {
                let mut seen: Vec<Vec<usize>> = inc[v]
                    .iter()
                    .map(|&ei| {
                        let mut c: Vec<usize> =
                            g.edge(ei).iter().filter(|&&u| u != v).map(|&u| colour[u]).collect();
                        c.sort_unstable();
                        c
                    })
                    .collect();
                seen.sort_unstable();
                (colour[v], seen)
            })
            .collect();
        let mut ranks: BTreeMap<&(usize, Vec<Vec<usize>>), usize> = BTreeMap::new();
        for s in &sigs {
            ranks.insert(s, 0);
        }
        for (i, v) in ranks.values_mut().enumerate() {
            *v = i;
        }
        let next: Vec<usize> = sigs.iter().map(|s| ranks[s]).collect();
        let count = ranks.len();
        colour = next;
        if count == classes {
            return colour;
        }
        classes = count;
    }
}

struct Search<'a> {
    r: usize,
    inc: &'a [Vec<usize>],
    g: &'a Hypergraph,
    /// Colour class required at each position.
    cell_at: Vec<usize>,
    colour: Vec<usize>,
    pos: Vec<usize>,
    order: Vec<usize>,
    best: Option<Vec<u128>>,
    best_order: Vec<usize>,
    blocks: Vec<u128>,
}

impl Search<'_> {
    /// Indicator of the edges whose largest position is `p`, most
    /// significant bit first in colex order.
    fn block(&self, v: usize, p: usize) -> u128 {
        let width = binomial(p, self.r - 1) as u32;
        let mut b = 0u128;
        for &ei in &self.inc[v] {
            let e = self.g.edge(ei);
            let mut others: Vec<usize> = Vec::with_capacity(self.r - 1);
            let mut complete = true;
            for &u in e {
                if u == v {
                    continue;
                }
                if self.pos[u] == usize::MAX {
                    complete = false;
                    break;
                }
                others.push(self.pos[u]);
            }
            if !complete {
                continue;
            }
            others.sort_unstable();
            let j: u64 = others.iter().enumerate().map(|(i, &q)| binomial(q, i + 1)).sum();
            b |= 1u128 << (width - 1 - j as u32);
        }
        b
    }

    /// How the current prefix extended by `b` at position `p` compares with
    /// the best labeling found so far.
    fn compare(&self, p: usize, b: u128) -> Ordering {
        match &self.best {
            None => Ordering::Greater,
            Some(best) => self.blocks[..p].cmp(&best[..p]).then(b.cmp(&best[p])),
        }
    }

    fn descend(&mut self, p: usize) {
        let n = self.cell_at.len();
        if p == n {
            self.best = Some(self.blocks.clone());
            self.best_order.clone_from(&self.order);
            return;
        }
        for v in 0..n {
            if self.pos[v] != usize::MAX || self.colour[v] != self.cell_at[p] {
                continue;
            }
            self.pos[v] = p;
            let b = self.block(v, p);
            if self.compare(p, b) != Ordering::Less {
                self.blocks[p] = b;
                self.order[p] = v;
                self.descend(p + 1);
            }
            self.pos[v] = usize::MAX;
        }
    }
}

/// An isomorphism-invariant relabeling of `g`: isomorphic inputs give equal
/// outputs. Requires `n <= 16` and `C(n, r - 1) <= 128`.
pub fn canonical_form(g: &Hypergraph) -> Result<Hypergraph> {
    g.relabel(&canonical_labeling(g)?)
}

/// The permutation behind [`canonical_form`]: vertex `v` becomes `perm[v]`.
pub(crate) fn canonical_labeling(g: &Hypergraph) -> Result<Vec<usize>> {
    let n = g.order();
    let r = g.uniformity();
    if n > CANON_ORDER_LIMIT || binomial(n, r - 1) > 128 {
        return Err(invalid!("canonical form supports at most {CANON_ORDER_LIMIT} vertices"));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let colour = refine(g);
    let mut cell_at = colour.clone();
    cell_at.sort_unstable();
    let inc = g.incidence_lists();
    let mut s = Search {
        r,
        inc: &inc,
        g,
        cell_at,
        colour,
        pos: vec![usize::MAX; n],
        order: vec![0; n],
        best: None,
        best_order: vec![0; n],
        blocks: vec![0; n],
    };
    s.descend(0);
    let mut perm = vec![0; n];
    for (p, &v) in s.best_order.iter().enumerate() {
        perm[v] = p;
    }
    Ok(perm)
}

fn permute_sorted(g: &Hypergraph, perm: &[usize], buf: &mut Vec<Vec<usize>>) {
    buf.clear();
    for e in g.edges() {
        let mut f: Vec<usize> = e.iter().map(|&v| perm[v]).collect();
        f.sort_unstable();
        buf.push(f);
    }
    buf.sort_unstable();
}

/// The relabeling of `g` with the lexicographically smallest sorted edge
/// list. Orders above [`LEX_MIN_ORDER_LIMIT`] fall back to
/// [`canonical_form`].
pub fn lex_min_form(g: &Hypergraph) -> Result<Hypergraph> {
    g.relabel(&lex_min_labeling(g)?)
}

/// The permutation behind [`lex_min_form`].
pub(crate) fn lex_min_labeling(g: &Hypergraph) -> Result<Vec<usize>> {
    let n = g.order();
    if n > LEX_MIN_ORDER_LIMIT {
        return canonical_labeling(g);
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best_perm = perm.clone();
    let mut best: Vec<Vec<usize>> = Vec::new();
    let mut cur = Vec::new();
    permute_sorted(g, &perm, &mut best);
    // Heap's algorithm
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            permute_sorted(g, &perm, &mut cur);
            if cur < best {
                core::mem::swap(&mut cur, &mut best);
                best_perm.clone_from(&perm);
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(best_perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn shuffled(g: &Hypergraph, rng: &mut ChaCha8Rng) -> Hypergraph {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.random_range(0..=i));
        }
        g.relabel(&perm).unwrap()
    }

    fn random(rng: &mut ChaCha8Rng, r: usize, n: usize) -> Hypergraph {
        let all = Hypergraph::complete(r, n).unwrap();
        let edges: Vec<Vec<usize>> = all.edges().filter(|_| rng.random_bool(0.5)).map(|e| e.to_vec()).collect();
        Hypergraph::from_edges(r, n, edges).unwrap()
    }

    #[test]
    fn invariant_under_relabeling() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..60 {
            let r = rng.random_range(2..=3);
            let n = rng.random_range(r..=7);
            let g = random(&mut rng, r, n);
            let c = canonical_form(&g).unwrap();
            let h = shuffled(&g, &mut rng);
            assert_eq!(canonical_form(&h).unwrap(), c);
            assert_eq!(lex_min_form(&h).unwrap(), lex_min_form(&g).unwrap());
            assert_eq!(c.size(), g.size());
        }
    }

    #[test]
    fn separates_non_isomorphic() {
        let c6 = Hypergraph::cycle(6).unwrap();
        let two_triangles =
            Hypergraph::disjoint_union(&[Hypergraph::complete(2, 3).unwrap(), Hypergraph::complete(2, 3).unwrap()])
                .unwrap();
        assert_ne!(canonical_form(&c6).unwrap(), canonical_form(&two_triangles).unwrap());
    }

    #[test]
    fn lex_min_examples() {
        let p = Hypergraph::from_edges(2, 3, [[1, 2], [0, 2]]).unwrap();
        assert_eq!(lex_min_form(&p).unwrap().edges().collect::<Vec<_>>(), vec![&[0, 1][..], &[0, 2][..]]);
        let e = Hypergraph::empty(3, 0).unwrap();
        assert_eq!(canonical_form(&e).unwrap(), e);
    }
}
