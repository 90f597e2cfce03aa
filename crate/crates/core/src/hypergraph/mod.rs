//! r-uniform hypergraphs on the dense vertex set `0..n`.
//!
//! Edges are stored as strictly increasing r-tuples in one flat buffer, in
//! lexicographic order. Every constructor normalizes into that form, so two
//! hypergraphs with the same edge set compare equal.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{invalid, Result};

mod coloring;
mod construct;
mod containment;

pub use coloring::{
    chromatic_number, chromatic_number_with_cap, clique_number, weak_chromatic_number,
    weak_chromatic_number_with_cap, DEFAULT_EXACT_CAP,
};
pub(crate) use construct::all_subsets;
pub use construct::{standard_construction, Construction};
pub use containment::{contains_induced, contains_subgraph, find_embedding};

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

pub(crate) fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Hypergraph {
    r: usize,
    n: usize,
    edges: Vec<usize>,
}

/// Per-vertex incidence counts.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    /// Minimum degree (0 for the vertexless graph).
    pub min: usize,
    /// Maximum degree (0 for the vertexless graph).
    pub max: usize,
}

impl Ord for Hypergraph {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.r, self.n, &self.edges).cmp(&(other.r, other.n, &other.edges))
    }
}

impl PartialOrd for Hypergraph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Hypergraph {
    pub fn empty(r: usize, n: usize) -> Result<Self> {
        if r < 2 {
            return Err(invalid!("uniformity must be at least 2, got {r}"));
        }
        Ok(Self { r, n, edges: Vec::new() })
    }

    /// Builds a hypergraph from arbitrary vertex tuples. Each tuple is sorted;
    /// the edge list is sorted. Repeated vertices, out-of-range vertices,
    /// wrong arity and duplicate edges are rejected.
    pub fn from_edges<I, E>(r: usize, n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        let mut g = Self::empty(r, n)?;
        let mut list: Vec<Vec<usize>> = Vec::new();
        for e in edges {
            let e = e.as_ref();
            if e.len() != r {
                return Err(invalid!("edge {e:?} has {} vertices, expected {r}", e.len()));
            }
            let mut e = e.to_vec();
            e.sort_unstable();
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(invalid!("edge {e:?} repeats a vertex"));
            }
            if let Some(&v) = e.last() {
                if v >= n {
                    return Err(invalid!("vertex {v} out of range for n = {n}"));
                }
            }
            list.push(e);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(invalid!("duplicate edge {:?}", w[0]));
        }
        g.edges = list.into_iter().flatten().collect();
        Ok(g)
    }

    /// Builds from a flat buffer the caller guarantees is already canonical.
    pub(crate) fn from_sorted_flat(r: usize, n: usize, edges: Vec<usize>) -> Self {
        debug_assert!(edges.len() % r == 0);
        debug_assert!(edges.chunks_exact(r).all(|e| e.windows(2).all(|w| w[0] < w[1])));
        debug_assert!(edges
            .chunks_exact(r)
            .zip(edges.chunks_exact(r).skip(1))
            .all(|(a, b)| a < b));
        Self { r, n, edges }
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len() / self.r
    }

    pub fn edges(&self) -> core::slice::ChunksExact<'_, usize> {
        self.edges.chunks_exact(self.r)
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i * self.r..(i + 1) * self.r]
    }

    pub(crate) fn flat_edges(&self) -> &[usize] {
        &self.edges
    }

    /// Position of a sorted tuple in the edge list.
    pub fn edge_index(&self, e: &[usize]) -> Option<usize> {
        let (mut lo, mut hi) = (0, self.size());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.edge(mid).cmp(e) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    /// Membership test for a sorted r-tuple.
    pub fn has_edge(&self, e: &[usize]) -> bool {
        e.len() == self.r && self.edge_index(e).is_some()
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut degrees = vec![0usize; self.n];
        for &v in &self.edges {
            degrees[v] += 1;
        }
        let min = degrees.iter().copied().min().unwrap_or(0);
        let max = degrees.iter().copied().max().unwrap_or(0);
        DegreeProfile { degrees, min, max }
    }

    pub fn is_regular(&self) -> bool {
        let p = self.degree_profile();
        p.min == p.max
    }

    /// Edge ids incident to each vertex.
    pub fn incidence_lists(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    /// The 2-section: `{u, v}` is an edge iff some edge contains both.
    pub fn shadow(&self) -> Hypergraph {
        let n = self.n;
        let mut adj = vec![false; n * n];
        for e in self.edges() {
            for (a, &u) in e.iter().enumerate() {
                for &v in &e[a + 1..] {
                    adj[u * n + v] = true;
                }
            }
        }
        let mut flat = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if adj[u * n + v] {
                    flat.push(u);
                    flat.push(v);
                }
            }
        }
        Hypergraph::from_sorted_flat(2, n, flat)
    }

    /// True iff every pair of distinct vertices lies in a common edge.
    pub fn is_covering(&self) -> bool {
        let pairs = binomial(self.n, 2);
        self.shadow().size() as u64 == pairs
    }

    /// An edge containing both `u` and `v`, if any.
    pub fn covering_edge(&self, u: usize, v: usize) -> Option<&[usize]> {
        self.edges().find(|e| e.contains(&u) && e.contains(&v))
    }

    /// Connected in the sense of the vertex-edge incidence graph. Isolated
    /// vertices disconnect (except for `n <= 1`).
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let inc = self.incidence_lists();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &ei in &inc[v] {
                for &w in self.edge(ei) {
                    if !seen[w] {
                        seen[w] = true;
                        count += 1;
                        stack.push(w);
                    }
                }
            }
        }
        count == self.n
    }

    /// Replaces vertex `i` by a block of `k[i]` vertices; blocks occupy
    /// consecutive index ranges in vertex order. Each edge becomes the
    /// complete r-partite r-graph on its blocks.
    pub fn blow_up(&self, k: &[usize]) -> Result<Hypergraph> {
        if k.len() != self.n {
            return Err(invalid!("blow-up vector has length {}, expected {}", k.len(), self.n));
        }
        if let Some(i) = k.iter().position(|&ki| ki == 0) {
            return Err(invalid!("blow-up multiplicity k[{i}] must be positive"));
        }
        let mut start = Vec::with_capacity(self.n);
        let mut total = 0;
        for &ki in k {
            start.push(total);
            total += ki;
        }
        let r = self.r;
        let mut tuples: Vec<Vec<usize>> = Vec::new();
        let mut idx = vec![0usize; r];
        for e in self.edges() {
            idx.iter_mut().for_each(|c| *c = 0);
            // odometer over the blocks of e, last position fastest
            'tuples: loop {
                tuples.push((0..r).map(|j| start[e[j]] + idx[j]).collect());
                for j in (0..r).rev() {
                    idx[j] += 1;
                    if idx[j] < k[e[j]] {
                        continue 'tuples;
                    }
                    idx[j] = 0;
                }
                break;
            }
        }
        tuples.sort_unstable();
        Ok(Hypergraph::from_sorted_flat(r, total, tuples.into_iter().flatten().collect()))
    }

    /// Same-multiplicity blow-up `G(k, ..., k)`.
    pub fn uniform_blow_up(&self, k: usize) -> Result<Hypergraph> {
        self.blow_up(&vec![k; self.n])
    }

    /// Deletes vertex `k` and its edges; remaining vertices keep their order.
    pub fn remove_vertex(&self, k: usize) -> Result<Hypergraph> {
        if k >= self.n {
            return Err(invalid!("vertex {k} out of range for n = {}", self.n));
        }
        let mut flat = Vec::with_capacity(self.edges.len());
        for e in self.edges().filter(|e| !e.contains(&k)) {
            flat.extend(e.iter().map(|&v| if v > k { v - 1 } else { v }));
        }
        Ok(Hypergraph::from_sorted_flat(self.r, self.n - 1, flat))
    }

    /// Subgraph induced by `keep` (any order, no repeats), relabeled by rank.
    pub fn induced(&self, keep: &[usize]) -> Result<Hypergraph> {
        let mut sorted = keep.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(invalid!("induced vertex set repeats a vertex"));
        }
        if sorted.last().is_some_and(|&v| v >= self.n) {
            return Err(invalid!("induced vertex set leaves 0..{}", self.n));
        }
        let mut label = vec![usize::MAX; self.n];
        for (i, &v) in sorted.iter().enumerate() {
            label[v] = i;
        }
        let mut flat = Vec::new();
        for e in self.edges() {
            if e.iter().all(|&v| label[v] != usize::MAX) {
                flat.extend(e.iter().map(|&v| label[v]));
            }
        }
        Ok(Hypergraph::from_sorted_flat(self.r, sorted.len(), flat))
    }

    /// Applies a vertex relabeling `perm[v]` (a permutation of `0..n`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Hypergraph> {
        if perm.len() != self.n {
            return Err(invalid!("permutation has length {}, expected {}", perm.len(), self.n));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || core::mem::replace(&mut seen[p], true) {
                return Err(invalid!("not a permutation of 0..{}", self.n));
            }
        }
        Hypergraph::from_edges(
            self.r,
            self.n,
            self.edges().map(|e| e.iter().map(|&v| perm[v]).collect::<Vec<_>>()),
        )
    }

    /// Vertices `0..n` followed by `extra` isolated vertices.
    pub fn with_isolated(&self, extra: usize) -> Hypergraph {
        Hypergraph::from_sorted_flat(self.r, self.n + extra, self.edges.clone())
    }

    /// Edge-set symmetric difference with a graph on the same vertex set.
    pub fn edge_difference_count(&self, other: &Hypergraph) -> Result<usize> {
        if self.r != other.r || self.n != other.n {
            return Err(invalid!("edge difference needs the same uniformity and order"));
        }
        let only_self = self.edges().filter(|e| !other.has_edge(e)).count();
        let only_other = other.edges().filter(|e| !self.has_edge(e)).count();
        Ok(only_self + only_other)
    }

    /// Toggles membership of the given sorted tuples.
    pub fn toggle_edges<E: AsRef<[usize]>>(&self, toggles: &[E]) -> Result<Hypergraph> {
        let mut list: Vec<Vec<usize>> = self.edges().map(|e| e.to_vec()).collect();
        for t in toggles {
            let mut t = t.as_ref().to_vec();
            t.sort_unstable();
            match list.iter().position(|e| *e == t) {
                Some(i) => {
                    list.remove(i);
                }
                None => list.push(t),
            }
        }
        Hypergraph::from_edges(self.r, self.n, list)
    }
}
