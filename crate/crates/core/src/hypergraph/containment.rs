//! Backtracking subgraph and induced-subgraph search.
//!
//! Vertices of the pattern are placed in descending degree order (ties by
//! index); candidates in the host are tried in ascending index. A host
//! vertex is admissible only if its degree is at least the pattern vertex's.
//! Each edge of the pattern is checked at the step where its last vertex is
//! placed, so every partial map is edge-preserving.

use alloc::vec;
use alloc::vec::Vec;

use super::construct::all_subsets;
use super::Hypergraph;
use crate::error::{invalid, Result};

struct Step {
    vertex: usize,
    degree: usize,
    /// Pattern edges completed by this step, as tuples of step indices.
    edges: Vec<Vec<usize>>,
    /// Non-edges completed by this step (induced search only).
    non_edges: Vec<Vec<usize>>,
}

fn plan(pattern: &Hypergraph, induced: bool) -> Vec<Step> {
    let deg = pattern.degree_profile().degrees;
    let mut order: Vec<usize> = (0..pattern.order()).collect();
    order.sort_by(|&a, &b| deg[b].cmp(&deg[a]).then(a.cmp(&b)));
    let mut pos = vec![0usize; pattern.order()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut steps: Vec<Step> = order
        .iter()
        .map(|&v| Step { vertex: v, degree: deg[v], edges: Vec::new(), non_edges: Vec::new() })
        .collect();
    for e in pattern.edges() {
        let t: Vec<usize> = e.iter().map(|&v| pos[v]).collect();
        let last = *t.iter().max().expect("edges are non-empty");
        steps[last].edges.push(t);
    }
    if induced {
        let r = pattern.uniformity();
        for s in all_subsets(r, pattern.order()).chunks_exact(r) {
            if !pattern.has_edge(s) {
                let t: Vec<usize> = s.iter().map(|&v| pos[v]).collect();
                let last = *t.iter().max().expect("subsets are non-empty");
                steps[last].non_edges.push(t);
            }
        }
    }
    steps
}

struct Search<'a> {
    host: &'a Hypergraph,
    host_deg: Vec<usize>,
    steps: Vec<Step>,
    image: Vec<usize>,
    used: Vec<bool>,
    buf: Vec<usize>,
}

impl Search<'_> {
    fn image_is_edge(&mut self, t: &[usize]) -> bool {
        self.buf.clear();
        self.buf.extend(t.iter().map(|&s| self.image[s]));
        self.buf.sort_unstable();
        self.host.has_edge(&self.buf)
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.steps.len() {
            return true;
        }
        for w in 0..self.host.order() {
            if self.used[w] || self.host_deg[w] < self.steps[depth].degree {
                continue;
            }
            self.image[depth] = w;
            let edges = core::mem::take(&mut self.steps[depth].edges);
            let non_edges = core::mem::take(&mut self.steps[depth].non_edges);
            let ok = edges.iter().all(|t| self.image_is_edge(t))
                && non_edges.iter().all(|t| !self.image_is_edge(t));
            self.steps[depth].edges = edges;
            self.steps[depth].non_edges = non_edges;
            if ok {
                self.used[w] = true;
                if self.extend(depth + 1) {
                    return true;
                }
                self.used[w] = false;
            }
        }
        false
    }
}

/// An injective map `pattern vertex -> host vertex` sending edges to edges
/// (and, when `induced`, non-edges to non-edges), or `None`.
pub fn find_embedding(
    host: &Hypergraph,
    pattern: &Hypergraph,
    induced: bool,
) -> Result<Option<Vec<usize>>> {
    if host.uniformity() != pattern.uniformity() {
        return Err(invalid!(
            "uniformity mismatch: host is {}-uniform, pattern is {}-uniform",
            host.uniformity(),
            pattern.uniformity()
        ));
    }
    if pattern.order() > host.order() || pattern.size() > host.size() {
        return Ok(None);
    }
    let steps = plan(pattern, induced);
    let mut search = Search {
        host,
        host_deg: host.degree_profile().degrees,
        image: vec![0; steps.len()],
        used: vec![false; host.order()],
        steps,
        buf: Vec::with_capacity(host.uniformity()),
    };
    if !search.extend(0) {
        return Ok(None);
    }
    let mut map = vec![0; pattern.order()];
    for (s, step) in search.steps.iter().enumerate() {
        map[step.vertex] = search.image[s];
    }
    Ok(Some(map))
}

/// True iff `pattern` is isomorphic to a (not necessarily induced) subgraph
/// of `host`.
pub fn contains_subgraph(host: &Hypergraph, pattern: &Hypergraph) -> Result<bool> {
    Ok(find_embedding(host, pattern, false)?.is_some())
}

/// True iff `pattern` is isomorphic to an induced subgraph of `host`.
pub fn contains_induced(host: &Hypergraph, pattern: &Hypergraph) -> Result<bool> {
    Ok(find_embedding(host, pattern, true)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(r: usize, n: usize) -> Hypergraph {
        Hypergraph::complete(r, n).unwrap()
    }

    #[test]
    fn subgraph_examples() {
        let c4 = Hypergraph::cycle(4).unwrap();
        assert!(contains_subgraph(&k(2, 4), &k(2, 3)).unwrap());
        assert!(!contains_subgraph(&c4, &k(2, 3)).unwrap());
        let b8 = Hypergraph::bipartition_3graph(4, 4).unwrap();
        assert!(!contains_subgraph(&b8, &Hypergraph::fano()).unwrap());
        assert!(contains_subgraph(&k(3, 7), &Hypergraph::fano()).unwrap());
    }

    #[test]
    fn induced_examples() {
        let c4 = Hypergraph::cycle(4).unwrap();
        assert!(!contains_induced(&k(2, 5), &c4).unwrap());
        assert!(contains_induced(&c4, &c4).unwrap());
        assert!(!contains_induced(&Hypergraph::path(4).unwrap(), &c4).unwrap());
        // C4 is a subgraph of K4 but not an induced one
        assert!(contains_subgraph(&k(2, 4), &c4).unwrap());
        assert!(!contains_induced(&k(2, 4), &c4).unwrap());
    }

    #[test]
    fn embedding_is_edge_preserving() {
        let host = Hypergraph::bipartition_3graph(3, 3).unwrap();
        let pattern = Hypergraph::from_edges(3, 4, [[0, 1, 2], [0, 1, 3]]).unwrap();
        let map = find_embedding(&host, &pattern, false).unwrap().unwrap();
        for e in pattern.edges() {
            let mut img: Vec<usize> = e.iter().map(|&v| map[v]).collect();
            img.sort_unstable();
            assert!(host.has_edge(&img));
        }
    }

    #[test]
    fn mismatch_and_trivial_cases() {
        assert!(contains_subgraph(&k(2, 4), &k(3, 3)).is_err());
        let empty = Hypergraph::empty(2, 0).unwrap();
        assert!(contains_subgraph(&k(2, 3), &empty).unwrap());
        assert!(!contains_subgraph(&k(2, 3), &Hypergraph::empty(2, 4).unwrap()).unwrap());
    }
}
