use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::Hypergraph;
use crate::error::{invalid, Result};

/// The seven lines of the Fano plane in the labeling used throughout.
const FANO_LINES: [[usize; 3]; 7] =
    [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];

/// Named graph families, parsed from `name:param:param` shorthands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    /// `complete:r:k`
    Complete { r: usize, k: usize },
    /// `empty:r:n`
    Empty { r: usize, n: usize },
    /// `fano`
    Fano,
    /// `turan:n:parts`, the complete balanced multipartite 2-graph.
    Turan { n: usize, parts: usize },
    /// `bipartition:a:b`, every triple meeting both sides of an a+b split.
    Bipartition3 { a: usize, b: usize },
    /// `cycle:n`
    Cycle { n: usize },
    /// `path:n` (n vertices)
    Path { n: usize },
}

impl Construction {
    pub fn parse(spec: &str) -> Result<Self> {
        let mut parts = spec.split(':');
        let name = parts.next().unwrap_or_default();
        let params = parts
            .map(|p| p.parse::<usize>().map_err(|_| invalid!("bad parameter {p:?} in {spec:?}")))
            .collect::<Result<Vec<_>>>()?;
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(invalid!("{name} takes {k} parameter(s), got {}", params.len()))
            }
        };
        let c = match name {
            "complete" => {
                want(2)?;
                Construction::Complete { r: params[0], k: params[1] }
            }
            "empty" => {
                want(2)?;
                Construction::Empty { r: params[0], n: params[1] }
            }
            "fano" => {
                want(0)?;
                Construction::Fano
            }
            "turan" => {
                want(2)?;
                Construction::Turan { n: params[0], parts: params[1] }
            }
            "bipartition" => {
                want(2)?;
                Construction::Bipartition3 { a: params[0], b: params[1] }
            }
            "cycle" => {
                want(1)?;
                Construction::Cycle { n: params[0] }
            }
            "path" => {
                want(1)?;
                Construction::Path { n: params[0] }
            }
            _ => return Err(invalid!("unknown construction {name:?}")),
        };
        Ok(c)
    }

    pub fn build(&self) -> Result<Hypergraph> {
        match *self {
            Construction::Complete { r, k } => Hypergraph::complete(r, k),
            Construction::Empty { r, n } => Hypergraph::empty(r, n),
            Construction::Fano => Ok(Hypergraph::fano()),
            Construction::Turan { n, parts } => Hypergraph::turan(n, parts),
            Construction::Bipartition3 { a, b } => Hypergraph::bipartition_3graph(a, b),
            Construction::Cycle { n } => Hypergraph::cycle(n),
            Construction::Path { n } => Hypergraph::path(n),
        }
    }
}

/// `standard_construction("turan", &[6, 3])` and friends.
pub fn standard_construction(name: &str, params: &[usize]) -> Result<Hypergraph> {
    let mut spec = String::from(name);
    for p in params {
        spec.push(':');
        spec.push_str(&alloc::format!("{p}"));
    }
    Construction::parse(&spec)?.build()
}

/// All `r`-subsets of `0..n` in lexicographic order, flattened.
pub(crate) fn all_subsets(r: usize, n: usize) -> Vec<usize> {
    let mut flat = Vec::new();
    if r > n {
        return flat;
    }
    let mut c: Vec<usize> = (0..r).collect();
    loop {
        flat.extend_from_slice(&c);
        // advance to the next combination
        let mut i = r;
        while i > 0 && c[i - 1] == n - r + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return flat;
        }
        c[i - 1] += 1;
        for j in i..r {
            c[j] = c[j - 1] + 1;
        }
    }
}

impl Hypergraph {
    /// The complete r-graph on `k` vertices.
    pub fn complete(r: usize, k: usize) -> Result<Self> {
        Hypergraph::empty(r, k)?;
        Ok(Hypergraph::from_sorted_flat(r, k, all_subsets(r, k)))
    }

    /// The Fano plane on vertices 0..7 with lines
    /// 012 034 056 135 146 236 245.
    pub fn fano() -> Self {
        Hypergraph::from_sorted_flat(3, 7, FANO_LINES.iter().flatten().copied().collect())
    }

    /// Complete multipartite 2-graph with the given part sizes; parts occupy
    /// consecutive index ranges.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        let n: usize = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (p, &size) in parts.iter().enumerate() {
            part_of.extend(core::iter::repeat_n(p, size));
        }
        let mut flat = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    flat.push(u);
                    flat.push(v);
                }
            }
        }
        Ok(Hypergraph::from_sorted_flat(2, n, flat))
    }

    /// The Turán graph: `parts` classes of sizes differing by at most one,
    /// larger classes first.
    pub fn turan(n: usize, parts: usize) -> Result<Self> {
        if parts == 0 {
            return Err(invalid!("Turán graph needs at least one part"));
        }
        let sizes: Vec<usize> =
            (0..parts).map(|i| n / parts + usize::from(i < n % parts)).collect();
        Hypergraph::complete_multipartite(&sizes)
    }

    /// Vertex-disjoint union; the i-th graph's vertices follow those of the
    /// graphs before it.
    pub fn disjoint_union(graphs: &[Hypergraph]) -> Result<Self> {
        let r = match graphs.first() {
            Some(g) => g.uniformity(),
            None => return Err(invalid!("disjoint union of an empty list")),
        };
        if graphs.iter().any(|g| g.uniformity() != r) {
            return Err(invalid!("disjoint union needs a common uniformity"));
        }
        let mut flat = Vec::new();
        let mut offset = 0;
        for g in graphs {
            flat.extend(g.flat_edges().iter().map(|&v| v + offset));
            offset += g.order();
        }
        Ok(Hypergraph::from_sorted_flat(r, offset, flat))
    }

    /// 3-graph on `a + b` vertices (side A = `0..a`) whose edges are all
    /// triples meeting both sides.
    pub fn bipartition_3graph(a: usize, b: usize) -> Result<Self> {
        let n = a + b;
        let flat: Vec<usize> = all_subsets(3, n)
            .chunks_exact(3)
            .filter(|t| {
                let in_a = t.iter().filter(|&&v| v < a).count();
                in_a != 0 && in_a != 3
            })
            .flatten()
            .copied()
            .collect();
        Ok(Hypergraph::from_sorted_flat(3, n, flat))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(invalid!("cycle needs at least 3 vertices"));
        }
        Hypergraph::from_edges(2, n, (0..n).map(|i| [i, (i + 1) % n]))
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Result<Self> {
        Hypergraph::from_edges(2, n, (1..n).map(|i| vec![i - 1, i]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_examples() {
        assert_eq!(standard_construction("complete", &[3, 4]).unwrap().size(), 4);
        let f = standard_construction("fano", &[]).unwrap();
        assert_eq!((f.order(), f.size()), (7, 7));
        let t = standard_construction("turan", &[6, 3]).unwrap();
        assert_eq!(t.size(), 12);
        assert_eq!(t, Hypergraph::complete_multipartite(&[2, 2, 2]).unwrap());
        assert!(standard_construction("petersen", &[]).is_err());
        assert!(standard_construction("complete", &[3]).is_err());
        assert!(Construction::parse("turan:6:x").is_err());
    }

    #[test]
    fn fano_lines_pairwise_meet_once() {
        let f = Hypergraph::fano();
        for (i, a) in f.edges().enumerate() {
            for b in f.edges().skip(i + 1) {
                assert_eq!(a.iter().filter(|v| b.contains(v)).count(), 1);
            }
        }
    }

    #[test]
    fn bipartition_sizes() {
        // C(8,3) - 2 C(4,3)
        assert_eq!(Hypergraph::bipartition_3graph(4, 4).unwrap().size(), 48);
    }

    #[test]
    fn subsets_are_lexicographic() {
        let s = all_subsets(2, 4);
        assert_eq!(s, vec![0, 1, 0, 2, 0, 3, 1, 2, 1, 3, 2, 3]);
        assert!(all_subsets(3, 2).is_empty());
        assert_eq!(all_subsets(0, 3).len(), 0);
    }

    #[test]
    fn disjoint_union_offsets() {
        let k3 = Hypergraph::complete(2, 3).unwrap();
        let u = Hypergraph::disjoint_union(&[k3.clone(), k3]).unwrap();
        assert_eq!((u.order(), u.size()), (6, 6));
        assert!(u.has_edge(&[3, 5]));
        assert!(!u.has_edge(&[2, 3]));
    }
}
