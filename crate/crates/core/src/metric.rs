//! Distance matrices and the distinguishing predicates underlying every
//! dimension variant.
//!
//! Distances come from per-vertex BFS. A matrix is either unbounded (entries
//! are true distances, with [`INFINITY`] for unreachable pairs) or truncated at
//! `k ≥ 1`, in which case every entry is `min(d, k)` — including unreachable
//! pairs, which become `k`, so truncated matrices are always finite. That
//! convention makes truncation at 2 coincide exactly with the adjacency
//! predicate on arbitrary (also disconnected) graphs.

use crate::graph::Graph;

/// Sentinel for unreachable pairs in unbounded matrices. Strictly greater than
/// any achievable distance and never produced by truncated matrices.
pub const INFINITY: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Truncation {
    Unbounded,
    /// Entrywise `min(d, k)`; requires `k ≥ 1`.
    At(u32),
}

/// Symmetric all-pairs distance matrix of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricMatrix {
    n: usize,
    truncation: Truncation,
    d: Vec<u32>, // row-major n×n
}

impl MetricMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn truncation(&self) -> Truncation {
        self.truncation
    }

    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }
}

/// BFS distances from `src`; `INFINITY` marks unreachable vertices.
pub fn bfs_distances(g: &Graph, src: usize) -> Vec<u32> {
    let n = g.order();
    let mut dist = vec![INFINITY; n];
    dist[src] = 0;
    let mut queue = std::collections::VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u) {
            if dist[v] == INFINITY {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// All-pairs distances via BFS from every vertex, entrywise min with the
/// truncation bound when one is given (capping unreachable pairs at the bound).
///
/// Panics if a truncation of 0 is requested; `d_{G,k}` is defined for `k ≥ 1`.
pub fn all_pairs_distances(g: &Graph, truncation: Truncation) -> MetricMatrix {
    if let Truncation::At(k) = truncation {
        assert!(k >= 1, "truncation requires k >= 1");
    }
    let n = g.order();
    let mut d = Vec::with_capacity(n * n);
    for v in 0..n {
        let mut row = bfs_distances(g, v);
        if let Truncation::At(k) = truncation {
            for e in &mut row {
                *e = (*e).min(k);
            }
        }
        d.extend_from_slice(&row);
    }
    MetricMatrix { n, truncation, d }
}

/// Eccentricity of `v`: max distance from `v`, or `None` if some vertex is
/// unreachable.
pub fn eccentricity(g: &Graph, v: usize) -> Option<u32> {
    let dist = bfs_distances(g, v);
    let max = *dist.iter().max().expect("non-empty graph");
    if max == INFINITY {
        None
    } else {
        Some(max)
    }
}

/// Diameter, or `None` when the graph is disconnected (infinite diameter).
pub fn diameter(g: &Graph) -> Option<u32> {
    (0..g.order()).map(|v| eccentricity(g, v)).try_fold(0, |acc, e| e.map(|e| acc.max(e)))
}

/// Radius, or `None` when the graph is disconnected.
pub fn radius(g: &Graph) -> Option<u32> {
    (0..g.order())
        .map(|v| eccentricity(g, v))
        .try_fold(INFINITY, |acc, e| e.map(|e| acc.min(e)))
}

/// Does `s` distinguish `x` and `y` under the matrix metric, i.e.
/// `d(s,x) ≠ d(s,y)`? Indexing panics if a vertex is out of range.
#[inline]
pub fn distinguishes(m: &MetricMatrix, s: usize, x: usize, y: usize) -> bool {
    m.dist(s, x) != m.dist(s, y)
}

/// Does `s` distinguish `x` and `y` under the neighborhood predicate
/// `|N(s) ∩ {x,y}| = 1`? Equivalent to `d_{G,2}(s,x) ≠ d_{G,2}(s,y)` for
/// `s ∉ {x,y}`; implemented directly on adjacency bits.
#[inline]
pub fn adjacency_distinguishes(g: &Graph, s: usize, x: usize, y: usize) -> bool {
    g.has_edge(s, x) != g.has_edge(s, y)
}
