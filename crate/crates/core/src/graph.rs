//! Simple undirected graphs on vertex set `{0, …, n−1}` with bitset adjacency
//! rows, plus the structural operations the dimension theory needs: complement,
//! vertex deletion, connected components, twin partitions, and a plain-text
//! edge-list format.
//!
//! Edge-list format: `#` starts a comment (whole line or trailing), the first
//! data line is `n m`, followed by `m` lines `u v` with `0 ≤ u, v < n`,
//! `u ≠ v`. Writing is deterministic: edges appear as `u v` with `u < v`,
//! sorted lexicographically.

use crate::bits;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0} not allowed")]
    SelfLoop(usize),
    #[error("edge-list parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph must be non-empty (order >= 1)")]
    EmptyGraph,
}

/// Undirected simple graph; adjacency stored as one bit row per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>, // n rows of `words` u64s each, row-major
    m: usize,       // edge count
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        let words = bits::words_for(n.max(1));
        Graph { n, words, rows: vec![0; n * words], m: 0 }
    }

    /// Build from an explicit edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are errors.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, order: self.n })
        } else {
            Ok(())
        }
    }

    /// Insert edge `{u, v}` (idempotent). Panics on out-of-range or loop;
    /// intended for constructors that control their indices.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u},{v}) for order {}", self.n);
        if !self.has_edge(u, v) {
            let w = self.words;
            bits::set(&mut self.rows[u * w..(u + 1) * w], v);
            bits::set(&mut self.rows[v * w..(v + 1) * w], u);
            self.m += 1;
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::get(self.row(u), v)
    }

    /// Adjacency row of `v` as a bit slice over vertices.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::count_ones(self.row(v)) as usize
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Neighbors of `v`, ascending.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.row(v))
    }

    /// Open neighborhood N(v) as a sorted vector.
    pub fn open_neighborhood(&self, v: usize) -> Vec<usize> {
        self.neighbors(v).collect()
    }

    /// Closed neighborhood N[v] = N(v) ∪ {v}, sorted.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut nb = self.open_neighborhood(v);
        let pos = nb.partition_point(|&u| u < v);
        nb.insert(pos, v);
        nb
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Graph with vertex `v` removed; vertices above `v` shift down by one
    /// (order is preserved).
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        if self.n == 1 {
            return Err(GraphError::EmptyGraph);
        }
        let map = |x: usize| if x > v { x - 1 } else { x };
        let mut g = Graph::empty(self.n - 1);
        for (a, b) in self.edges() {
            if a != v && b != v {
                g.add_edge(map(a), map(b));
            }
        }
        Ok(g)
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// Partition the vertex set into twin classes. Two vertices are true twins
    /// if N[x] = N[y] (necessarily adjacent) and false twins if N(x) = N(y)
    /// (necessarily non-adjacent); each non-singleton class is tagged with its
    /// kind. A vertex cannot lie in both a true and a false class of size ≥ 2
    /// (asserted).
    pub fn twin_partition(&self) -> TwinPartition {
        use std::collections::HashMap;
        let mut open_groups: HashMap<&[u64], Vec<usize>> = HashMap::new();
        let mut closed_groups: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
        for v in 0..self.n {
            open_groups.entry(self.row(v)).or_default().push(v);
            let mut closed = self.row(v).to_vec();
            bits::set(&mut closed, v);
            closed_groups.entry(closed).or_default().push(v);
        }
        let mut assigned = vec![false; self.n];
        let mut classes = Vec::new();
        for group in open_groups.into_values() {
            if group.len() >= 2 {
                classes.push(TwinClass { members: group, kind: TwinKind::False });
            }
        }
        for group in closed_groups.into_values() {
            if group.len() >= 2 {
                classes.push(TwinClass { members: group, kind: TwinKind::True });
            }
        }
        for c in &classes {
            for &v in &c.members {
                assert!(!assigned[v], "vertex {v} in two non-singleton twin classes");
                assigned[v] = true;
            }
        }
        for v in 0..self.n {
            if !assigned[v] {
                classes.push(TwinClass { members: vec![v], kind: TwinKind::Singleton });
            }
        }
        for c in &mut classes {
            c.members.sort_unstable();
        }
        classes.sort_by_key(|c| c.members[0]);
        TwinPartition { classes }
    }

    /// SHA-256 of the canonical edge-list text; ties certificates to the graph
    /// they were computed on.
    pub fn hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut hasher = Sha256::new();
        hasher.update(self.to_edge_list_text().as_bytes());
        let digest = hasher.finalize();
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Canonical edge-list text (see module docs for the format).
    pub fn to_edge_list_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parse the edge-list text format.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(GraphError::Parse {
                    line: line_no,
                    message: format!("expected two integers, got {toks:?}"),
                });
            }
            let a = toks[0].parse::<usize>().map_err(|e| GraphError::Parse {
                line: line_no,
                message: format!("bad integer {:?}: {e}", toks[0]),
            })?;
            let b = toks[1].parse::<usize>().map_err(|e| GraphError::Parse {
                line: line_no,
                message: format!("bad integer {:?}: {e}", toks[1]),
            })?;
            if header.is_none() {
                header = Some((a, b));
            } else {
                edges.push((a, b));
            }
        }
        let (n, m) = header.ok_or(GraphError::Parse { line: 0, message: "missing `n m` header".into() })?;
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: 0,
                message: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Graphviz DOT rendering (undirected), for debugging.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph g {\n");
        let mut isolated: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) == 0).collect();
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        for v in isolated.drain(..) {
            out.push_str(&format!("  {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwinKind {
    Singleton,
    /// N[x] = N[y]; members are pairwise adjacent.
    True,
    /// N(x) = N(y); members are pairwise non-adjacent.
    False,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct TwinClass {
    pub members: Vec<usize>,
    pub kind: TwinKind,
}

/// Twin classes of a graph, ordered by smallest member; classes partition the
/// vertex set.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct TwinPartition {
    pub classes: Vec<TwinClass>,
}

impl TwinPartition {
    /// Total number of classes `t` (singletons included).
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn true_classes(&self) -> impl Iterator<Item = &TwinClass> {
        self.classes.iter().filter(|c| c.kind == TwinKind::True)
    }

    pub fn false_classes(&self) -> impl Iterator<Item = &TwinClass> {
        self.classes.iter().filter(|c| c.kind == TwinKind::False)
    }

    pub fn has_singleton(&self) -> bool {
        self.classes.iter().any(|c| c.kind == TwinKind::Singleton)
    }

    /// Vertices lying in no true-twin class of size ≥ 2.
    pub fn outside_true_classes(&self) -> usize {
        self.classes
            .iter()
            .filter(|c| c.kind != TwinKind::True)
            .map(|c| c.members.len())
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{family, Family};

    #[test]
    fn from_edge_list_basic() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (0, 1)]).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 3); // duplicate collapsed
        assert!(g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.degree(1), 2);
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(2, 2)]), Err(GraphError::SelfLoop(2)));
    }

    #[test]
    fn neighborhoods() {
        let p4 = family(Family::Path, &[4]).unwrap();
        assert_eq!(p4.open_neighborhood(1), vec![0, 2]);
        assert_eq!(p4.closed_neighborhood(1), vec![0, 1, 2]);
        assert_eq!(p4.open_neighborhood(0), vec![1]);
    }

    #[test]
    fn complement_of_path_is_path() {
        // P_4 = 0-1-2-3; complement has edges {0,2},{0,3},{1,3}: the path 2-0-3-1.
        let c = family(Family::Path, &[4]).unwrap().complement();
        assert_eq!(c.size(), 3);
        let mut degs: Vec<usize> = (0..4).map(|v| c.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2, 2]);
        assert!(c.has_edge(0, 2) && c.has_edge(0, 3) && c.has_edge(1, 3));
        assert!(c.is_connected());
    }

    #[test]
    fn complement_is_involutive() {
        for g in [
            family(Family::Path, &[6]).unwrap(),
            family(Family::Cycle, &[5]).unwrap(),
            family(Family::CompleteBipartite, &[2, 3]).unwrap(),
        ] {
            assert_eq!(g.complement().complement(), g);
        }
    }

    #[test]
    fn delete_vertex_shifts_down() {
        let p5 = family(Family::Path, &[5]).unwrap();
        let g = p5.delete_vertex(2).unwrap(); // splits into 0-1 and 2-3 (old 3-4)
        assert_eq!(g.order(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        assert!(!g.is_connected());
        // deleting an endpoint of P_2 leaves K_1
        let p2 = family(Family::Path, &[2]).unwrap();
        let k1 = p2.delete_vertex(0).unwrap();
        assert_eq!(k1.order(), 1);
        assert!(k1.is_connected());
    }

    #[test]
    fn components() {
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (4, 5)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![0, 1, 2], vec![3], vec![4, 5]]);
        assert!(!g.is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(!Graph::empty(2).is_connected());
    }

    #[test]
    fn twin_partition_path_is_all_singletons() {
        let p4 = family(Family::Path, &[4]).unwrap();
        let tp = p4.twin_partition();
        assert_eq!(tp.class_count(), 4);
        assert!(tp.classes.iter().all(|c| c.kind == TwinKind::Singleton));
    }

    #[test]
    fn twin_partition_complete_and_bipartite() {
        let k5 = family(Family::Complete, &[5]).unwrap();
        let tp = k5.twin_partition();
        assert_eq!(tp.class_count(), 1);
        assert_eq!(tp.classes[0].kind, TwinKind::True);
        assert_eq!(tp.classes[0].members, vec![0, 1, 2, 3, 4]);

        let k23 = family(Family::CompleteBipartite, &[2, 3]).unwrap();
        let tp = k23.twin_partition();
        assert_eq!(tp.class_count(), 2);
        assert!(tp.classes.iter().all(|c| c.kind == TwinKind::False));
        assert_eq!(tp.classes[0].members, vec![0, 1]);
        assert_eq!(tp.classes[1].members, vec![2, 3, 4]);
    }

    #[test]
    fn twin_classes_are_homogeneous() {
        // true classes induce cliques, false classes independent sets
        for g in [
            family(Family::Complete, &[4]).unwrap(),
            family(Family::Star, &[5]).unwrap(),
            family(Family::Wheel, &[6]).unwrap(),
            Graph::from_edge_list(5, &[(0, 1), (0, 2), (1, 2), (3, 0), (4, 0)]).unwrap(),
        ] {
            for c in &g.twin_partition().classes {
                for (i, &u) in c.members.iter().enumerate() {
                    for &v in &c.members[i + 1..] {
                        match c.kind {
                            TwinKind::True => assert!(g.has_edge(u, v)),
                            TwinKind::False => assert!(!g.has_edge(u, v)),
                            TwinKind::Singleton => unreachable!(),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn edge_list_text_roundtrip() {
        let g = family(Family::Wheel, &[5]).unwrap();
        let text = g.to_edge_list_text();
        let h = Graph::parse_edge_list(&text).unwrap();
        assert_eq!(g, h);
        // comments and blank lines are tolerated
        let commented = format!("# a wheel\n\n{text}# trailing\n");
        assert_eq!(Graph::parse_edge_list(&commented).unwrap(), g);
    }

    #[test]
    fn edge_list_parse_errors() {
        assert!(matches!(
            Graph::parse_edge_list("3 1\n0 1\n1 2\n"),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(Graph::parse_edge_list("2\n"), Err(GraphError::Parse { .. })));
        assert!(matches!(
            Graph::parse_edge_list("2 1\n0 2\n"),
            Err(GraphError::VertexOutOfRange { .. })
        ));
        assert!(matches!(Graph::parse_edge_list(""), Err(GraphError::Parse { .. })));
    }

    #[test]
    fn hash_is_stable_and_content_sensitive() {
        let g = family(Family::Cycle, &[5]).unwrap();
        assert_eq!(g.hash(), g.clone().hash());
        let h = family(Family::Path, &[5]).unwrap();
        assert_ne!(g.hash(), h.hash());
    }
}
