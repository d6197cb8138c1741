//! Parametric graph families and binary constructions: disjoint union, join,
//! corona product G⊙H, and strong product G⊠H.
//!
//! Vertex numbering is part of each constructor's contract (tests and the
//! reductions rely on it):
//! - `union(G, H)`: G keeps its labels, H is shifted by `|V(G)|`.
//! - `join(G, H)`: as `union`, plus all cross edges.
//! - `corona(G, H)`: anchors (the G-vertices) are `0..n−1`; the i-th copy of H
//!   occupies `n + i·n′ .. n + (i+1)·n′ − 1` and is joined to anchor `i`.
//! - `strong(G, H)`: vertex `(a, b)` maps to `a·|V(H)| + b`; `(a,b) ~ (a′,b′)`
//!   iff both coordinates are equal-or-adjacent and the pairs differ.
//!
//! Families use the conventional distinguished labels: wheels and fans put the
//! hub at vertex 0, stars the center at 0, and `complete_bipartite(r, s)` puts
//! the left side at `0..r−1`.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("family {family} expects {expected} parameter(s), got {got}")]
    ParamCount { family: &'static str, expected: usize, got: usize },
    #[error("family {family} undefined for parameters {params:?}: {reason}")]
    BadParam { family: &'static str, params: Vec<usize>, reason: &'static str },
    #[error("strong_power needs at least one factor")]
    EmptyPower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// P_n, n ≥ 1 (P_1 = K_1).
    Path,
    /// C_n, n ≥ 3.
    Cycle,
    /// K_n, n ≥ 1.
    Complete,
    /// K_{r,s}, r, s ≥ 1; left side first.
    CompleteBipartite,
    /// K_{1,r}, r ≥ 1: center 0 plus r leaves (order r+1).
    Star,
    /// W_n = K_1 + C_{n−1}, n ≥ 4; hub 0.
    Wheel,
    /// F_n = K_1 + P_{n−1}, n ≥ 3; hub 0.
    Fan,
    /// N_n: n isolated vertices, n ≥ 1.
    Null,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Star => "star",
            Family::Wheel => "wheel",
            Family::Fan => "fan",
            Family::Null => "null",
        }
    }
}

/// Construct a member of a parametric family.
pub fn family(kind: Family, params: &[usize]) -> Result<Graph, ConstructError> {
    let name = kind.name();
    let want = if kind == Family::CompleteBipartite { 2 } else { 1 };
    if params.len() != want {
        return Err(ConstructError::ParamCount { family: name, expected: want, got: params.len() });
    }
    let bad = |reason| {
        Err(ConstructError::BadParam { family: name, params: params.to_vec(), reason })
    };
    match kind {
        Family::Path => {
            let n = params[0];
            if n < 1 {
                return bad("need n >= 1");
            }
            let mut g = Graph::empty(n);
            for v in 1..n {
                g.add_edge(v - 1, v);
            }
            Ok(g)
        }
        Family::Cycle => {
            let n = params[0];
            if n < 3 {
                return bad("need n >= 3");
            }
            let mut g = Graph::empty(n);
            for v in 1..n {
                g.add_edge(v - 1, v);
            }
            g.add_edge(n - 1, 0);
            Ok(g)
        }
        Family::Complete => {
            let n = params[0];
            if n < 1 {
                return bad("need n >= 1");
            }
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v);
                }
            }
            Ok(g)
        }
        Family::CompleteBipartite => {
            let (r, s) = (params[0], params[1]);
            if r < 1 || s < 1 {
                return bad("need r, s >= 1");
            }
            let mut g = Graph::empty(r + s);
            for u in 0..r {
                for v in r..r + s {
                    g.add_edge(u, v);
                }
            }
            Ok(g)
        }
        Family::Star => {
            let r = params[0];
            if r < 1 {
                return bad("need r >= 1");
            }
            let mut g = Graph::empty(r + 1);
            for v in 1..=r {
                g.add_edge(0, v);
            }
            Ok(g)
        }
        Family::Wheel => {
            let n = params[0];
            if n < 4 {
                return bad("need n >= 4");
            }
            let mut g = Graph::empty(n);
            for v in 1..n {
                g.add_edge(0, v);
            }
            for v in 2..n {
                g.add_edge(v - 1, v);
            }
            g.add_edge(n - 1, 1);
            Ok(g)
        }
        Family::Fan => {
            let n = params[0];
            if n < 3 {
                return bad("need n >= 3");
            }
            let mut g = Graph::empty(n);
            for v in 1..n {
                g.add_edge(0, v);
            }
            for v in 2..n {
                g.add_edge(v - 1, v);
            }
            Ok(g)
        }
        Family::Null => {
            let n = params[0];
            if n < 1 {
                return bad("need n >= 1");
            }
            Ok(Graph::empty(n))
        }
    }
}

/// Disjoint union; H's labels shift up by `|V(G)|`.
pub fn union(g: &Graph, h: &Graph) -> Graph {
    let n = g.order();
    let mut out = Graph::empty(n + h.order());
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.add_edge(n + u, n + v);
    }
    out
}

/// Join G + H: disjoint union plus every cross edge.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let n = g.order();
    let mut out = union(g, h);
    for u in 0..n {
        for v in n..n + h.order() {
            out.add_edge(u, v);
        }
    }
    out
}

/// Role of a vertex in a corona product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case", tag = "role")]
pub enum CoronaRole {
    Anchor { index: usize },
    Copy { copy: usize, member: usize },
}

/// Vertex numbering of a corona product (see module docs).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoronaLayout {
    pub g_order: usize,
    pub h_order: usize,
}

impl CoronaLayout {
    pub fn order(&self) -> usize {
        self.g_order * (1 + self.h_order)
    }

    /// The anchor for copy `i` is the G-vertex `i` itself.
    pub fn anchor(&self, i: usize) -> usize {
        debug_assert!(i < self.g_order);
        i
    }

    /// Vertex `j` of the i-th copy of H.
    pub fn copy_vertex(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.g_order && j < self.h_order);
        self.g_order + i * self.h_order + j
    }

    pub fn role(&self, v: usize) -> CoronaRole {
        if v < self.g_order {
            CoronaRole::Anchor { index: v }
        } else {
            let off = v - self.g_order;
            CoronaRole::Copy { copy: off / self.h_order, member: off % self.h_order }
        }
    }
}

/// Corona product G⊙H: one copy of H per vertex of G, each copy joined to its
/// anchor. Returns the product together with its layout/role map.
pub fn corona(g: &Graph, h: &Graph) -> (Graph, CoronaLayout) {
    let layout = CoronaLayout { g_order: g.order(), h_order: h.order() };
    let mut out = Graph::empty(layout.order());
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for i in 0..g.order() {
        for (u, v) in h.edges() {
            out.add_edge(layout.copy_vertex(i, u), layout.copy_vertex(i, v));
        }
        for j in 0..h.order() {
            out.add_edge(layout.anchor(i), layout.copy_vertex(i, j));
        }
    }
    (out, layout)
}

/// Strong product G⊠H on vertex pairs `(a, b) ↦ a·|V(H)| + b`.
pub fn strong(g: &Graph, h: &Graph) -> Graph {
    let nh = h.order();
    let mut out = Graph::empty(g.order() * nh);
    let idx = |a: usize, b: usize| a * nh + b;
    for a in 0..g.order() {
        for b in 0..nh {
            for a2 in a..g.order() {
                let eq_or_adj_g = a == a2 || g.has_edge(a, a2);
                if !eq_or_adj_g {
                    continue;
                }
                for b2 in 0..nh {
                    if a == a2 && b2 <= b {
                        continue;
                    }
                    if b == b2 || h.has_edge(b, b2) {
                        out.add_edge(idx(a, b), idx(a2, b2));
                    }
                }
            }
        }
    }
    out
}

/// Iterated strong product of a non-empty list of factors (left fold).
pub fn strong_power(factors: &[Graph]) -> Result<Graph, ConstructError> {
    let (first, rest) = factors.split_first().ok_or(ConstructError::EmptyPower)?;
    Ok(rest.iter().fold(first.clone(), |acc, h| strong(&acc, h)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_examples() {
        let k1 = family(Family::Path, &[1]).unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));

        let c3 = family(Family::Cycle, &[3]).unwrap();
        let k3 = family(Family::Complete, &[3]).unwrap();
        assert_eq!(c3, k3);

        let star4 = family(Family::Star, &[4]).unwrap();
        let mut degs: Vec<usize> = (0..5).map(|v| star4.degree(v)).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degs, vec![4, 1, 1, 1, 1]);

        let k23 = family(Family::CompleteBipartite, &[2, 3]).unwrap();
        assert_eq!((0..5).map(|v| k23.degree(v)).collect::<Vec<_>>(), vec![3, 3, 2, 2, 2]);

        let w5 = family(Family::Wheel, &[5]).unwrap();
        assert_eq!(w5.degree(0), 4);
        assert_eq!(w5.size(), 8);

        let n3 = family(Family::Null, &[3]).unwrap();
        assert_eq!((n3.order(), n3.size()), (3, 0));
    }

    #[test]
    fn family_parameter_errors() {
        assert!(family(Family::Cycle, &[2]).is_err());
        assert!(family(Family::Wheel, &[3]).is_err());
        assert!(family(Family::Fan, &[2]).is_err());
        assert!(family(Family::Path, &[0]).is_err());
        assert!(family(Family::CompleteBipartite, &[0, 3]).is_err());
        assert!(family(Family::CompleteBipartite, &[2]).is_err());
        assert!(family(Family::Path, &[3, 4]).is_err());
    }

    #[test]
    fn union_numbering() {
        let p2 = family(Family::Path, &[2]).unwrap();
        let p3 = family(Family::Path, &[3]).unwrap();
        let u = union(&p2, &p3);
        assert_eq!(u.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3), (3, 4)]);
        assert_eq!(u.connected_components().len(), 2);
    }

    #[test]
    fn join_k1_cycle_is_wheel() {
        // the wheel is built edge-by-edge; the join must reproduce it exactly
        for n in 4..=8 {
            let k1 = family(Family::Complete, &[1]).unwrap();
            let c = family(Family::Cycle, &[n - 1]).unwrap();
            assert_eq!(join(&k1, &c), family(Family::Wheel, &[n]).unwrap(), "W_{n}");
        }
        for n in 3..=8 {
            let k1 = family(Family::Complete, &[1]).unwrap();
            let p = family(Family::Path, &[n - 1]).unwrap();
            assert_eq!(join(&k1, &p), family(Family::Fan, &[n]).unwrap(), "F_{n}");
        }
    }

    #[test]
    fn join_complete_parts_is_complete() {
        let k2 = family(Family::Complete, &[2]).unwrap();
        let k3 = family(Family::Complete, &[3]).unwrap();
        assert_eq!(join(&k2, &k3), family(Family::Complete, &[5]).unwrap());
        // join of null graphs is complete bipartite
        let n2 = family(Family::Null, &[2]).unwrap();
        let n3 = family(Family::Null, &[3]).unwrap();
        assert_eq!(join(&n2, &n3), family(Family::CompleteBipartite, &[2, 3]).unwrap());
    }

    #[test]
    fn corona_layout_and_order() {
        let p4 = family(Family::Path, &[4]).unwrap();
        let p5 = family(Family::Path, &[5]).unwrap();
        let (g, layout) = corona(&p4, &p5);
        assert_eq!(g.order(), 24);
        assert_eq!(g.size(), p4.size() + 4 * (p5.size() + 5));
        assert_eq!(layout.copy_vertex(2, 3), 4 + 2 * 5 + 3);
        assert_eq!(layout.role(0), CoronaRole::Anchor { index: 0 });
        assert_eq!(layout.role(17), CoronaRole::Copy { copy: 2, member: 3 });
        // anchor i sees all of copy i and nothing of copy j ≠ i
        assert!(g.has_edge(layout.anchor(1), layout.copy_vertex(1, 4)));
        assert!(!g.has_edge(layout.anchor(1), layout.copy_vertex(2, 0)));
        assert!(g.is_connected());
    }

    #[test]
    fn corona_k1_is_join() {
        let k1 = family(Family::Complete, &[1]).unwrap();
        for h in [
            family(Family::Path, &[4]).unwrap(),
            family(Family::Null, &[3]).unwrap(),
            family(Family::Cycle, &[5]).unwrap(),
        ] {
            let (c, _) = corona(&k1, &h);
            assert_eq!(c, join(&k1, &h));
        }
    }

    #[test]
    fn corona_with_empty_h() {
        // G ⊙ N_s pends s leaves on every anchor
        let p3 = family(Family::Path, &[3]).unwrap();
        let n2 = family(Family::Null, &[2]).unwrap();
        let (g, layout) = corona(&p3, &n2);
        assert_eq!(g.order(), 9);
        assert_eq!(g.size(), 2 + 3 * 2);
        for i in 0..3 {
            for j in 0..2 {
                assert_eq!(g.degree(layout.copy_vertex(i, j)), 1);
            }
        }
    }

    #[test]
    fn strong_product_examples() {
        let k2 = family(Family::Complete, &[2]).unwrap();
        assert_eq!(strong(&k2, &k2), family(Family::Complete, &[4]).unwrap());

        let p3 = family(Family::Path, &[3]).unwrap();
        let g = strong(&k2, &p3);
        assert_eq!(g.order(), 6);
        // (a,b) ~ (a',b') iff coordinates equal-or-adjacent and pairs differ
        assert!(g.has_edge(0 * 3 + 0, 1 * 3 + 1)); // (0,0)-(1,1)
        assert!(!g.has_edge(0 * 3 + 0, 1 * 3 + 2)); // (0,0)-(1,2): |b-b'|=2
        assert!(g.has_edge(0 * 3 + 1, 0 * 3 + 2)); // same a, adjacent b
    }

    #[test]
    fn strong_degree_identity() {
        // deg(a,b) = (deg_G(a)+1)(deg_H(b)+1) − 1
        let g = family(Family::Cycle, &[4]).unwrap();
        let h = family(Family::Path, &[4]).unwrap();
        let s = strong(&g, &h);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(s.degree(a * 4 + b), (g.degree(a) + 1) * (h.degree(b) + 1) - 1);
            }
        }
    }

    #[test]
    fn strong_power_folds() {
        let k2 = family(Family::Complete, &[2]).unwrap();
        let cube = strong_power(&[k2.clone(), k2.clone(), k2.clone()]).unwrap();
        assert_eq!(cube, family(Family::Complete, &[8]).unwrap());
        assert_eq!(strong_power(&[]), Err(ConstructError::EmptyPower));
        let p3 = family(Family::Path, &[3]).unwrap();
        assert_eq!(strong_power(&[p3.clone()]).unwrap(), p3);
    }
}
