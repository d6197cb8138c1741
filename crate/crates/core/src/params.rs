//! Auxiliary parameters used throughout the corona theorems and the reduction
//! chains: domination number γ, its one-vertex-deleted minimum γ′, vertex
//! cover number β, independence number α, and the minimum 1-locating
//! dominating set.
//!
//! All four solvers reuse the cardinality-ordered scan kernel with the
//! parameter's feasibility written as a cover system:
//! - domination: requirement per vertex w, covered by every s ∈ N[w];
//! - vertex cover: requirement per edge, covered by its endpoints;
//! - 1-locating domination: the domination requirements plus one requirement
//!   per vertex pair {x, y}, covered by x, y, and every s adjacent to exactly
//!   one of them (so members of D are exempt and non-members get pairwise
//!   distinct neighborhood traces N(·) ∩ D);
//! - independence is solved through its complement: α = n − β, and the
//!   complement of a minimum vertex cover is a maximum independent set.

use crate::cover::{BudgetCounter, BudgetExhausted, CoverProblem};
use crate::graph::Graph;
use crate::metric::adjacency_distinguishes;
use crate::solver::{SolveOptions, SolverError};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParamError {
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("gamma_prime needs a graph of order >= 2")]
    TooSmall,
}

/// Certificate for an auxiliary parameter: minimum value, lexicographically
/// least witness, and the hash of the graph it was computed on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParamCertificate {
    pub param: &'static str,
    pub value: usize,
    pub witness: Vec<usize>,
    pub exhaustive: bool,
    pub graph_hash: String,
}

fn solve_cover(
    g: &Graph,
    param: &'static str,
    prob: &CoverProblem,
    floor: usize,
    opts: &SolveOptions,
) -> Result<ParamCertificate, ParamError> {
    let mut budget = BudgetCounter::new(opts.budget);
    for card in floor..=g.order() {
        match prob.scan_card(card, &mut budget) {
            Ok(Some(witness)) => {
                return Ok(ParamCertificate {
                    param,
                    value: card,
                    witness,
                    exhaustive: true,
                    graph_hash: g.hash(),
                });
            }
            Ok(None) => {}
            Err(BudgetExhausted) => {
                return Err(SolverError::BudgetExceeded { budget: opts.budget }.into())
            }
        }
    }
    unreachable!("the whole vertex set dominates, covers, and locates");
}

fn domination_cover(g: &Graph) -> CoverProblem {
    let n = g.order();
    let mut prob = CoverProblem::new(n, n);
    for w in 0..n {
        prob.add_cover(w, w);
        for s in g.neighbors(w) {
            prob.add_cover(s, w);
        }
    }
    prob
}

/// Minimum dominating set (γ). Defined for every graph; isolated vertices
/// simply must belong to the set.
pub fn domination_number(g: &Graph, opts: &SolveOptions) -> Result<ParamCertificate, ParamError> {
    solve_cover(g, "gamma", &domination_cover(g), 0, opts)
}

/// Is `set` dominating? Direct check, independent of the scan kernel.
pub fn is_dominating(g: &Graph, set: &[usize]) -> bool {
    let mut dominated = vec![false; g.order()];
    for &s in set {
        dominated[s] = true;
        for v in g.neighbors(s) {
            dominated[v] = true;
        }
    }
    dominated.into_iter().all(|d| d)
}

/// γ′(G) = min over vertices v of γ(G − v), with the minimizing vertex (least
/// index on ties) and a witness in the labels of the original graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaPrime {
    pub value: usize,
    pub deleted_vertex: usize,
    /// Dominating set of G − deleted_vertex, in original labels.
    pub witness: Vec<usize>,
}

pub fn gamma_prime(g: &Graph, opts: &SolveOptions) -> Result<GammaPrime, ParamError> {
    if g.order() < 2 {
        return Err(ParamError::TooSmall);
    }
    let mut best: Option<GammaPrime> = None;
    for v in 0..g.order() {
        let cert = domination_number(&g.delete_vertex(v).expect("order >= 2"), opts)?;
        if best.as_ref().map_or(true, |b| cert.value < b.value) {
            let witness =
                cert.witness.iter().map(|&u| if u >= v { u + 1 } else { u }).collect();
            best = Some(GammaPrime { value: cert.value, deleted_vertex: v, witness });
        }
    }
    Ok(best.expect("order >= 2"))
}

fn vertex_cover_cover(g: &Graph) -> CoverProblem {
    let edges: Vec<_> = g.edges().collect();
    let mut prob = CoverProblem::new(g.order(), edges.len());
    for (e, &(u, v)) in edges.iter().enumerate() {
        prob.add_cover(u, e);
        prob.add_cover(v, e);
    }
    prob
}

/// Minimum vertex cover (β).
pub fn vertex_cover_number(g: &Graph, opts: &SolveOptions) -> Result<ParamCertificate, ParamError> {
    solve_cover(g, "beta", &vertex_cover_cover(g), 0, opts)
}

/// Is `set` a vertex cover? Direct check.
pub fn is_vertex_cover(g: &Graph, set: &[usize]) -> bool {
    let mut in_set = vec![false; g.order()];
    for &s in set {
        in_set[s] = true;
    }
    g.edges().all(|(u, v)| in_set[u] || in_set[v])
}

/// Maximum independent set size (α = n − β); the witness is the complement of
/// the minimum vertex cover witness.
pub fn independence_number(g: &Graph, opts: &SolveOptions) -> Result<ParamCertificate, ParamError> {
    let vc = vertex_cover_number(g, opts)?;
    let witness: Vec<usize> = (0..g.order()).filter(|v| !vc.witness.contains(v)).collect();
    Ok(ParamCertificate {
        param: "alpha",
        value: g.order() - vc.value,
        witness,
        exhaustive: vc.exhaustive,
        graph_hash: vc.graph_hash,
    })
}

fn locating_dominating_cover(g: &Graph) -> CoverProblem {
    let n = g.order();
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect();
    let mut prob = CoverProblem::new(n, n + pairs.len());
    for w in 0..n {
        prob.add_cover(w, w);
        for s in g.neighbors(w) {
            prob.add_cover(s, w);
        }
    }
    for (p, &(x, y)) in pairs.iter().enumerate() {
        prob.add_cover(x, n + p);
        prob.add_cover(y, n + p);
        for s in 0..n {
            if s != x && s != y && adjacency_distinguishes(g, s, x, y) {
                prob.add_cover(s, n + p);
            }
        }
    }
    prob
}

/// Minimum 1-locating dominating set: dominating, and vertices outside the set
/// have pairwise distinct neighborhood traces inside it.
pub fn min_locating_dominating(
    g: &Graph,
    opts: &SolveOptions,
) -> Result<ParamCertificate, ParamError> {
    solve_cover(g, "locdom", &locating_dominating_cover(g), 0, opts)
}

/// Direct 1-locating-domination check, independent of the scan kernel.
pub fn is_locating_dominating(g: &Graph, set: &[usize]) -> bool {
    if !is_dominating(g, set) {
        return false;
    }
    let mut in_set = vec![false; g.order()];
    for &s in set {
        in_set[s] = true;
    }
    let trace = |v: usize| -> Vec<usize> { set.iter().copied().filter(|&s| g.has_edge(s, v)).collect() };
    let outside: Vec<usize> = (0..g.order()).filter(|&v| !in_set[v]).collect();
    for (i, &x) in outside.iter().enumerate() {
        for &y in &outside[i + 1..] {
            if trace(x) == trace(y) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{family, union, Family};
    use crate::solver::{dimension, DimensionVariant};
    use itertools::Itertools;

    fn opts() -> SolveOptions {
        SolveOptions::default()
    }

    /// Independent minimum-size search over raw subsets.
    fn naive_min<F: Fn(&[usize]) -> bool>(n: usize, feasible: F) -> usize {
        for size in 0..=n {
            if (0..n).combinations(size).any(|s| feasible(&s)) {
                return size;
            }
        }
        unreachable!()
    }

    #[test]
    fn domination_known_values() {
        for (n, want) in [(2, 1), (3, 1), (4, 2), (5, 2), (6, 2), (7, 3), (12, 4)] {
            let p = family(Family::Path, &[n]).unwrap();
            assert_eq!(domination_number(&p, &opts()).unwrap().value, want, "P_{n}");
        }
        let c6 = family(Family::Cycle, &[6]).unwrap();
        assert_eq!(domination_number(&c6, &opts()).unwrap().value, 2);
        let n3 = Graph::empty(3);
        let cert = domination_number(&n3, &opts()).unwrap();
        assert_eq!(cert.value, 3);
        assert_eq!(cert.witness, vec![0, 1, 2]);
    }

    #[test]
    fn domination_matches_naive_and_witness_dominates() {
        let graphs = [
            family(Family::Wheel, &[6]).unwrap(),
            family(Family::CompleteBipartite, &[2, 3]).unwrap(),
            union(&family(Family::Path, &[3]).unwrap(), &family(Family::Cycle, &[4]).unwrap()),
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
                .unwrap(),
        ];
        for g in &graphs {
            let cert = domination_number(g, &opts()).unwrap();
            assert!(is_dominating(g, &cert.witness));
            assert_eq!(cert.value, naive_min(g.order(), |s| is_dominating(g, s)));
        }
    }

    #[test]
    fn gamma_prime_values() {
        let p4 = family(Family::Path, &[4]).unwrap();
        let gp = gamma_prime(&p4, &opts()).unwrap();
        assert_eq!(gp.value, 1); // delete an end: γ(P_3) = 1
        assert_eq!(gp.deleted_vertex, 0);
        let c6 = family(Family::Cycle, &[6]).unwrap();
        assert_eq!(gamma_prime(&c6, &opts()).unwrap().value, 2); // C_6 − v = P_5
        // deleting a star leaf keeps γ = 1; deleting the center would cost 5
        let star = family(Family::Star, &[5]).unwrap();
        let gp = gamma_prime(&star, &opts()).unwrap();
        assert_eq!(gp.value, 1);
        assert_ne!(gp.deleted_vertex, 0);
        assert_eq!(gamma_prime(&Graph::empty(1), &opts()), Err(ParamError::TooSmall));
    }

    #[test]
    fn gamma_prime_witness_in_original_labels() {
        let p5 = family(Family::Path, &[5]).unwrap();
        let gp = gamma_prime(&p5, &opts()).unwrap();
        // the witness dominates G − deleted_vertex; translate and re-check
        let h = p5.delete_vertex(gp.deleted_vertex).unwrap();
        let back: Vec<usize> = gp
            .witness
            .iter()
            .map(|&u| if u > gp.deleted_vertex { u - 1 } else { u })
            .collect();
        assert!(is_dominating(&h, &back));
        assert!(!gp.witness.contains(&gp.deleted_vertex));
    }

    #[test]
    fn deletion_inequalities() {
        // γ(G−v) ≥ γ(G) − 1 for every v, hence γ′ ≥ γ − 1; and γ′ ≤ γ
        for g in [
            family(Family::Path, &[6]).unwrap(),
            family(Family::Cycle, &[7]).unwrap(),
            family(Family::Star, &[4]).unwrap(),
            family(Family::Wheel, &[6]).unwrap(),
        ] {
            let gamma = domination_number(&g, &opts()).unwrap().value;
            for v in 0..g.order() {
                let gv = domination_number(&g.delete_vertex(v).unwrap(), &opts()).unwrap().value;
                assert!(gv + 1 >= gamma, "γ(G−{v}) too small");
            }
            let gp = gamma_prime(&g, &opts()).unwrap().value;
            assert!(gp <= gamma && gp + 1 >= gamma);
        }
    }

    #[test]
    fn vertex_cover_and_independence() {
        for (n, want) in [(2, 1), (3, 1), (4, 2), (5, 2), (6, 3), (12, 6)] {
            let p = family(Family::Path, &[n]).unwrap();
            assert_eq!(vertex_cover_number(&p, &opts()).unwrap().value, want, "P_{n}");
        }
        let c5 = family(Family::Cycle, &[5]).unwrap();
        assert_eq!(vertex_cover_number(&c5, &opts()).unwrap().value, 3);
        let k4 = family(Family::Complete, &[4]).unwrap();
        assert_eq!(independence_number(&k4, &opts()).unwrap().value, 1);

        // α + β = n, witnesses partition, independent set really independent
        for g in [
            family(Family::Wheel, &[7]).unwrap(),
            family(Family::CompleteBipartite, &[3, 4]).unwrap(),
            Graph::empty(4),
        ] {
            let vc = vertex_cover_number(&g, &opts()).unwrap();
            let ind = independence_number(&g, &opts()).unwrap();
            assert_eq!(vc.value + ind.value, g.order());
            assert!(is_vertex_cover(&g, &vc.witness));
            for (i, &u) in ind.witness.iter().enumerate() {
                for &v in &ind.witness[i + 1..] {
                    assert!(!g.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn locating_domination_known_values() {
        let p4 = family(Family::Path, &[4]).unwrap();
        assert_eq!(min_locating_dominating(&p4, &opts()).unwrap().value, 2);
        let k3 = family(Family::Complete, &[3]).unwrap();
        assert_eq!(min_locating_dominating(&k3, &opts()).unwrap().value, 2);
        // two isolated vertices must both join the set
        let n2 = Graph::empty(2);
        let cert = min_locating_dominating(&n2, &opts()).unwrap();
        assert_eq!(cert.value, 2);
        assert_eq!(cert.witness, vec![0, 1]);
    }

    #[test]
    fn locating_domination_structure() {
        let graphs = [
            family(Family::Path, &[6]).unwrap(),
            family(Family::Cycle, &[6]).unwrap(),
            family(Family::Star, &[4]).unwrap(),
            family(Family::Wheel, &[5]).unwrap(),
        ];
        for g in &graphs {
            let cert = min_locating_dominating(g, &opts()).unwrap();
            assert!(is_locating_dominating(g, &cert.witness));
            assert_eq!(cert.value, naive_min(g.order(), |s| is_locating_dominating(g, s)));
            // a 1-locating dominating set is an adjacency generator, so
            // dim_A ≤ locdom; and locdom ≥ γ trivially
            let dim_a = dimension(g, DimensionVariant::Adjacency, &opts()).unwrap().value;
            let gamma = domination_number(g, &opts()).unwrap().value;
            assert!(dim_a <= cert.value && gamma <= cert.value);
            assert!(crate::solver::is_generator(g, &cert.witness, DimensionVariant::Adjacency)
                .unwrap());
        }
    }

    #[test]
    fn certificates_carry_hash_and_param() {
        let g = family(Family::Cycle, &[5]).unwrap();
        let cert = vertex_cover_number(&g, &opts()).unwrap();
        assert_eq!(cert.param, "beta");
        assert_eq!(cert.graph_hash, g.hash());
        assert!(cert.exhaustive);
    }
}
