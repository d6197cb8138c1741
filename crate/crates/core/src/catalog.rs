//! Exhaustive and random enumeration of small graphs, for lattice sweeps and
//! property tests.
//!
//! Labeled enumeration walks every edge subset of K_n (feasible through
//! order 6–7: 2^15 = 32768 graphs at order 6). Isomorphism-reduced catalogs
//! canonicalize by minimizing the edge mask over all vertex permutations,
//! which is exact and affordable up to order 6 (720 permutations).

use crate::graph::Graph;
use rand::Rng;

/// Number of vertex pairs, i.e. bits in a labeled-graph edge mask.
pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

fn pairs_lex(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> =
        pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
    Graph::from_edge_list(n, &edges).expect("mask edges are valid")
}

/// Every labeled graph on `n ≥ 1` vertices, in edge-mask order.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n >= 1 && pair_count(n) <= 40, "labeled enumeration limited to small orders");
    let pairs = pairs_lex(n);
    (0u64..1 << pair_count(n)).map(move |mask| graph_from_mask(n, &pairs, mask))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut all = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, all: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            all.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, all);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut all);
    all
}

/// All graphs on `n ≤ 6` vertices up to isomorphism (canonical edge-mask
/// representatives, ascending), optionally restricted to connected ones.
pub fn graphs_up_to_iso(n: usize, connected_only: bool) -> Vec<Graph> {
    assert!((1..=6).contains(&n), "isomorphism reduction limited to order <= 6");
    let pairs = pairs_lex(n);
    let perms = permutations(n);
    // pair index lookup for remapping masks under a permutation
    let mut idx = vec![vec![0usize; n]; n];
    for (b, &(i, j)) in pairs.iter().enumerate() {
        idx[i][j] = b;
        idx[j][i] = b;
    }
    let mut canonical = std::collections::BTreeSet::new();
    for mask in 0u64..1 << pair_count(n) {
        let mut best = mask;
        for perm in &perms {
            let mut remapped = 0u64;
            let mut bits = mask;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let (i, j) = pairs[b];
                remapped |= 1 << idx[perm[i]][perm[j]];
            }
            best = best.min(remapped);
        }
        canonical.insert(best);
    }
    canonical
        .into_iter()
        .map(|mask| graph_from_mask(n, &pairs, mask))
        .filter(|g| !connected_only || g.is_connected())
        .collect()
}

/// G(n, p) random graph.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Rejection-sample a connected G(n, p) graph; panics if 10000 draws all come
/// out disconnected (use a reasonable `p` for the order at hand).
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    for _ in 0..10_000 {
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
    panic!("no connected G({n},{p}) sample in 10000 draws");
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn labeled_counts() {
        assert_eq!(all_labeled_graphs(3).count(), 8);
        assert_eq!(all_labeled_graphs(4).count(), 64);
        // labeled connected graphs on 4 vertices: 38 (classical count)
        assert_eq!(all_labeled_graphs(4).filter(|g| g.is_connected()).count(), 38);
    }

    #[test]
    fn iso_counts_match_the_literature() {
        // graphs up to isomorphism: 2, 4, 11, 34; connected: 1, 2, 6, 21
        assert_eq!(graphs_up_to_iso(2, false).len(), 2);
        assert_eq!(graphs_up_to_iso(3, false).len(), 4);
        assert_eq!(graphs_up_to_iso(4, false).len(), 11);
        assert_eq!(graphs_up_to_iso(5, false).len(), 34);
        assert_eq!(graphs_up_to_iso(2, true).len(), 1);
        assert_eq!(graphs_up_to_iso(3, true).len(), 2);
        assert_eq!(graphs_up_to_iso(4, true).len(), 6);
        assert_eq!(graphs_up_to_iso(5, true).len(), 21);
    }

    #[test]
    fn random_graphs_are_reproducible() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        assert_eq!(random_graph(&mut a, 8, 0.4), random_graph(&mut b, 8, 0.4));
        let g = random_connected_graph(&mut a, 7, 0.5);
        assert!(g.is_connected());
    }
}
