//! Exact dimension solvers.
//!
//! Every variant is decided by the same pattern: a vertex set S is a generator
//! iff every relevant pair of vertices outside S is distinguished by some
//! member of S, where the pair universe and the distinguishing predicate depend
//! on the variant:
//!
//! | variant            | pairs            | predicate                         |
//! |--------------------|------------------|-----------------------------------|
//! | `dim` (metric)     | all pairs        | `d(s,x) ≠ d(s,y)`                 |
//! | `adim` (adjacency) | all pairs        | `\|N(s) ∩ {x,y}\| = 1`            |
//! | `ldim` (local)     | adjacent pairs   | `d(s,x) ≠ d(s,y)`                 |
//! | `ladim`            | adjacent pairs   | `\|N(s) ∩ {x,y}\| = 1`            |
//! | `trunc:k`          | all pairs        | `min(d,k)(s,x) ≠ min(d,k)(s,y)`   |
//!
//! Vertices of a pair also cover it (the pair leaves the universe once an
//! endpoint enters S). This turns each variant into a monotone cover problem
//! handled by the shared scan kernel; the scan starts at the twin-class lower
//! bound (twins cannot be distinguished by third vertices, so all but one
//! member of each class must join S — restricted to true-twin classes for the
//! local variants, whose universe holds only adjacent pairs), proceeds in
//! increasing cardinality, and returns the lexicographically least minimum
//! witness.
//!
//! The metric variants require a connected graph; truncation is total, so
//! `trunc:k` works on disconnected graphs and `trunc:2` coincides with `adim`.
//! By convention every variant is 0 on the one-vertex graph, and the local
//! variants are 0 on edgeless graphs (no adjacent pairs to distinguish).

use crate::cover::{BudgetCounter, BudgetExhausted, CoverProblem};
use crate::graph::Graph;
use crate::metric::{self, MetricMatrix, Truncation};
use serde::ser::Serializer;
use serde::Serialize;
use thiserror::Error;

/// Default scan budget (nodes); a few seconds of work on small word counts.
pub const DEFAULT_NODE_BUDGET: u64 = 2_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimensionVariant {
    Metric,
    Adjacency,
    LocalMetric,
    LocalAdjacency,
    /// Metric under `d_{G,k} = min(d_G, k)`, `k ≥ 1`. `Truncated(2)` coincides
    /// with `Adjacency`; `Truncated(k)` with `Metric` once `k ≥ diam(G)`.
    Truncated(u32),
}

impl DimensionVariant {
    /// Quantify only over adjacent pairs?
    pub fn is_local(self) -> bool {
        matches!(self, DimensionVariant::LocalMetric | DimensionVariant::LocalAdjacency)
    }

    /// Metric-valued variants need every distance finite.
    pub fn requires_connected(self) -> bool {
        matches!(self, DimensionVariant::Metric | DimensionVariant::LocalMetric)
    }

    /// The CLI spelling: `dim`, `adim`, `ldim`, `ladim`, `trunc:<k>`.
    pub fn name(self) -> String {
        match self {
            DimensionVariant::Metric => "dim".into(),
            DimensionVariant::Adjacency => "adim".into(),
            DimensionVariant::LocalMetric => "ldim".into(),
            DimensionVariant::LocalAdjacency => "ladim".into(),
            DimensionVariant::Truncated(k) => format!("trunc:{k}"),
        }
    }
}

impl Serialize for DimensionVariant {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.name())
    }
}

impl std::str::FromStr for DimensionVariant {
    type Err = SolverError;

    fn from_str(s: &str) -> Result<Self, SolverError> {
        match s {
            "dim" => Ok(DimensionVariant::Metric),
            "adim" => Ok(DimensionVariant::Adjacency),
            "ldim" => Ok(DimensionVariant::LocalMetric),
            "ladim" => Ok(DimensionVariant::LocalAdjacency),
            _ => {
                if let Some(k) = s.strip_prefix("trunc:") {
                    let k: u32 = k
                        .parse()
                        .map_err(|_| SolverError::UnknownVariant(s.to_string()))?;
                    if k < 1 {
                        return Err(SolverError::InvalidTruncation(k));
                    }
                    Ok(DimensionVariant::Truncated(k))
                } else {
                    Err(SolverError::UnknownVariant(s.to_string()))
                }
            }
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("metric variant requires a connected graph")]
    Disconnected,
    #[error("truncation k={0} invalid: need k >= 1")]
    InvalidTruncation(u32),
    #[error("unknown variant {0:?} (expected dim, adim, ldim, ladim, or trunc:<k>)")]
    UnknownVariant(String),
    #[error("node budget of {budget} exhausted before the scan completed")]
    BudgetExceeded { budget: u64 },
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Scan node budget; exceeding it is an explicit error, never a wrong or
    /// approximate answer.
    pub budget: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { budget: DEFAULT_NODE_BUDGET }
    }
}

/// Proof object for one dimension computation. `witness` is the
/// lexicographically least minimum generator; `exhaustive` records that every
/// smaller cardinality was ruled out (by scan plus the sound twin bound), so
/// re-running any smaller cardinality returns nothing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisCertificate {
    pub variant: DimensionVariant,
    pub value: usize,
    pub witness: Vec<usize>,
    pub exhaustive: bool,
    pub graph_hash: String,
}

/// Outcome of a bounded decision `dim ≤ k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    /// A generator of size ≤ k, lexicographically least at its cardinality.
    AtMost { witness: Vec<usize> },
    /// Every set of size ≤ k was ruled out.
    Exceeds,
}

fn validate(g: &Graph, variant: DimensionVariant) -> Result<(), SolverError> {
    if let DimensionVariant::Truncated(k) = variant {
        if k < 1 {
            return Err(SolverError::InvalidTruncation(k));
        }
    }
    if variant.requires_connected() && !g.is_connected() {
        return Err(SolverError::Disconnected);
    }
    Ok(())
}

/// The pair universe for a variant: adjacent pairs for local variants, all
/// unordered pairs otherwise.
fn pair_universe(g: &Graph, variant: DimensionVariant) -> Vec<(usize, usize)> {
    if variant.is_local() {
        g.edges().collect()
    } else {
        let n = g.order();
        (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect()
    }
}

fn metric_for(g: &Graph, variant: DimensionVariant) -> Option<MetricMatrix> {
    match variant {
        DimensionVariant::Metric | DimensionVariant::LocalMetric => {
            Some(metric::all_pairs_distances(g, Truncation::Unbounded))
        }
        DimensionVariant::Truncated(k) => {
            Some(metric::all_pairs_distances(g, Truncation::At(k)))
        }
        _ => None,
    }
}

#[inline]
fn separates(
    g: &Graph,
    m: Option<&MetricMatrix>,
    s: usize,
    x: usize,
    y: usize,
) -> bool {
    match m {
        Some(m) => metric::distinguishes(m, s, x, y),
        None => metric::adjacency_distinguishes(g, s, x, y),
    }
}

/// Is `set` a generator of `g` for the given variant? Checks the definition
/// directly (every relevant pair outside the set has a distinguishing member),
/// independent of the scan kernel, so it can confirm witnesses produced
/// elsewhere.
pub fn is_generator(
    g: &Graph,
    set: &[usize],
    variant: DimensionVariant,
) -> Result<bool, SolverError> {
    validate(g, variant)?;
    for &v in set {
        if v >= g.order() {
            return Err(SolverError::VertexOutOfRange { vertex: v, order: g.order() });
        }
    }
    let m = metric_for(g, variant);
    let mut in_set = vec![false; g.order()];
    for &v in set {
        in_set[v] = true;
    }
    for (x, y) in pair_universe(g, variant) {
        if in_set[x] || in_set[y] {
            continue;
        }
        if !set.iter().any(|&s| separates(g, m.as_ref(), s, x, y)) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn build_cover(g: &Graph, variant: DimensionVariant) -> CoverProblem {
    let pairs = pair_universe(g, variant);
    let m = metric_for(g, variant);
    let n = g.order();
    let mut prob = CoverProblem::new(n, pairs.len());
    for (p, &(x, y)) in pairs.iter().enumerate() {
        prob.add_cover(x, p);
        prob.add_cover(y, p);
        for s in 0..n {
            if s != x && s != y && separates(g, m.as_ref(), s, x, y) {
                prob.add_cover(s, p);
            }
        }
    }
    prob
}

/// Twin lower bound `n − t` (t = number of twin classes): every generator must
/// contain all but one member of each twin class, for the metric, adjacency,
/// and truncated variants alike (twins have equal distance vectors, and
/// entrywise min preserves equality).
pub fn twin_lower_bound(g: &Graph) -> usize {
    g.order() - g.twin_partition().class_count()
}

/// Variant-aware scan floor. Local universes hold only adjacent pairs, so only
/// true-twin classes (which induce cliques) force members in.
fn scan_floor(g: &Graph, variant: DimensionVariant) -> usize {
    let tp = g.twin_partition();
    if variant.is_local() {
        tp.true_classes().map(|c| c.members.len() - 1).sum()
    } else {
        g.order() - tp.class_count()
    }
}

fn budget_err(opts: &SolveOptions) -> SolverError {
    SolverError::BudgetExceeded { budget: opts.budget }
}

/// Exact dimension with certificate. Scans cardinalities from the twin floor
/// upward; the first feasible set (lex-least at the minimum cardinality) is the
/// witness.
pub fn dimension(
    g: &Graph,
    variant: DimensionVariant,
    opts: &SolveOptions,
) -> Result<BasisCertificate, SolverError> {
    validate(g, variant)?;
    let prob = build_cover(g, variant);
    let mut budget = BudgetCounter::new(opts.budget);
    for card in scan_floor(g, variant)..=g.order() {
        match prob.scan_card(card, &mut budget) {
            Ok(Some(witness)) => {
                debug_assert!(prob.is_feasible(&witness));
                return Ok(BasisCertificate {
                    variant,
                    value: card,
                    witness,
                    exhaustive: true,
                    graph_hash: g.hash(),
                });
            }
            Ok(None) => {}
            Err(BudgetExhausted) => return Err(budget_err(opts)),
        }
    }
    unreachable!("the whole vertex set is always a generator");
}

/// All minimum generators (bases), lexicographic order.
pub fn enumerate_min_bases(
    g: &Graph,
    variant: DimensionVariant,
    opts: &SolveOptions,
) -> Result<Vec<Vec<usize>>, SolverError> {
    let cert = dimension(g, variant, opts)?;
    let prob = build_cover(g, variant);
    let mut budget = BudgetCounter::new(opts.budget);
    prob.scan_all(cert.value, &mut budget).map_err(|BudgetExhausted| budget_err(opts))
}

/// Decide `dimension ≤ k` without necessarily finding the true minimum.
/// Sound in both directions: `AtMost` carries a verifiable witness, `Exceeds`
/// means every cardinality ≤ k was exhausted (or excluded by the twin bound).
pub fn decide_le(
    g: &Graph,
    variant: DimensionVariant,
    k: usize,
    opts: &SolveOptions,
) -> Result<Decision, SolverError> {
    validate(g, variant)?;
    let floor = scan_floor(g, variant);
    if floor > k {
        return Ok(Decision::Exceeds);
    }
    let prob = build_cover(g, variant);
    let mut budget = BudgetCounter::new(opts.budget);
    for card in floor..=k.min(g.order()) {
        match prob.scan_card(card, &mut budget) {
            Ok(Some(witness)) => return Ok(Decision::AtMost { witness }),
            Ok(None) => {}
            Err(BudgetExhausted) => return Err(budget_err(opts)),
        }
    }
    if k >= g.order() {
        // the whole vertex set is vacuously a generator
        return Ok(Decision::AtMost { witness: g.vertices().collect() });
    }
    Ok(Decision::Exceeds)
}
