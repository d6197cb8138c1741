//! Exact solvers for four graph dimension parameters — metric dimension,
//! adjacency dimension, local metric dimension, and local adjacency dimension —
//! together with the generalized truncated variant `d_{G,k} = min(d_G, k)`,
//! graph-product constructors (disjoint union, join, corona, strong product),
//! verifiers for the corona/strong-product/twin dimension formulas, and
//! generator–verifier pairs for the associated NP-hardness reduction chains.
//!
//! Everything is exact: solvers enumerate candidate sets in increasing
//! cardinality under a node budget, so a returned value is provably minimum and
//! a returned witness is the lexicographically least minimum generator. When a
//! budget is too small the solver returns an explicit error, never an
//! approximation.
//!
//! Layout:
//! - [`graph`]: the [`Graph`] type (bitset adjacency), twin partitions,
//!   components, complement/deletion, and the edge-list text format.
//! - [`metric`]: BFS distance matrices with optional truncation, eccentricity /
//!   diameter / radius, and the distinguishing predicates.
//! - [`construct`]: parametric families and the four product constructors.
//! - [`solver`]: dimension solvers and basis certificates.
//! - [`params`]: domination, vertex cover, independence, and 1-locating
//!   domination (auxiliary parameters used by the theorems and reductions).
//! - [`theorems`]: corona classification and the theorem verifiers.
//! - [`reductions`]: 3-SAT formulas, the reduction chains, and the frozen
//!   9-vertex clause gadget with its certificate checks.
//! - [`catalog`]: exhaustive and random small-graph enumeration for sweeps.

pub mod bits;
pub mod catalog;
pub mod construct;
mod cover;
pub mod graph;
pub mod metric;
pub mod params;
pub mod reductions;
pub mod solver;
pub mod theorems;

pub use graph::{Graph, GraphError, TwinClass, TwinKind, TwinPartition};
pub use metric::{MetricMatrix, Truncation, INFINITY};
pub use solver::{BasisCertificate, Decision, DimensionVariant, SolveOptions, SolverError};
