//! Exact tools for the biobjective spanner problem: minimize total edge cost
//! `f1` and stretch factor `f2` over connected (or reachability-preserving)
//! edge subsets.
//!
//! The crate evaluates spanners with exact rational stretch, enumerates
//! non-dominated sets and extreme points for small instances, builds the
//! standard hardness instance families, and checks their structural
//! properties computationally.

pub mod buco;
pub mod error;
pub mod extreme;
pub mod generators;
pub mod graph;
pub mod objectives;
pub mod pareto;
pub mod verify;

pub use buco::{buco_brute, buco_dp, buco_value, BucoInstance};
pub use error::{Error, Result, Violation};
pub use extreme::{extreme_dichotomic, extreme_from_front, weighted_sum_min, ExtremeCertificate, Lambda, WeightedSumMin};
pub use graph::{reachable_pairs, shortest_distances, validate_instance, DistanceMap, Edge, EdgeSet, InstanceData, WeightedGraph};
pub use objectives::{dominates, eval, is_spanner, EvalMode, Evaluator, Rational, Spanner, ValueVector};
pub use pareto::{enumerate_front, enumerate_front_with, nondominated_filter, ParetoFront, SolveOptions, DEFAULT_BUDGET};
pub use verify::Report;
