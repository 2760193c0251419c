//! Spanner feasibility, the cost and stretch objectives, and dominance.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{reachable_from, Dijkstra, EdgeSet, UnionFind, WeightedGraph};

/// Exact rational number, always stored reduced with a positive denominator.
pub type Rational = Ratio<i64>;

/// Serde adapter for the `[numerator, denominator]` wire format.
pub mod rational_pair {
    use super::Rational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq([*r.numer(), *r.denom()])
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let [n, den] = <[i64; 2]>::deserialize(d)?;
        if den == 0 {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(Rational::new(n, den))
    }
}

/// `(f1, f2)`: total cost and stretch factor of a spanner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ValueVector {
    pub f1: i64,
    #[serde(with = "rational_pair")]
    pub f2: Rational,
}

impl ValueVector {
    pub fn new(f1: i64, f2: Rational) -> Self {
        ValueVector { f1, f2 }
    }

    pub fn integral(f1: i64, f2: i64) -> Self {
        ValueVector {
            f1,
            f2: Rational::from_integer(f2),
        }
    }
}

impl fmt::Display for ValueVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.f1, self.f2)
    }
}

/// `a` dominates `b`: `a != b` and `a` is componentwise no worse.
pub fn dominates(a: &ValueVector, b: &ValueVector) -> bool {
    a != b && a.f1 <= b.f1 && a.f2 <= b.f2
}

/// An edge subset of some instance. Feasibility is checked by the operations
/// that consume it, not on construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spanner {
    pub edges: EdgeSet,
}

impl Spanner {
    pub fn new(edges: EdgeSet) -> Self {
        Spanner { edges }
    }
}

impl FromIterator<usize> for Spanner {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Spanner::new(iter.into_iter().collect())
    }
}

/// Which vertex pairs the stretch maximum ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EvalMode {
    /// Endpoint pairs of the instance's edges (arcs, if directed).
    #[default]
    EdgeRestricted,
    /// Every ordered pair connected in the full instance.
    AllPairs,
}

/// Connected subgraph (undirected) or reachability-preserving arc set (directed).
pub fn is_spanner(g: &WeightedGraph, edges: &EdgeSet) -> bool {
    Evaluator::new(g).is_feasible(edges)
}

/// Value vector of a spanner, with `f2` computed over the pair set of `mode`.
pub fn eval(g: &WeightedGraph, spanner: &Spanner, mode: EvalMode) -> Result<ValueVector> {
    g.check_edge_ids(&spanner.edges)?;
    Evaluator::new(g).value(&spanner.edges, mode)
}

// (target, d^E(source, target)) lists, grouped by source
type PairGroups = Vec<(usize, Vec<(usize, u64)>)>;

/// Precomputed full-graph distances for evaluating many edge subsets of one
/// instance. Cheap to share across threads.
pub struct Evaluator<'g> {
    g: &'g WeightedGraph,
    edge_pairs: PairGroups,
    all_pairs: PairGroups,
}

impl<'g> Evaluator<'g> {
    pub fn new(g: &'g WeightedGraph) -> Self {
        let n = g.vertex_count();
        let full = g.all_edges();
        let mut dijkstra = Dijkstra::new(n);
        let mut full_dist = Vec::with_capacity(n);
        for s in 0..n {
            dijkstra.run(g, &full, s);
            full_dist.push(dijkstra.dist.clone());
        }
        let mut by_source: Vec<Vec<(usize, u64)>> = vec![Vec::new(); n];
        for e in g.edges() {
            let d = full_dist[e.u][e.v].expect("edge endpoints are connected");
            by_source[e.u].push((e.v, d));
        }
        let edge_pairs = group(by_source);
        let all_pairs = group(
            (0..n)
                .map(|u| {
                    (0..n)
                        .filter(|&v| v != u)
                        .filter_map(|v| full_dist[u][v].map(|d| (v, d)))
                        .collect()
                })
                .collect(),
        );
        Evaluator {
            g,
            edge_pairs,
            all_pairs,
        }
    }

    pub fn graph(&self) -> &'g WeightedGraph {
        self.g
    }

    pub fn is_feasible(&self, edges: &EdgeSet) -> bool {
        let g = self.g;
        if g.is_directed() {
            // arcs of E simulated by paths in S is equivalent to S preserving
            // all reachability, because S is a subset of E
            self.edge_pairs.iter().all(|(u, targets)| {
                let seen = reachable_from(g, edges, *u);
                targets.iter().all(|&(v, _)| seen[v])
            })
        } else {
            let mut uf = UnionFind::new(g.vertex_count());
            for id in edges.iter() {
                let e = g.edge(id);
                uf.union(e.u, e.v);
            }
            uf.components() == 1
        }
    }

    pub fn cost(&self, edges: &EdgeSet) -> i64 {
        edges.iter().map(|id| self.g.edge(id).c1).sum()
    }

    pub fn value(&self, edges: &EdgeSet, mode: EvalMode) -> Result<ValueVector> {
        if !self.is_feasible(edges) {
            return Err(Error::InfeasibleSpanner);
        }
        let mut scratch = Dijkstra::new(self.g.vertex_count());
        Ok(self.value_unchecked(edges, mode, &mut scratch))
    }

    /// Value of a subset already known to be feasible.
    pub(crate) fn value_unchecked(
        &self,
        edges: &EdgeSet,
        mode: EvalMode,
        scratch: &mut Dijkstra,
    ) -> ValueVector {
        ValueVector {
            f1: self.cost(edges),
            f2: self.stretch(edges, mode, scratch),
        }
    }

    fn stretch(&self, edges: &EdgeSet, mode: EvalMode, scratch: &mut Dijkstra) -> Rational {
        let groups = match mode {
            EvalMode::EdgeRestricted => &self.edge_pairs,
            EvalMode::AllPairs => &self.all_pairs,
        };
        let (mut num, mut den) = (1u64, 1u64);
        for (source, targets) in groups {
            scratch.run(self.g, edges, *source);
            for &(v, full) in targets {
                let sub = scratch.dist[v].expect("feasible spanner keeps pairs connected");
                if cmp_frac(sub, full, num, den) == Ordering::Greater {
                    (num, den) = (sub, full);
                }
            }
        }
        Rational::new(num as i64, den as i64)
    }
}

fn group(by_source: Vec<Vec<(usize, u64)>>) -> PairGroups {
    by_source
        .into_iter()
        .enumerate()
        .filter(|(_, t)| !t.is_empty())
        .collect()
}

fn cmp_frac(a: u64, b: u64, c: u64, d: u64) -> Ordering {
    (a as u128 * d as u128).cmp(&(c as u128 * b as u128))
}
