//! Exact non-dominated set enumeration and the dominance filter.
//!
//! Enumeration always includes every edge with `c1 <= 0`: adding such an edge
//! never raises the cost and never raises the stretch, so each non-dominated
//! value vector is attained by a spanner that contains all of them. The
//! remaining ("free") edges are enumerated exhaustively by bitmask.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Dijkstra, EdgeSet, WeightedGraph};
use crate::objectives::{EvalMode, Evaluator, Rational, Spanner, ValueVector};

pub const DEFAULT_BUDGET: usize = 26;
// masks are u64 and we never want to iterate past 2^40 anyway
const HARD_LIMIT: usize = 40;

/// Non-dominated points sorted by ascending `f1` (hence strictly descending
/// `f2`), optionally with one witness spanner per point.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ParetoFront {
    points: Vec<ValueVector>,
    witnesses: Option<Vec<Spanner>>,
}

impl ParetoFront {
    pub fn points(&self) -> &[ValueVector] {
        &self.points
    }

    pub fn witnesses(&self) -> Option<&[Spanner]> {
        self.witnesses.as_deref()
    }

    pub fn witness_of(&self, point: &ValueVector) -> Option<&Spanner> {
        let i = self.points.binary_search(point).ok()?;
        self.witnesses.as_ref().map(|w| &w[i])
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, point: &ValueVector) -> bool {
        self.points.binary_search(point).is_ok()
    }

    pub fn without_witnesses(mut self) -> Self {
        self.witnesses = None;
        self
    }

    /// Checks the staircase invariant: strictly increasing `f1`, strictly
    /// decreasing `f2`.
    pub fn is_valid(&self) -> bool {
        self.points
            .windows(2)
            .all(|w| w[0].f1 < w[1].f1 && w[0].f2 > w[1].f2)
            && self
                .witnesses
                .as_ref()
                .is_none_or(|w| w.len() == self.points.len())
    }
}

fn witness_key(p: &ValueVector) -> String {
    format!("{},{}", p.f1, p.f2)
}

impl Serialize for ParetoFront {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Witnesses<'a>(&'a [ValueVector], &'a [Spanner]);
        impl Serialize for Witnesses<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.len()))?;
                for (p, w) in self.0.iter().zip(self.1) {
                    map.serialize_entry(&witness_key(p), w)?;
                }
                map.end()
            }
        }
        #[derive(Serialize)]
        struct Out<'a> {
            points: &'a [ValueVector],
            #[serde(skip_serializing_if = "Option::is_none")]
            witnesses: Option<Witnesses<'a>>,
        }
        Out {
            points: &self.points,
            witnesses: self
                .witnesses
                .as_deref()
                .map(|w| Witnesses(&self.points, w)),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ParetoFront {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(Deserialize)]
        struct In {
            points: Vec<ValueVector>,
            #[serde(default)]
            witnesses: Option<BTreeMap<String, Spanner>>,
        }
        let raw = In::deserialize(d)?;
        let witnesses = match raw.witnesses {
            None => None,
            Some(mut map) => Some(
                raw.points
                    .iter()
                    .map(|p| {
                        map.remove(&witness_key(p))
                            .ok_or_else(|| D::Error::custom(format!("no witness for {p}")))
                    })
                    .collect::<std::result::Result<Vec<_>, _>>()?,
            ),
        };
        let front = ParetoFront {
            points: raw.points,
            witnesses,
        };
        if !front.is_valid() {
            return Err(D::Error::custom("points are not a non-dominated staircase"));
        }
        Ok(front)
    }
}

/// The distinct points not dominated by any input point.
pub fn nondominated_filter<I: IntoIterator<Item = ValueVector>>(points: I) -> ParetoFront {
    let mut pts: Vec<ValueVector> = points.into_iter().collect();
    pts.sort();
    pts.dedup();
    let mut out: Vec<ValueVector> = Vec::new();
    for p in pts {
        // sorted by (f1, f2): p survives iff it beats the best f2 seen so far
        if out.last().is_none_or(|last| p.f2 < last.f2) {
            out.push(p);
        }
    }
    ParetoFront {
        points: out,
        witnesses: None,
    }
}

/// Solver knobs shared by the enumeration-based operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Maximum number of edges with `c1 > 0`.
    pub budget: usize,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    pub witnesses: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            budget: DEFAULT_BUDGET,
            jobs: None,
            witnesses: true,
        }
    }
}

impl SolveOptions {
    pub fn with_budget(budget: usize) -> Self {
        SolveOptions {
            budget,
            ..Default::default()
        }
    }
}

/// Exact non-dominated set of `g`, one witness per point.
pub fn enumerate_front(g: &WeightedGraph, budget: usize) -> Result<ParetoFront> {
    enumerate_front_with(g, &SolveOptions::with_budget(budget))
}

pub fn enumerate_front_with(g: &WeightedGraph, opts: &SolveOptions) -> Result<ParetoFront> {
    let space = SubsetSpace::new(g, opts.budget)?;
    let stairs = space.search(
        opts.jobs,
        Staircase::default,
        |acc, mask, value| acc.insert(*value, mask),
        Staircase::merge,
    )?;
    let (points, masks): (Vec<_>, Vec<_>) = stairs.steps.into_iter().map(|(f1, (f2, m))| {
        (ValueVector::new(f1, f2), m)
    }).unzip();
    let witnesses = opts
        .witnesses
        .then(|| masks.iter().map(|&m| Spanner::new(space.subset(m))).collect());
    Ok(ParetoFront { points, witnesses })
}

/// Non-dominated points seen so far, keyed by `f1`, each with the smallest
/// mask attaining it.
#[derive(Debug, Default)]
struct Staircase {
    steps: BTreeMap<i64, (Rational, u64)>,
}

impl Staircase {
    fn insert(&mut self, p: ValueVector, mask: u64) {
        if let Some((&f1, (f2, m))) = self.steps.range_mut(..=p.f1).next_back() {
            if *f2 < p.f2 {
                return;
            }
            if *f2 == p.f2 {
                // equal point, or dominated by a cheaper one
                if f1 == p.f1 {
                    *m = (*m).min(mask);
                }
                return;
            }
        }
        let doomed: Vec<i64> = self
            .steps
            .range(p.f1..)
            .take_while(|(_, (f2, _))| *f2 >= p.f2)
            .map(|(&f1, _)| f1)
            .collect();
        for f1 in doomed {
            self.steps.remove(&f1);
        }
        self.steps.insert(p.f1, (p.f2, mask));
    }

    fn merge(mut self, other: Staircase) -> Staircase {
        let (mut big, small) = if self.steps.len() >= other.steps.len() {
            (std::mem::take(&mut self), other)
        } else {
            (other, self)
        };
        for (f1, (f2, m)) in small.steps {
            big.insert(ValueVector::new(f1, f2), m);
        }
        big
    }
}

/// The enumeration domain: fixed edges (`c1 <= 0`) plus every subset of the
/// free edges, indexed by bitmask over the free edges in edge-id order.
pub(crate) struct SubsetSpace<'g> {
    eval: Evaluator<'g>,
    fixed: EdgeSet,
    free: Vec<usize>,
}

impl<'g> SubsetSpace<'g> {
    pub(crate) fn new(g: &'g WeightedGraph, budget: usize) -> Result<Self> {
        let free: Vec<usize> = (0..g.edge_count()).filter(|&i| g.edge(i).c1 > 0).collect();
        if free.len() > budget.min(HARD_LIMIT) {
            return Err(Error::BudgetExceeded {
                free: free.len(),
                budget: budget.min(HARD_LIMIT),
            });
        }
        let fixed = (0..g.edge_count()).filter(|&i| g.edge(i).c1 <= 0).collect();
        Ok(SubsetSpace {
            eval: Evaluator::new(g),
            fixed,
            free,
        })
    }

    pub(crate) fn subset(&self, mask: u64) -> EdgeSet {
        let mut s = self.fixed.clone();
        for (bit, &id) in self.free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                s.insert(id);
            }
        }
        s
    }

    /// Folds `visit` over every feasible subset in ascending mask order within
    /// each chunk; chunks are combined with `merge`.
    pub(crate) fn search<A, I, V, M>(&self, jobs: Option<usize>, init: I, visit: V, merge: M) -> Result<A>
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        V: Fn(&mut A, u64, &ValueVector) + Sync + Send,
        M: Fn(A, A) -> A + Sync + Send,
    {
        let total: u64 = 1 << self.free.len();
        let chunk_bits = self.free.len().saturating_sub(6).min(16) as u32;
        let chunk = 1u64 << chunk_bits;
        let chunks = total / chunk;
        let run = || {
            (0..chunks)
                .into_par_iter()
                .map(|c| {
                    let mut acc = init();
                    let mut scratch = Dijkstra::new(self.eval.graph().vertex_count());
                    let mut set = self.fixed.clone();
                    for mask in c * chunk..(c + 1) * chunk {
                        for (bit, &id) in self.free.iter().enumerate() {
                            if mask >> bit & 1 == 1 {
                                set.insert(id);
                            } else {
                                set.remove(id);
                            }
                        }
                        if !self.eval.is_feasible(&set) {
                            continue;
                        }
                        let value = self.eval.value_unchecked(&set, EvalMode::EdgeRestricted, &mut scratch);
                        visit(&mut acc, mask, &value);
                    }
                    acc
                })
                .reduce(&init, &merge)
        };
        match jobs {
            None => Ok(run()),
            Some(n) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(n.max(1))
                    .build()
                    .map_err(|e| Error::ThreadPool(e.to_string()))?;
                Ok(pool.install(run))
            }
        }
    }
}

/// Groups points by value, keeping the first witness (used by oracles that
/// produce spanners in a known order).
pub fn front_from_witnessed<I>(items: I) -> ParetoFront
where
    I: IntoIterator<Item = (ValueVector, Spanner)>,
{
    let mut first: HashMap<ValueVector, Spanner> = HashMap::new();
    for (v, s) in items {
        first.entry(v).or_insert(s);
    }
    let mut front = nondominated_filter(first.keys().copied());
    let witnesses = front.points.iter().map(|p| first[p].clone()).collect();
    front.witnesses = Some(witnesses);
    front
}
