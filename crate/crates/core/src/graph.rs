//! Instance representation, shortest paths under `c2`, and reachability.
//!
//! Edges are identified by their index in the instance's edge list. Graphs are
//! validated once on construction and never mutated afterwards, so they can be
//! shared freely between worker threads.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, HashMap};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result, Violation};

/// One edge (or arc, for directed instances) with its cost `c1` and length `c2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub c1: i64,
    pub c2: i64,
}

impl Edge {
    pub fn new(u: usize, v: usize, c1: i64, c2: i64) -> Self {
        Edge { u, v, c1, c2 }
    }
}

/// Unvalidated instance data, exactly as it appears on the wire.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceData {
    pub directed: bool,
    pub vertices: usize,
    pub edges: Vec<Edge>,
}

/// A validated instance. Construct with [`WeightedGraph::new`] or by
/// deserializing instance JSON, both of which run [`validate_instance`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    data: InstanceData,
    // (neighbour, edge id); undirected edges appear in both endpoint lists
    out_adj: Vec<Vec<(usize, usize)>>,
}

impl WeightedGraph {
    pub fn new(directed: bool, vertices: usize, edges: Vec<Edge>) -> Result<Self> {
        Self::from_data(InstanceData {
            directed,
            vertices,
            edges,
        })
    }

    pub fn from_data(data: InstanceData) -> Result<Self> {
        validate_instance(&data).map_err(Error::InvalidInstance)?;
        let mut out_adj = vec![Vec::new(); data.vertices];
        for (id, e) in data.edges.iter().enumerate() {
            out_adj[e.u].push((e.v, id));
            if !data.directed {
                out_adj[e.v].push((e.u, id));
            }
        }
        Ok(WeightedGraph { data, out_adj })
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, JsonInstanceError> {
        let data: InstanceData = serde_json::from_str(text).map_err(JsonInstanceError::Parse)?;
        Self::from_data(data).map_err(JsonInstanceError::Invalid)
    }

    pub fn is_directed(&self) -> bool {
        self.data.directed
    }

    pub fn vertex_count(&self) -> usize {
        self.data.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.data.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.data.edges
    }

    pub fn edge(&self, id: usize) -> &Edge {
        &self.data.edges[id]
    }

    pub fn data(&self) -> &InstanceData {
        &self.data
    }

    /// Outgoing `(neighbour, edge id)` pairs of `v`.
    pub fn neighbours(&self, v: usize) -> &[(usize, usize)] {
        &self.out_adj[v]
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.edge_count())
    }

    /// Whether every edge has weights `(1, 1)`.
    pub fn is_unweighted(&self) -> bool {
        self.data.edges.iter().all(|e| e.c1 == 1 && e.c2 == 1)
    }

    /// Vertex degrees: number of incident edges (undirected) or in- plus
    /// out-arcs (directed). Simple graphs make both notions agree with the
    /// number of adjacent vertices in the undirected case.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count()];
        for e in &self.data.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Checks that every id in `set` is an edge of this instance.
    pub fn check_edge_ids(&self, set: &EdgeSet) -> Result<()> {
        match set.iter().find(|&id| id >= self.edge_count()) {
            Some(edge) => Err(Error::BadEdgeId {
                edge,
                edges: self.edge_count(),
            }),
            None => Ok(()),
        }
    }
}

impl Serialize for WeightedGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.data.serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightedGraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let data = InstanceData::deserialize(d)?;
        WeightedGraph::from_data(data).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum JsonInstanceError {
    #[error("malformed instance JSON: {0}")]
    Parse(serde_json::Error),
    #[error(transparent)]
    Invalid(Error),
}

/// Lists every violated instance invariant, or `Ok(())` if there are none.
pub fn validate_instance(data: &InstanceData) -> std::result::Result<(), Vec<Violation>> {
    let mut out = Vec::new();
    let n = data.vertices;
    if n == 0 {
        out.push(Violation::NoVertices);
    }
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    let mut uf = UnionFind::new(n);
    for (id, e) in data.edges.iter().enumerate() {
        let mut ids_ok = true;
        for vertex in [e.u, e.v] {
            if vertex >= n {
                out.push(Violation::BadVertexId { edge: id, vertex });
                ids_ok = false;
            }
        }
        if e.c2 <= 0 {
            out.push(Violation::NonpositiveC2 { edge: id, c2: e.c2 });
        }
        if e.u == e.v {
            out.push(Violation::SelfLoop { edge: id });
            continue;
        }
        let key = if data.directed || e.u < e.v {
            (e.u, e.v)
        } else {
            (e.v, e.u)
        };
        if let Some(&first) = seen.get(&key) {
            out.push(Violation::ParallelEdge { first, second: id });
        } else {
            seen.insert(key, id);
        }
        if ids_ok {
            uf.union(e.u, e.v);
        }
    }
    if n > 0 && uf.components() != 1 {
        out.push(Violation::Disconnected);
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

/// Growable bitset of edge ids.
#[derive(Clone, Default)]
pub struct EdgeSet {
    words: Vec<u64>,
}

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet::default()
    }

    pub fn with_capacity(edges: usize) -> Self {
        EdgeSet {
            words: vec![0; edges.div_ceil(64)],
        }
    }

    /// The set `{0, .., edges - 1}`.
    pub fn full(edges: usize) -> Self {
        let mut s = EdgeSet::with_capacity(edges);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            let count = (edges - lo).min(64);
            *w = if count == 64 { u64::MAX } else { (1u64 << count) - 1 };
        }
        s
    }

    pub fn insert(&mut self, id: usize) -> bool {
        let (w, b) = (id / 64, id % 64);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, id: usize) -> bool {
        let (w, b) = (id / 64, id % 64);
        match self.words.get_mut(w) {
            Some(word) => {
                let had = *word & (1 << b) != 0;
                *word &= !(1 << b);
                had
            }
            None => false,
        }
    }

    #[inline]
    pub fn contains(&self, id: usize) -> bool {
        self.words
            .get(id / 64)
            .is_some_and(|w| w & (1 << (id % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, &w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    /// Ascending edge ids.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = EdgeSet::new();
        for id in iter {
            s.insert(id);
        }
        s
    }
}

impl PartialEq for EdgeSet {
    fn eq(&self, other: &Self) -> bool {
        let n = self.words.len().max(other.words.len());
        (0..n).all(|i| {
            self.words.get(i).copied().unwrap_or(0) == other.words.get(i).copied().unwrap_or(0)
        })
    }
}

impl Eq for EdgeSet {}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for EdgeSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for EdgeSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let ids = Vec::<usize>::deserialize(d)?;
        Ok(ids.into_iter().collect())
    }
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            components: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `true` if `a` and `b` were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.components -= 1;
        true
    }

    pub fn components(&self) -> usize {
        self.components
    }
}

/// Single-source `c2` distances; `None` marks an unreachable vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceMap {
    pub source: usize,
    pub dist: Vec<Option<u64>>,
}

impl DistanceMap {
    pub fn get(&self, v: usize) -> Option<u64> {
        self.dist[v]
    }
}

/// Exact `c2` shortest-path distances from `source` in the subgraph `(V, subset)`.
pub fn shortest_distances(g: &WeightedGraph, subset: &EdgeSet, source: usize) -> DistanceMap {
    let mut scratch = Dijkstra::new(g.vertex_count());
    scratch.run(g, subset, source);
    DistanceMap {
        source,
        dist: scratch.dist.clone(),
    }
}

/// Reusable Dijkstra buffers for repeated runs on subgraphs of one instance.
pub(crate) struct Dijkstra {
    pub(crate) dist: Vec<Option<u64>>,
    heap: BinaryHeap<Reverse<(u64, usize)>>,
}

impl Dijkstra {
    pub(crate) fn new(n: usize) -> Self {
        Dijkstra {
            dist: vec![None; n],
            heap: BinaryHeap::new(),
        }
    }

    pub(crate) fn run(&mut self, g: &WeightedGraph, subset: &EdgeSet, source: usize) {
        self.dist.iter_mut().for_each(|d| *d = None);
        self.heap.clear();
        self.dist[source] = Some(0);
        self.heap.push(Reverse((0, source)));
        while let Some(Reverse((d, u))) = self.heap.pop() {
            if self.dist[u].is_some_and(|best| d > best) {
                continue;
            }
            for &(v, id) in g.neighbours(u) {
                if !subset.contains(id) {
                    continue;
                }
                let nd = d + g.edge(id).c2 as u64;
                if self.dist[v].is_none_or(|cur| nd < cur) {
                    self.dist[v] = Some(nd);
                    self.heap.push(Reverse((nd, v)));
                }
            }
        }
    }
}

/// Vertices reachable from `source` using only edges in `subset`.
pub(crate) fn reachable_from(g: &WeightedGraph, subset: &EdgeSet, source: usize) -> Vec<bool> {
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = vec![source];
    seen[source] = true;
    while let Some(u) = stack.pop() {
        for &(v, id) in g.neighbours(u) {
            if subset.contains(id) && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen
}

/// All ordered pairs `(u, v)`, `u != v`, with a `u`-`v` path in `(V, subset)`.
pub fn reachable_pairs(g: &WeightedGraph, subset: &EdgeSet) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for u in 0..g.vertex_count() {
        for (v, hit) in reachable_from(g, subset, u).into_iter().enumerate() {
            if hit && v != u {
                out.insert((u, v));
            }
        }
    }
    out
}
