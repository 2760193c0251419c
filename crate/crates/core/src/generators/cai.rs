//! Unit-weight 2-spanner instance built from a 3-CNF formula.
//!
//! Vertex layout: `z = 0`; variable `i` (0-based) owns `x_i = 1 + 4i`,
//! `x̄_i = 2 + 4i`, `y_i = 3 + 4i`, `y'_i = 4 + 4i`; clause `j` owns
//! `v_j = 1 + 4n + j`. Interior vertices of forcing paths follow, in the
//! order the forced edges are created.
//!
//! Edge layout per variable: `z x`, `z x̄`, `z y`, `z y'`, then the forced
//! edges `x x̄`, `x y`, `x y'`, `x̄ y`, `x̄ y'`, each immediately followed by
//! its four forcing-path edges. Per clause: `z v_j`, then one forced edge to
//! each literal vertex in clause order.

use serde::{Deserialize, Serialize};

use super::{CnfFormula, GraphBuilder};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, WeightedGraph};
use crate::objectives::Spanner;

/// A forced edge `{u, v}` and its two forcing paths `u - p - v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcedEdge {
    pub edge: usize,
    /// `[u p, p v]` for each of the two paths.
    pub paths: [[usize; 2]; 2],
}

impl ForcedEdge {
    pub fn edge_ids(&self) -> [usize; 5] {
        let [[a, b], [c, d]] = self.paths;
        [self.edge, a, b, c, d]
    }
}

/// Adds `{u, v}` plus two fresh 2-paths between `u` and `v`, all with
/// weights `(1, 1)`.
pub fn force_edge(b: &mut GraphBuilder, u: usize, v: usize) -> ForcedEdge {
    assert_ne!(u, v, "cannot force a loop");
    let edge = b.add_edge(u, v, 1, 1);
    let mut paths = [[0; 2]; 2];
    for path in &mut paths {
        let p = b.add_vertex();
        *path = [b.add_edge(u, p, 1, 1), b.add_edge(p, v, 1, 1)];
    }
    ForcedEdge { edge, paths }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaiMetadata {
    #[serde(rename = "K")]
    pub k: usize,
    pub n: usize,
    pub m: usize,
    pub z: usize,
    /// Per variable: edge ids of `{z, x_i}` and `{z, x̄_i}`.
    pub literal_edges: Vec<(usize, usize)>,
    /// Per variable: edge ids of `{z, y_i}` and `{z, y'_i}`.
    pub y_edges: Vec<(usize, usize)>,
    /// Per clause: edge id of `{z, v_j}`.
    pub clause_edges: Vec<usize>,
    pub forced: Vec<ForcedEdge>,
}

impl CaiMetadata {
    pub fn forced_edges(&self) -> EdgeSet {
        self.forced.iter().map(|f| f.edge).collect()
    }
}

pub fn gen_cai(cnf: &CnfFormula) -> Result<(WeightedGraph, CaiMetadata)> {
    let (n, m) = (cnf.num_vars(), cnf.num_clauses());
    let z = 0;
    let x = |i: usize| 1 + 4 * i;
    let x_bar = |i: usize| 2 + 4 * i;
    let mut b = GraphBuilder::new(false, 1 + 4 * n + m);
    let mut literal_edges = Vec::with_capacity(n);
    let mut y_edges = Vec::with_capacity(n);
    let mut forced = Vec::with_capacity(5 * n + 3 * m);
    for i in 0..n {
        let (xi, xb, y, yp) = (x(i), x_bar(i), 3 + 4 * i, 4 + 4 * i);
        literal_edges.push((b.add_edge(z, xi, 1, 1), b.add_edge(z, xb, 1, 1)));
        y_edges.push((b.add_edge(z, y, 1, 1), b.add_edge(z, yp, 1, 1)));
        for (u, v) in [(xi, xb), (xi, y), (xi, yp), (xb, y), (xb, yp)] {
            forced.push(force_edge(&mut b, u, v));
        }
    }
    let mut clause_edges = Vec::with_capacity(m);
    for (j, clause) in cnf.clauses().iter().enumerate() {
        let vj = 1 + 4 * n + j;
        clause_edges.push(b.add_edge(z, vj, 1, 1));
        for &lit in clause {
            let var = lit.unsigned_abs() as usize - 1;
            let target = if lit > 0 { x(var) } else { x_bar(var) };
            forced.push(force_edge(&mut b, vj, target));
        }
    }
    let meta = CaiMetadata {
        k: 16 * n + 9 * m,
        n,
        m,
        z,
        literal_edges,
        y_edges,
        clause_edges,
        forced,
    };
    Ok((b.build()?, meta))
}

/// The yes-witness: all forced edges, the first edge of every forcing path,
/// and for each variable the literal edge of its true literal.
pub fn witness_spanner(meta: &CaiMetadata, cnf: &CnfFormula, assignment: &[bool]) -> Result<Spanner> {
    if let Some(clause) = cnf.first_unsatisfied(assignment)? {
        return Err(Error::UnsatisfyingAssignment { clause });
    }
    let mut s = EdgeSet::new();
    for f in &meta.forced {
        s.insert(f.edge);
        s.insert(f.paths[0][0]);
        s.insert(f.paths[1][0]);
    }
    for (&(pos, neg), &value) in meta.literal_edges.iter().zip(assignment) {
        s.insert(if value { pos } else { neg });
    }
    Ok(Spanner::new(s))
}
