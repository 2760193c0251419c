//! Instance families: the exponential-front family, the BUCO reduction, and
//! the 3-SAT based 2-spanner construction with forced edges.

mod buco_reduction;
mod cai;
mod cnf;
mod intractable;

pub use buco_reduction::{
    filter_buco_front, gen_from_buco, spanner_from_buco_solution, BucoGadget, BucoReductionMetadata,
};
pub use cai::{force_edge, gen_cai, witness_spanner, CaiMetadata, ForcedEdge};
pub use cnf::{parse_dimacs, Assignment, CnfFormula, Literal};
pub use intractable::{gen_intractable, IntractableLayout};

use crate::error::Result;
use crate::graph::{Edge, WeightedGraph};

/// Incremental edge-list builder; edge ids follow insertion order.
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    directed: bool,
    vertices: usize,
    edges: Vec<Edge>,
}

impl GraphBuilder {
    pub fn new(directed: bool, vertices: usize) -> Self {
        GraphBuilder {
            directed,
            vertices,
            edges: Vec::new(),
        }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.vertices += 1;
        self.vertices - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize, c1: i64, c2: i64) -> usize {
        self.edges.push(Edge::new(u, v, c1, c2));
        self.edges.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn build(self) -> Result<WeightedGraph> {
        WeightedGraph::new(self.directed, self.vertices, self.edges)
    }
}

/// Two edges that cross when the vertices are placed on a circle in id
/// order, if any. `None` means the id order is an outerplanar embedding.
#[cfg(test)]
pub(crate) fn crossing_edges(g: &WeightedGraph) -> Option<(usize, usize)> {
    let span = |e: &Edge| (e.u.min(e.v), e.u.max(e.v));
    let edges = g.edges();
    for (i, a) in edges.iter().enumerate() {
        let (a0, a1) = span(a);
        for (j, b) in edges.iter().enumerate().skip(i + 1) {
            let (b0, b1) = span(b);
            let inside = |x: usize| a0 < x && x < a1;
            let shared = [b0, b1].iter().any(|&x| x == a0 || x == a1);
            if !shared && inside(b0) != inside(b1) {
                return Some((i, j));
            }
        }
    }
    None
}
