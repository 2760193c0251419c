//! Fixtures shared by the criterion benches.

use mspan::generators::parse_dimacs;
use mspan::{BucoInstance, Edge, WeightedGraph};

/// BUCO instance with `n` items and entries cycling through `1..=9`.
pub fn buco_instance(n: usize) -> BucoInstance {
    let c1 = (0..n).map(|i| (i * 7 % 9 + 1) as u64).collect();
    let c2 = (0..n).map(|i| (i * 5 % 9 + 1) as u64).collect();
    BucoInstance::new(c1, c2).expect("entries are positive")
}

/// `k x k` grid with positive costs, so every edge is free.
pub fn grid(k: usize) -> WeightedGraph {
    let id = |r: usize, c: usize| r * k + c;
    let mut edges = Vec::new();
    for r in 0..k {
        for c in 0..k {
            let w = (r * 3 + c * 5) % 4 + 1;
            if c + 1 < k {
                edges.push(Edge::new(id(r, c), id(r, c + 1), w as i64, (w % 3 + 1) as i64));
            }
            if r + 1 < k {
                edges.push(Edge::new(id(r, c), id(r + 1, c), (5 - w) as i64, w as i64));
            }
        }
    }
    WeightedGraph::new(false, k * k, edges).expect("grid is connected")
}

/// Satisfiable formula with three variables and two clauses.
pub fn small_cnf() -> mspan::generators::CnfFormula {
    parse_dimacs("p cnf 3 2\n-1 2 3 0\n1 2 -3 0\n").expect("valid DIMACS")
}
