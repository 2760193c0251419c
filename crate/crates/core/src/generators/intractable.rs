use serde::Serialize;

use super::GraphBuilder;
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, WeightedGraph};
use crate::objectives::{Rational, ValueVector};

/// Edge ids of the exponential-front family for a given `n`.
///
/// Item `i` (1-based) owns vertices `v_i = 3(i-1)`, `v'_i = 3(i-1)+1`,
/// `w_i = 3(i-1)+2` and edges `4(i-1)` (`v_i w_i`), `4(i-1)+1` (`v_i v'_i`),
/// `4(i-1)+2` (`v'_i w_i`), `4(i-1)+3` (`w_i v_{i+1}`, absent for `i = n`).
/// The `s t` edge is last.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntractableLayout {
    pub n: usize,
    pub direct: Vec<usize>,
    pub detour: Vec<[usize; 2]>,
    pub chain: Vec<usize>,
    pub st_edge: usize,
    pub s: usize,
    pub t: usize,
}

impl IntractableLayout {
    pub fn new(n: usize) -> Self {
        IntractableLayout {
            n,
            direct: (0..n).map(|k| 4 * k).collect(),
            detour: (0..n).map(|k| [4 * k + 1, 4 * k + 2]).collect(),
            chain: (0..n.saturating_sub(1)).map(|k| 4 * k + 3).collect(),
            st_edge: 4 * n - 1,
            s: 0,
            t: 3 * n - 1,
        }
    }

    /// All zero-cost edges: detours and chain.
    pub fn zero_cost_edges(&self) -> EdgeSet {
        self.detour.iter().flatten().chain(&self.chain).copied().collect()
    }

    /// Spanner containing every zero-cost edge plus the direct edges of the
    /// items in `subset` (bit `k` is item `k + 1`), optionally with `s t`.
    pub fn spanner(&self, subset: u64, with_st: bool) -> EdgeSet {
        let mut s = self.zero_cost_edges();
        for (k, &id) in self.direct.iter().enumerate() {
            if subset >> k & 1 == 1 {
                s.insert(id);
            }
        }
        if with_st {
            s.insert(self.st_edge);
        }
        s
    }

    /// Closed-form value of the `s t`-free spanner for `subset`:
    /// `f1` sums `2^i` over chosen items, `f2` is the `s`-`t` path length,
    /// `2^i` per chosen item, `2^(i+1)` per other item, plus `n - 1` chain edges.
    pub fn x_point(&self, subset: u64) -> ValueVector {
        let mut f1 = 0i64;
        let mut f2 = self.n as i64 - 1;
        for i in 1..=self.n {
            if subset >> (i - 1) & 1 == 1 {
                f1 += 1 << i;
                f2 += 1 << i;
            } else {
                f2 += 1 << (i + 1);
            }
        }
        ValueVector::new(f1, Rational::from_integer(f2))
    }
}

/// The degree-3 outerplanar family whose front has at least `2^n` points.
/// Directed instances orient every edge from `s` toward `t`.
pub fn gen_intractable(n: usize, directed: bool) -> Result<WeightedGraph> {
    if n < 2 {
        return Err(Error::NTooSmall { n, min: 2 });
    }
    if n > 40 {
        return Err(Error::TooLarge(format!("n = {n} overflows 64-bit weights")));
    }
    let mut b = GraphBuilder::new(directed, 3 * n);
    for i in 1..=n {
        let (v, vp, w) = (3 * (i - 1), 3 * (i - 1) + 1, 3 * (i - 1) + 2);
        let p = 1i64 << i;
        b.add_edge(v, w, p, p);
        b.add_edge(v, vp, 0, p);
        b.add_edge(vp, w, 0, p);
        if i < n {
            b.add_edge(w, 3 * i, 0, 1);
        }
    }
    b.add_edge(0, 3 * n - 1, 1 << (n + 1), 1);
    b.build()
}
