use serde::{Deserialize, Serialize};

use super::GraphBuilder;
use crate::buco::BucoInstance;
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, WeightedGraph};
use crate::objectives::{Spanner, ValueVector};
use crate::pareto::{nondominated_filter, ParetoFront};

/// Edge ids of one item's gadget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BucoGadget {
    /// `{v_i, w_i}`, weights `(0, c2_i + 2)`.
    pub direct: usize,
    /// `{v_i, v'_i}`, weights `(0, 1)`.
    pub to_prime: usize,
    /// `{v'_i, w_i}`, weights `(c1_i, 1)`; dropped when the item is chosen.
    pub prime_to_w: usize,
    /// Directed instances only: `(v'_i, v_i)`, weights `(0, 1)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub back_arc: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BucoReductionMetadata {
    /// Sum of all item values.
    #[serde(rename = "C1")]
    pub c1_sum: i64,
    /// `C1 + 1`, the cost of the `s t` edge.
    #[serde(rename = "M")]
    pub big_m: i64,
    /// Number of items in the BUCO instance.
    pub n: usize,
    /// Number of gadgets; one more than `n` when a single item is padded.
    pub gadgets: usize,
    pub directed: bool,
    pub gadget_edges: Vec<BucoGadget>,
    pub chain_edges: Vec<usize>,
    pub st_edge: usize,
}

impl BucoReductionMetadata {
    /// Stretch offset between a solution's weight and its spanner's stretch.
    pub fn stretch_offset(&self) -> i64 {
        3 * self.gadgets as i64 - 1
    }

    /// Predicted spanner value for a solution with value vector `y`.
    pub fn spanner_value(&self, y: &ValueVector) -> ValueVector {
        ValueVector::new(
            self.c1_sum + y.f1,
            y.f2 + crate::objectives::Rational::from_integer(self.stretch_offset()),
        )
    }
}

/// Builds the spanner instance whose front, restricted to `f1 < M` and
/// shifted back, is the BUCO front of `inst`.
///
/// A single item gets a second gadget with `c1 = c2 = 0`, since otherwise
/// `s = v_1`, `t = w_1` and the `s t` edge would be parallel to `v_1 w_1`.
/// The extra item never changes a solution's value.
pub fn gen_from_buco(inst: &BucoInstance, directed: bool) -> Result<(WeightedGraph, BucoReductionMetadata)> {
    let n = inst.len();
    let mut items: Vec<(i64, i64)> = inst
        .values()
        .iter()
        .zip(inst.weights())
        .map(|(&c1, &c2)| (c1 as i64, c2 as i64))
        .collect();
    if n == 1 {
        items.push((0, 0));
    }
    let gadgets = items.len();
    let c1_sum: i64 = items.iter().map(|&(c1, _)| c1).sum();
    let big_m = c1_sum + 1;
    let mut b = GraphBuilder::new(directed, 3 * gadgets);
    let mut gadget_edges = Vec::with_capacity(gadgets);
    let mut chain_edges = Vec::with_capacity(gadgets - 1);
    for (k, &(c1, c2)) in items.iter().enumerate() {
        let (v, vp, w) = (3 * k, 3 * k + 1, 3 * k + 2);
        let direct = b.add_edge(v, w, 0, c2 + 2);
        let to_prime = b.add_edge(v, vp, 0, 1);
        let prime_to_w = b.add_edge(vp, w, c1, 1);
        let back_arc = directed.then(|| b.add_edge(vp, v, 0, 1));
        gadget_edges.push(BucoGadget {
            direct,
            to_prime,
            prime_to_w,
            back_arc,
        });
        if k + 1 < gadgets {
            chain_edges.push(b.add_edge(w, 3 * (k + 1), 0, 1));
        }
    }
    let st_edge = b.add_edge(0, 3 * gadgets - 1, big_m, 1);
    let meta = BucoReductionMetadata {
        c1_sum,
        big_m,
        n,
        gadgets,
        directed,
        gadget_edges,
        chain_edges,
        st_edge,
    };
    Ok((b.build()?, meta))
}

/// The spanner `S_x`: every zero-cost edge, plus `{v'_i, w_i}` exactly for
/// the items left out of `x`. A padding gadget counts as left out.
pub fn spanner_from_buco_solution(meta: &BucoReductionMetadata, x: &[bool]) -> Result<Spanner> {
    if x.len() != meta.n {
        return Err(Error::LengthMismatch {
            expected: meta.n,
            got: x.len(),
        });
    }
    let mut s = EdgeSet::new();
    let chosen = x.iter().copied().chain(std::iter::repeat(false));
    for (gadget, chosen) in meta.gadget_edges.iter().zip(chosen) {
        s.insert(gadget.direct);
        s.insert(gadget.to_prime);
        if let Some(back) = gadget.back_arc {
            s.insert(back);
        }
        if !chosen {
            s.insert(gadget.prime_to_w);
        }
    }
    for &c in &meta.chain_edges {
        s.insert(c);
    }
    Ok(Spanner::new(s))
}

/// Recovers the BUCO front from the exact front of the generated instance:
/// points with `f1 >= M` use the `s t` edge and are dropped, the rest are
/// shifted by `(-C1, -(3n - 1))`.
pub fn filter_buco_front(msp_front: &ParetoFront, meta: &BucoReductionMetadata) -> Result<ParetoFront> {
    let mut out = Vec::new();
    for p in msp_front.points() {
        if p.f1 >= meta.big_m {
            continue;
        }
        if !p.f2.is_integer() {
            return Err(Error::NonIntegralF2 {
                f1: p.f1,
                f2: p.f2.to_string(),
            });
        }
        out.push(ValueVector::integral(
            p.f1 - meta.c1_sum,
            p.f2.to_integer() - meta.stretch_offset(),
        ));
    }
    Ok(nondominated_filter(out))
}
