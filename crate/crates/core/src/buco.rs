//! Biobjective unconstrained combinatorial optimization: pick any subset of
//! items, maximize total value `c1` while minimizing total weight `c2`.
//! Value vectors are `(-c1 . x, c2 . x)`, both minimized.

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::objectives::ValueVector;
use crate::pareto::{nondominated_filter, ParetoFront};

pub const BRUTE_MAX_ITEMS: usize = 24;
pub const DP_MAX_WEIGHT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BucoInstance {
    c1: Vec<u64>,
    c2: Vec<u64>,
}

impl BucoInstance {
    /// Zero entries are rejected, not dropped.
    pub fn new(c1: Vec<u64>, c2: Vec<u64>) -> Result<Self> {
        if c1.len() != c2.len() {
            return Err(Error::LengthMismatch {
                expected: c1.len(),
                got: c2.len(),
            });
        }
        if let Some(i) = (0..c1.len()).find(|&i| c1[i] == 0 || c2[i] == 0) {
            return Err(Error::InvalidBuco(format!("item {i} has a zero entry")));
        }
        if c1.iter().chain(&c2).any(|&c| c > i64::MAX as u64 / 64) {
            return Err(Error::InvalidBuco("entry too large".into()));
        }
        Ok(BucoInstance { c1, c2 })
    }

    pub fn len(&self) -> usize {
        self.c1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c1.is_empty()
    }

    pub fn values(&self) -> &[u64] {
        &self.c1
    }

    pub fn weights(&self) -> &[u64] {
        &self.c2
    }
}

impl<'de> Deserialize<'de> for BucoInstance {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            c1: Vec<u64>,
            c2: Vec<u64>,
        }
        let raw = Raw::deserialize(d)?;
        BucoInstance::new(raw.c1, raw.c2).map_err(serde::de::Error::custom)
    }
}

pub fn buco_value(inst: &BucoInstance, x: &[bool]) -> Result<ValueVector> {
    if x.len() != inst.len() {
        return Err(Error::LengthMismatch {
            expected: inst.len(),
            got: x.len(),
        });
    }
    let (mut value, mut weight) = (0i64, 0i64);
    for (i, _) in x.iter().enumerate().filter(|(_, &b)| b) {
        value += inst.c1[i] as i64;
        weight += inst.c2[i] as i64;
    }
    Ok(ValueVector::integral(-value, weight))
}

/// Front over all `2^n` solutions.
pub fn buco_brute(inst: &BucoInstance) -> Result<ParetoFront> {
    let n = inst.len();
    if n > BRUTE_MAX_ITEMS {
        return Err(Error::TooLarge(format!("{n} items, brute force handles {BRUTE_MAX_ITEMS}")));
    }
    let points = (0u64..1 << n).map(|mask| {
        let (mut value, mut weight) = (0i64, 0i64);
        for i in 0..n {
            if mask >> i & 1 == 1 {
                value += inst.c1[i] as i64;
                weight += inst.c2[i] as i64;
            }
        }
        ValueVector::integral(-value, weight)
    });
    Ok(nondominated_filter(points))
}

/// Front via a 0/1 knapsack table: best total value for every reachable
/// total weight. Only the best value per weight can be non-dominated.
pub fn buco_dp(inst: &BucoInstance) -> Result<ParetoFront> {
    let total: u64 = inst.c2.iter().sum();
    if total > DP_MAX_WEIGHT {
        return Err(Error::TooLarge(format!("total weight {total} exceeds {DP_MAX_WEIGHT}")));
    }
    let cap = total as usize;
    let mut best: Vec<Option<u64>> = vec![None; cap + 1];
    best[0] = Some(0);
    for (&value, &weight) in inst.c1.iter().zip(&inst.c2) {
        let w = weight as usize;
        for at in (w..=cap).rev() {
            if let Some(prev) = best[at - w] {
                let cand = prev + value;
                if best[at].is_none_or(|cur| cand > cur) {
                    best[at] = Some(cand);
                }
            }
        }
    }
    let points = best
        .iter()
        .enumerate()
        .filter_map(|(w, v)| v.map(|v| ValueVector::integral(-(v as i64), w as i64)));
    Ok(nondominated_filter(points))
}
