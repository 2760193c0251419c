//! Brute-force reference implementations that share no code with the
//! library: Floyd-Warshall distances, all-pairs stretch over reachable
//! pairs, and the unpruned front over all `2^|E|` edge subsets.

use mspan::{Edge, Rational, ValueVector, WeightedGraph};
use rand::Rng;

#[derive(Debug, Clone)]
pub struct Inst {
    pub directed: bool,
    pub vertices: usize,
    pub edges: Vec<(usize, usize, i64, i64)>,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl Inst {
    pub fn graph(&self) -> WeightedGraph {
        let edges = self.edges.iter().map(|&(u, v, c1, c2)| Edge::new(u, v, c1, c2)).collect();
        WeightedGraph::new(self.directed, self.vertices, edges).expect("generated instance is valid")
    }

    pub fn full_mask(&self) -> u64 {
        (1u64 << self.edges.len()) - 1
    }

    fn distances(&self, mask: u64) -> Vec<Vec<Option<i64>>> {
        let n = self.vertices;
        let mut d = vec![vec![None; n]; n];
        for (i, row) in d.iter_mut().enumerate() {
            row[i] = Some(0);
        }
        for (k, &(u, v, _, c2)) in self.edges.iter().enumerate() {
            if mask >> k & 1 == 0 {
                continue;
            }
            let mut relax = |a: usize, b: usize| {
                if d[a][b].is_none_or(|x| c2 < x) {
                    d[a][b] = Some(c2);
                }
            };
            relax(u, v);
            if !self.directed {
                relax(v, u);
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                        if d[i][j].is_none_or(|x| a + b < x) {
                            d[i][j] = Some(a + b);
                        }
                    }
                }
            }
        }
        d
    }

    /// `(f1, f2)` of the subset `mask`, or `None` when it loses a reachable pair.
    pub fn value(&self, mask: u64) -> Option<(i64, i64, i64)> {
        let full = self.distances(self.full_mask());
        self.value_with(&full, mask)
    }

    fn value_with(&self, full: &[Vec<Option<i64>>], mask: u64) -> Option<(i64, i64, i64)> {
        let sub = self.distances(mask);
        let (mut num, mut den) = (1i64, 1i64);
        for a in 0..self.vertices {
            for b in 0..self.vertices {
                if a == b {
                    continue;
                }
                if let Some(de) = full[a][b] {
                    let ds = sub[a][b]?;
                    if ds as i128 * den as i128 > num as i128 * de as i128 {
                        (num, den) = (ds, de);
                    }
                }
            }
        }
        let g = gcd(num, den);
        let f1 = (0..self.edges.len())
            .filter(|&k| mask >> k & 1 == 1)
            .map(|k| self.edges[k].2)
            .sum();
        Some((f1, num / g, den / g))
    }

    /// Non-dominated values over every edge subset, sorted by `f1`.
    pub fn front(&self) -> Vec<(i64, i64, i64)> {
        let full = self.distances(self.full_mask());
        let mut values: Vec<(i64, i64, i64)> =
            (0..=self.full_mask()).filter_map(|m| self.value_with(&full, m)).collect();
        values.sort();
        values.dedup();
        let le = |a: &(i64, i64, i64), b: &(i64, i64, i64)| a.1 as i128 * b.2 as i128 <= b.1 as i128 * a.2 as i128;
        let mut out: Vec<(i64, i64, i64)> = values
            .iter()
            .filter(|p| !values.iter().any(|q| q != *p && q.0 <= p.0 && le(q, p)))
            .copied()
            .collect();
        out.sort();
        out
    }
}

pub fn as_vector((f1, num, den): (i64, i64, i64)) -> ValueVector {
    ValueVector::new(f1, Rational::new(num, den))
}

pub fn as_triple(v: &ValueVector) -> (i64, i64, i64) {
    (v.f1, *v.f2.numer(), *v.f2.denom())
}

/// Random weakly connected instance without loops or parallel edges.
pub fn random_instance<R: Rng>(
    rng: &mut R,
    max_vertices: usize,
    max_edges: usize,
    c1: std::ops::RangeInclusive<i64>,
    max_c2: i64,
    directed: bool,
) -> Inst {
    let vertices = rng.gen_range(1..=max_vertices.min(max_edges + 1));
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for v in 1..vertices {
        let p = rng.gen_range(0..v);
        pairs.push(if directed && rng.gen_bool(0.5) { (v, p) } else { (p, v) });
    }
    let target = rng.gen_range(pairs.len()..=max_edges);
    for _ in 0..8 * max_edges {
        if pairs.len() >= target || vertices < 2 {
            break;
        }
        let (u, v) = (rng.gen_range(0..vertices), rng.gen_range(0..vertices));
        let taken = pairs
            .iter()
            .any(|&(a, b)| (a, b) == (u, v) || (!directed && (a, b) == (v, u)));
        if u != v && !taken {
            pairs.push((u, v));
        }
    }
    let edges = pairs
        .into_iter()
        .map(|(u, v)| (u, v, rng.gen_range(c1.clone()), rng.gen_range(1..=max_c2)))
        .collect();
    Inst {
        directed,
        vertices,
        edges,
    }
}
