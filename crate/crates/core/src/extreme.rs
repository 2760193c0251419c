//! Extreme points: non-dominated points that uniquely minimize some
//! nonnegative, nonzero weighting `l1 * f1 + l2 * f2`.
//!
//! Two independent routes are provided. [`extreme_from_front`] takes the
//! vertices of the lower-left convex hull of a known front;
//! [`extreme_dichotomic`] never enumerates the front and instead solves
//! weighted-sum problems for the normals of successive point pairs.

use std::cmp::Ordering;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::objectives::{Rational, Spanner, ValueVector};
use crate::pareto::{ParetoFront, SolveOptions, SubsetSpace};

/// Weight vector `(l1, l2)`, componentwise nonnegative and not zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Lambda {
    l1: Rational,
    l2: Rational,
}

impl Lambda {
    pub fn new(l1: Rational, l2: Rational) -> Result<Self> {
        let zero = Rational::from_integer(0);
        if l1 < zero || l2 < zero || (l1 == zero && l2 == zero) {
            return Err(Error::BadLambda);
        }
        Ok(Lambda { l1, l2 })
    }

    pub fn integral(l1: i64, l2: i64) -> Result<Self> {
        Lambda::new(Rational::from_integer(l1), Rational::from_integer(l2))
    }

    pub fn l1(&self) -> Rational {
        self.l1
    }

    pub fn l2(&self) -> Rational {
        self.l2
    }

    pub fn apply(&self, y: &ValueVector) -> Rational {
        self.l1 * Rational::from_integer(y.f1) + self.l2 * y.f2
    }

    fn normalized(self) -> Lambda {
        let s = self.l1 + self.l2;
        Lambda {
            l1: self.l1 / s,
            l2: self.l2 / s,
        }
    }
}

impl Serialize for Lambda {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq([
            [*self.l1.numer(), *self.l1.denom()],
            [*self.l2.numer(), *self.l2.denom()],
        ])
    }
}

impl<'de> Deserialize<'de> for Lambda {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let [[n1, d1], [n2, d2]] = <[[i64; 2]; 2]>::deserialize(d)?;
        if d1 == 0 || d2 == 0 {
            return Err(D::Error::custom("zero denominator"));
        }
        Lambda::new(Rational::new(n1, d1), Rational::new(n2, d2)).map_err(D::Error::custom)
    }
}

/// A point together with a weight vector it uniquely minimizes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremeCertificate {
    pub point: ValueVector,
    pub lambda: Lambda,
}

impl ExtremeCertificate {
    /// `lambda` strictly prefers `point` over every other point of `front`.
    pub fn validate(&self, front: &[ValueVector]) -> bool {
        let own = self.lambda.apply(&self.point);
        front.contains(&self.point)
            && front
                .iter()
                .filter(|y| **y != self.point)
                .all(|y| own < self.lambda.apply(y))
    }
}

/// Result of a weighted-sum scalarization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedSumMin {
    pub value: Rational,
    pub point: ValueVector,
    pub witness: Spanner,
}

/// Minimum of `lam . f(S)` over all spanners. Among minimizers the
/// lexicographically smallest `(f1, f2)` is reported, with the
/// smallest-bitmask witness.
pub fn weighted_sum_min(g: &WeightedGraph, lam: Lambda, opts: &SolveOptions) -> Result<WeightedSumMin> {
    let space = SubsetSpace::new(g, opts.budget)?;
    scalar_min(&space, lam, Tiebreak::CostFirst, opts.jobs)
}

#[derive(Clone, Copy)]
enum Tiebreak {
    CostFirst,
    StretchFirst,
}

impl Tiebreak {
    fn cmp(self, a: &ValueVector, b: &ValueVector) -> Ordering {
        match self {
            Tiebreak::CostFirst => a.cmp(b),
            Tiebreak::StretchFirst => (a.f2, a.f1).cmp(&(b.f2, b.f1)),
        }
    }
}

type Best = Option<(Rational, ValueVector, u64)>;

fn scalar_min(space: &SubsetSpace<'_>, lam: Lambda, tb: Tiebreak, jobs: Option<usize>) -> Result<WeightedSumMin> {
    let better = move |a: &(Rational, ValueVector, u64), b: &(Rational, ValueVector, u64)| {
        a.0.cmp(&b.0)
            .then_with(|| tb.cmp(&a.1, &b.1))
            .then_with(|| a.2.cmp(&b.2))
            == Ordering::Less
    };
    let best: Best = space.search(
        jobs,
        || None,
        |acc: &mut Best, mask, y| {
            let cand = (lam.apply(y), *y, mask);
            if acc.as_ref().is_none_or(|cur| better(&cand, cur)) {
                *acc = Some(cand);
            }
        },
        |a, b| match (a, b) {
            (Some(x), Some(y)) => Some(if better(&y, &x) { y } else { x }),
            (x, None) => x,
            (None, y) => y,
        },
    )?;
    // the full edge set is always feasible, so something was visited
    let (value, point, mask) = best.expect("at least one feasible spanner");
    Ok(WeightedSumMin {
        value,
        point,
        witness: Spanner::new(space.subset(mask)),
    })
}

/// Extreme points of a front: the vertices of its lower-left convex hull.
pub fn extreme_from_front(front: &ParetoFront) -> Vec<ExtremeCertificate> {
    hull_certificates(front.points())
}

/// Extreme points computed by dichotomic weighted-sum search.
pub fn extreme_dichotomic(g: &WeightedGraph, opts: &SolveOptions) -> Result<Vec<ExtremeCertificate>> {
    let space = SubsetSpace::new(g, opts.budget)?;
    let left = scalar_min(&space, Lambda::integral(1, 0)?, Tiebreak::CostFirst, opts.jobs)?.point;
    let right = scalar_min(&space, Lambda::integral(0, 1)?, Tiebreak::StretchFirst, opts.jobs)?.point;
    let mut found = vec![left, right];
    let mut pending = vec![(left, right)];
    while let Some((a, b)) = pending.pop() {
        if a == b {
            continue;
        }
        let lam = Lambda::new(a.f2 - b.f2, Rational::from_integer(b.f1 - a.f1))?;
        let sol = scalar_min(&space, lam, Tiebreak::CostFirst, opts.jobs)?;
        // a and b lie on the chord; only a strictly better point is new
        if sol.value < lam.apply(&a) {
            found.push(sol.point);
            pending.push((a, sol.point));
            pending.push((sol.point, b));
        }
    }
    found.sort();
    found.dedup();
    Ok(hull_certificates(&found))
}

/// Hull vertices of a staircase (sorted by ascending `f1`, strictly
/// descending `f2`) with certifying weights. Collinear interior points are
/// dropped since no weighting makes them unique minimizers.
pub(crate) fn hull_certificates(points: &[ValueVector]) -> Vec<ExtremeCertificate> {
    let mut hull: Vec<ValueVector> = Vec::new();
    for &p in points {
        while hull.len() >= 2 && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], &p) <= Rational::from_integer(0) {
            hull.pop();
        }
        hull.push(p);
    }
    if hull.len() == 1 {
        return vec![ExtremeCertificate {
            point: hull[0],
            lambda: Lambda::integral(1, 1).expect("positive weights"),
        }];
    }
    // normals[k] weighs hull[k] and hull[k + 1] equally
    let normals: Vec<Lambda> = hull
        .windows(2)
        .map(|w| {
            Lambda {
                l1: w[0].f2 - w[1].f2,
                l2: Rational::from_integer(w[1].f1 - w[0].f1),
            }
            .normalized()
        })
        .collect();
    let last = hull.len() - 1;
    hull.iter()
        .enumerate()
        .map(|(i, &point)| {
            let (a, b) = match i {
                0 => (normals[0], Lambda { l1: Rational::from_integer(1), l2: Rational::from_integer(0) }),
                i if i == last => (normals[last - 1], Lambda { l1: Rational::from_integer(0), l2: Rational::from_integer(1) }),
                i => (normals[i - 1], normals[i]),
            };
            let lambda = Lambda { l1: a.l1 + b.l1, l2: a.l2 + b.l2 }.normalized();
            ExtremeCertificate { point, lambda }
        })
        .collect()
}

// z-component of (a - o) x (b - o)
fn cross(o: &ValueVector, a: &ValueVector, b: &ValueVector) -> Rational {
    let ax = Rational::from_integer(a.f1 - o.f1);
    let bx = Rational::from_integer(b.f1 - o.f1);
    ax * (b.f2 - o.f2) - (a.f2 - o.f2) * bx
}
