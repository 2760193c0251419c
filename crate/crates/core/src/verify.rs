//! Executable checks of the structural claims about the three instance
//! families. Each verifier returns a [`Report`]; a failed check is a
//! `pass: false` report carrying a concrete counterexample, never an `Err`.

use serde::Serialize;
use serde_json::{json, Value};

use crate::buco::{buco_brute, buco_value, BucoInstance};
use crate::error::{Error, Result};
use crate::extreme::Lambda;
use crate::generators::{
    filter_buco_front, force_edge, gen_cai, gen_from_buco, gen_intractable, spanner_from_buco_solution,
    witness_spanner, CnfFormula, GraphBuilder, IntractableLayout,
};
use crate::graph::{shortest_distances, EdgeSet, WeightedGraph};
use crate::objectives::{dominates, eval, EvalMode, Evaluator, Rational, Spanner, ValueVector};
use crate::pareto::{enumerate_front_with, nondominated_filter, SolveOptions};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub claim: String,
    pub pass: bool,
    pub details: Value,
    pub counterexample: Option<Value>,
}

/// Collects named sub-checks; the first failure supplies the counterexample.
struct Checks {
    claim: String,
    details: serde_json::Map<String, Value>,
    failed: Option<Value>,
}

impl Checks {
    fn new(claim: impl Into<String>) -> Self {
        Checks {
            claim: claim.into(),
            details: serde_json::Map::new(),
            failed: None,
        }
    }

    fn detail(&mut self, key: &str, value: impl Serialize) {
        self.details
            .insert(key.to_string(), serde_json::to_value(value).expect("serializable detail"));
    }

    fn check(&mut self, name: &str, ok: bool, counterexample: impl FnOnce() -> Value) {
        self.details.insert(format!("check:{name}"), Value::Bool(ok));
        if !ok && self.failed.is_none() {
            self.failed = Some(json!({ "check": name, "witness": counterexample() }));
        }
    }

    fn finish(self) -> Report {
        Report {
            claim: self.claim,
            pass: self.failed.is_none(),
            details: Value::Object(self.details),
            counterexample: self.failed,
        }
    }
}

/// Exponential front of the intractability family: every `s t`-free spanner
/// containing all zero-cost edges attains its closed-form point, those
/// points are pairwise incomparable, and together with the `s t`-spanners
/// they make up the whole front.
pub fn verify_intractable(n: usize, directed: bool, opts: &SolveOptions) -> Result<Report> {
    let g = gen_intractable(n, directed)?;
    let layout = IntractableLayout::new(n);
    let front = enumerate_front_with(&g, &SolveOptions { witnesses: false, ..*opts })?;
    let mut c = Checks::new(format!(
        "intractable family n={n}{}: front holds 2^n pairwise incomparable points",
        if directed { " (directed)" } else { "" }
    ));
    c.detail("n", n);
    c.detail("directed", directed);
    c.detail("max_degree", g.max_degree());
    c.check("max_degree<=3", g.max_degree() <= 3, || json!(g.degrees()));

    let subsets = 0u64..1 << n;
    let x_points: Vec<ValueVector> = subsets.clone().map(|t| layout.x_point(t)).collect();
    let missing = x_points.iter().find(|p| !front.contains(p));
    c.check("x_points_in_front", missing.is_none(), || json!(missing));
    c.check("front_size>=2^n", front.len() >= 1 << n, || json!(front.len()));

    // f2 of each X-spanner is its s-t distance ratio, and matches the closed form
    let full = g.all_edges();
    let full_st = shortest_distances(&g, &full, layout.s).get(layout.t).expect("s reaches t");
    let mut bad_ratio = None;
    for t in subsets.clone() {
        let s = Spanner::new(layout.spanner(t, false));
        let value = eval(&g, &s, EvalMode::EdgeRestricted)?;
        let sub_st = shortest_distances(&g, &s.edges, layout.s).get(layout.t).expect("feasible");
        let ratio = Rational::new(sub_st as i64, full_st as i64);
        if value.f2 != ratio || value != layout.x_point(t) {
            bad_ratio = Some(json!({ "subset": t, "value": value, "st_ratio": [*ratio.numer(), *ratio.denom()] }));
            break;
        }
    }
    c.check("x_stretch_is_st_ratio", bad_ratio.is_none(), || bad_ratio.clone().unwrap());

    let mut clash = None;
    'outer: for (i, a) in x_points.iter().enumerate() {
        for b in &x_points[i + 1..] {
            if a == b || dominates(a, b) || dominates(b, a) {
                clash = Some(json!([a, b]));
                break 'outer;
            }
        }
    }
    c.check("x_points_incomparable", clash.is_none(), || clash.clone().unwrap());

    let mut candidates = x_points.clone();
    for t in subsets {
        candidates.push(eval(&g, &Spanner::new(layout.spanner(t, true)), EvalMode::EdgeRestricted)?);
    }
    let predicted = nondominated_filter(candidates);
    c.check("front_is_x_plus_st_points", predicted.points() == front.points(), || {
        json!({ "predicted": predicted, "enumerated": front })
    });
    c.detail("front", &front);
    Ok(c.finish())
}

/// Round trip through the BUCO reduction.
pub fn verify_buco_reduction(inst: &BucoInstance, directed: bool, opts: &SolveOptions) -> Result<Report> {
    let (g, meta) = gen_from_buco(inst, directed)?;
    let n = inst.len();
    let mut c = Checks::new(format!(
        "BUCO reduction n={n}{}: filtered spanner front equals the BUCO front",
        if directed { " (directed)" } else { "" }
    ));
    c.detail("n", n);
    c.detail("directed", directed);
    c.detail("C1", meta.c1_sum);
    c.detail("M", meta.big_m);
    let degree_bound = if directed { 4 } else { 3 };
    c.check(&format!("max_degree<={degree_bound}"), g.max_degree() <= degree_bound, || {
        json!(g.degrees())
    });

    let evaluator = Evaluator::new(&g);
    let mut bad = None;
    for mask in 0u64..1 << n {
        let x: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        let y = buco_value(inst, &x)?;
        let s = spanner_from_buco_solution(&meta, &x)?;
        let got = evaluator.value(&s.edges, EvalMode::EdgeRestricted);
        let want = meta.spanner_value(&y);
        if got.as_ref().ok() != Some(&want) {
            bad = Some(json!({ "x": x, "buco_value": y, "spanner_value": got.ok(), "predicted": want }));
            break;
        }
    }
    c.check("solution_spanner_values", bad.is_none(), || bad.clone().unwrap());

    let front = enumerate_front_with(&g, &SolveOptions { witnesses: false, ..*opts })?;
    let expected = buco_brute(inst)?;
    let lifted_missing = expected.points().iter().map(|y| meta.spanner_value(y)).find(|p| !front.contains(p));
    c.check("pareto_solutions_stay_pareto", lifted_missing.is_none(), || json!(lifted_missing));

    match filter_buco_front(&front, &meta) {
        Ok(recovered) => {
            c.check("recovered_front_matches", recovered == expected, || {
                json!({ "recovered": recovered, "expected": expected })
            });
            c.detail("recovered_front", &recovered);
        }
        Err(e) => c.check("recovered_front_matches", false, || json!(e.to_string())),
    }
    let with_st = front.points().iter().filter(|p| p.f1 >= meta.big_m).count();
    c.detail("points_with_f1>=M", with_st);
    c.check("st_points<=n+1", with_st <= n + 1, || json!(front));
    c.detail("msp_front", &front);
    Ok(c.finish())
}

/// Outcome of the brute-force check on a lone forced-edge gadget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GadgetCheck {
    pub min_two_spanner_size: usize,
    pub minimum_count: usize,
    pub all_minimum_contain_forced: bool,
    pub min_size_without_forced: usize,
}

/// Enumerates every edge subset of a lone forced edge with its two forcing
/// paths and records the sizes of minimum 2-spanners with and without the
/// forced edge.
pub fn forced_gadget_check() -> GadgetCheck {
    let mut b = GraphBuilder::new(false, 2);
    let forced = force_edge(&mut b, 0, 1);
    let g = b.build().expect("gadget is a valid instance");
    let two_spanners = two_spanners(&g);
    let min = two_spanners.iter().map(EdgeSet::len).min().expect("E is a 2-spanner");
    let minimum: Vec<&EdgeSet> = two_spanners.iter().filter(|s| s.len() == min).collect();
    GadgetCheck {
        min_two_spanner_size: min,
        minimum_count: minimum.len(),
        all_minimum_contain_forced: minimum.iter().all(|s| s.contains(forced.edge)),
        min_size_without_forced: two_spanners
            .iter()
            .filter(|s| !s.contains(forced.edge))
            .map(EdgeSet::len)
            .min()
            .unwrap_or(usize::MAX),
    }
}

/// All edge subsets with stretch at most 2, by exhaustive enumeration.
pub fn two_spanners(g: &WeightedGraph) -> Vec<EdgeSet> {
    let m = g.edge_count();
    assert!(m <= 24, "exhaustive 2-spanner search is for tiny graphs");
    let ev = Evaluator::new(g);
    let two = Rational::from_integer(2);
    (0u64..1 << m)
        .map(|mask| (0..m).filter(|&i| mask >> i & 1 == 1).collect::<EdgeSet>())
        .filter(|s| ev.value(s, EvalMode::EdgeRestricted).is_ok_and(|v| v.f2 <= two))
        .collect()
}

/// Checks the extreme-point certificate of the yes-witness spanner built from
/// a satisfying assignment, analytically rather than by enumeration.
pub fn verify_cai(cnf: &CnfFormula, assignment: &[bool]) -> Result<Report> {
    if let Some(clause) = cnf.first_unsatisfied(assignment)? {
        return Err(Error::UnsatisfyingAssignment { clause });
    }
    let (g, meta) = gen_cai(cnf)?;
    let (n, m) = (cnf.num_vars() as i64, cnf.num_clauses() as i64);
    let mut c = Checks::new(format!(
        "3-SAT construction n={n} m={m}: the yes-witness value vector is an extreme point"
    ));
    c.detail("n", n);
    c.detail("m", m);
    c.detail("vertices", g.vertex_count());
    c.detail("edges", g.edge_count());
    c.detail("K", meta.k);
    c.check("vertices=14n+7m+1", g.vertex_count() as i64 == 14 * n + 7 * m + 1, || {
        json!(g.vertex_count())
    });
    c.check("edges=29n+16m", g.edge_count() as i64 == 29 * n + 16 * m, || json!(g.edge_count()));
    c.check("K=16n+9m", meta.k as i64 == 16 * n + 9 * m, || json!(meta.k));

    let ev = Evaluator::new(&g);
    let witness = witness_spanner(&meta, cnf, assignment)?;
    let f_w = ev.value(&witness.edges, EvalMode::EdgeRestricted)?;
    let f_full = ev.value(&g.all_edges(), EvalMode::EdgeRestricted)?;
    c.detail("f(S_w)", f_w);
    c.detail("f(E)", f_full);
    c.check("f(S_w)=(K,2)", f_w == ValueVector::integral(meta.k as i64, 2), || json!(f_w));
    c.check("f(E)=(|E|,1)", f_full == ValueVector::integral(g.edge_count() as i64, 1), || {
        json!(f_full)
    });

    let mut bad_removal = None;
    let mut feasible_removals = 0;
    for e in 0..g.edge_count() {
        let mut s = g.all_edges();
        s.remove(e);
        if let Ok(v) = ev.value(&s, EvalMode::EdgeRestricted) {
            feasible_removals += 1;
            if v.f2 != Rational::from_integer(2) {
                bad_removal = Some(json!({ "removed_edge": e, "value": v }));
                break;
            }
        }
    }
    c.detail("feasible_single_removals", feasible_removals);
    c.check("single_removal_stretch=2", bad_removal.is_none(), || bad_removal.clone().unwrap());

    // lower bound on f1: any spanner needs |V| - 1 edges
    let y_h = ValueVector::integral(g.vertex_count() as i64 - 1, 3);
    c.check("y_h1=14n+7m", y_h.f1 == 14 * n + 7 * m, || json!(y_h));
    let lambda = Lambda::integral(2, 15 * n + 9 * m)?;
    let at_witness = lambda.apply(&f_w);
    let at_full = lambda.apply(&f_full);
    let at_bound = lambda.apply(&y_h);
    c.detail("lambda_w", lambda);
    c.detail("lambda.f(S_w)", at_witness.to_string());
    c.detail("lambda.f(S_1)", at_full.to_string());
    c.detail("lambda.y_h", at_bound.to_string());
    let int = Rational::from_integer;
    c.check("lambda.f(S_w)=62n+36m", at_witness == int(62 * n + 36 * m), || {
        json!(at_witness.to_string())
    });
    c.check(
        "lambda.f(S_1)=lambda.y_h=73n+41m",
        at_full == int(73 * n + 41 * m) && at_bound == at_full,
        || json!([at_full.to_string(), at_bound.to_string()]),
    );
    c.check("lambda.f(S_w)<lambda.f(S_1)", at_witness < at_full, || {
        json!([at_witness.to_string(), at_full.to_string()])
    });

    let gadget = forced_gadget_check();
    c.check(
        "forced_gadget",
        gadget.all_minimum_contain_forced && gadget.min_size_without_forced > gadget.min_two_spanner_size,
        || json!(gadget),
    );
    c.detail("forced_gadget", &gadget);
    Ok(c.finish())
}

/// For unit weights, the front has at most `|E|` points.
pub fn verify_unweighted_bound(g: &WeightedGraph, opts: &SolveOptions) -> Result<Report> {
    if let Some((edge, e)) = g.edges().iter().enumerate().find(|(_, e)| e.c1 != 1 || e.c2 != 1) {
        return Err(Error::NotUnweighted {
            edge,
            c1: e.c1,
            c2: e.c2,
        });
    }
    let front = enumerate_front_with(g, &SolveOptions { witnesses: false, ..*opts })?;
    let mut c = Checks::new("unweighted instance: front size is at most |E|");
    c.detail("edges", g.edge_count());
    c.detail("front_size", front.len());
    c.check("front_size<=|E|", front.len() <= g.edge_count(), || json!(front));
    c.detail("front", &front);
    Ok(c.finish())
}
