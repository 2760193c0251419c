//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line to stderr
//! (uncaptured, so it shows in plain `cargo test` output) and then asserts.

mod oracle;
mod properties;

use std::fmt::Display;
use std::io::Write;
use std::time::{Duration, Instant};

use mspan::generators::{gen_from_buco, gen_intractable, parse_dimacs, IntractableLayout};
use mspan::verify::{forced_gadget_check, verify_buco_reduction, verify_cai, verify_intractable, verify_unweighted_bound};
use mspan::{
    buco_brute, buco_dp, dominates, enumerate_front_with, eval, extreme_dichotomic, extreme_from_front, is_spanner,
    BucoInstance, Edge, EdgeSet, Error, EvalMode, Evaluator, Rational, SolveOptions, Spanner, ValueVector,
    WeightedGraph,
};
use oracle::{as_triple, as_vector, random_instance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

fn verdict(label: &str, pass: bool, detail: impl Display) {
    let line = format!("\nacceptance {label}: {} | {detail}\n", if pass { "PASS" } else { "FAIL" });
    let _ = std::io::stderr().lock().write_all(line.as_bytes());
}

fn mask_set(mask: u64, m: usize) -> EdgeSet {
    (0..m).filter(|&i| mask >> i & 1 == 1).collect()
}

fn random_buco<R: Rng>(rng: &mut R, max_n: usize, max_entry: u64) -> BucoInstance {
    let n = rng.gen_range(1..=max_n);
    let c1 = (0..n).map(|_| rng.gen_range(1..=max_entry)).collect();
    let c2 = (0..n).map(|_| rng.gen_range(1..=max_entry)).collect();
    BucoInstance::new(c1, c2).unwrap()
}

/// The random BUCO instances of criterion 2, reused by criterion 4(d).
fn criterion_2_instances() -> Vec<BucoInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    (0..50).map(|_| random_buco(&mut rng, 4, 9)).collect()
}

fn fig4() -> mspan::generators::CnfFormula {
    parse_dimacs("p cnf 3 2\n-1 2 3 0\n1 2 -3 0\n").unwrap()
}

fn triples(points: &[ValueVector]) -> Vec<(i64, i64, i64)> {
    points.iter().map(as_triple).collect()
}

#[test]
fn criterion_1_intractability_family() {
    let opts = SolveOptions::default();
    let mut failures = Vec::new();
    let mut slowest = Duration::ZERO;
    for n in 2..=4 {
        for directed in [false, true] {
            let start = Instant::now();
            let report = verify_intractable(n, directed, &opts).unwrap();
            let elapsed = start.elapsed();
            slowest = slowest.max(elapsed);
            if !report.pass {
                failures.push(format!("n={n} directed={directed}: {}", json!(report.counterexample)));
            }
            if elapsed >= Duration::from_secs(5) {
                failures.push(format!("n={n} directed={directed}: took {elapsed:?}"));
            }
            // independent check against the unpruned oracle where it is cheap
            if n <= 3 {
                let g = gen_intractable(n, directed).unwrap();
                let inst = oracle::Inst {
                    directed,
                    vertices: g.vertex_count(),
                    edges: g.edges().iter().map(|e| (e.u, e.v, e.c1, e.c2)).collect(),
                };
                let front = enumerate_front_with(&g, &opts).unwrap();
                if triples(front.points()) != inst.front() {
                    failures.push(format!("n={n} directed={directed}: front differs from oracle"));
                }
            }
        }
    }

    let literal = [(0, 13), (2, 11), (4, 9), (6, 7), (8, 2), (14, 1)].map(|(a, b)| ValueVector::integral(a, b));
    let mut literal_status = Vec::new();
    for directed in [false, true] {
        let g = gen_intractable(2, directed).unwrap();
        let front = enumerate_front_with(&g, &opts).unwrap();
        let ok = front.points() == literal;
        literal_status.push(format!(
            "{}: {}",
            if directed { "directed" } else { "undirected" },
            if ok { "matches".to_string() } else { format!("got {:?}", triples(front.points())) }
        ));
        if !ok {
            failures.push(format!("n=2 directed={directed}: front is not the listed six points"));
        }
    }
    verdict(
        "criterion 1 (intractability family)",
        failures.is_empty(),
        format!(
            "X-points + predicted st-points for n=2..4 both orientations checked, slowest {slowest:?}; \
             literal n=2 front {}; failures: {failures:?}",
            literal_status.join(", ")
        ),
    );
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn criterion_2_buco_reduction() {
    let opts = SolveOptions::default();
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut runs = 0;
    let instances = criterion_2_instances();
    for inst in &instances {
        for directed in [false, true] {
            runs += 1;
            let r = verify_buco_reduction(inst, directed, &opts).unwrap();
            if !r.pass {
                failures.push(json!({ "c1": inst.values(), "c2": inst.weights(), "directed": directed, "report": r }));
            }
        }
    }
    let small = BucoInstance::new(vec![1, 2], vec![2, 1]).unwrap();
    let r = verify_buco_reduction(&small, false, &opts).unwrap();
    let recovered = json!([{"f1": -3, "f2": [3, 1]}, {"f1": -2, "f2": [1, 1]}, {"f1": 0, "f2": [0, 1]}]);
    if !r.pass || r.details["recovered_front"]["points"] != recovered {
        failures.push(json!({ "example": "c1=(1,2) c2=(2,1)", "report": r }));
    }
    let one = BucoInstance::new(vec![1], vec![1]).unwrap();
    if !verify_buco_reduction(&one, false, &opts).unwrap().pass {
        failures.push(json!({ "example": "c1=c2=(1)" }));
    }
    let elapsed = start.elapsed();
    let sizes: Vec<usize> = (1..=4).map(|n| instances.iter().filter(|i| i.len() == n).count()).collect();
    let pass = failures.is_empty() && elapsed < Duration::from_secs(30);
    verdict(
        "criterion 2 (BUCO reduction)",
        pass,
        format!(
            "{runs} reductions ({} instances with n=1..4 counts {sizes:?}, undirected and directed) in {elapsed:?}, {} failures",
            instances.len(),
            failures.len()
        ),
    );
    assert!(pass, "{failures:#?}");
}

#[test]
fn criterion_3_sat_construction() {
    let start = Instant::now();
    let r = verify_cai(&fig4(), &[false, true, true]).unwrap();
    let d = &r.details;
    let numbers_ok = d["vertices"] == 57
        && d["edges"] == 119
        && d["K"] == 66
        && d["f(S_w)"] == json!({"f1": 66, "f2": [2, 1]})
        && d["f(E)"] == json!({"f1": 119, "f2": [1, 1]})
        && d["lambda_w"] == json!([[2, 1], [63, 1]])
        && d["lambda.f(S_w)"] == "258"
        && d["lambda.f(S_1)"] == "301"
        && d["lambda.y_h"] == "301"
        && d["feasible_single_removals"] == 119;
    let gadget = forced_gadget_check();
    let single = verify_cai(&parse_dimacs("p cnf 3 1\n1 2 3 0\n").unwrap(), &[true, false, false]).unwrap();
    let single_ok = single.pass && single.details["K"] == 57;
    let elapsed = start.elapsed();
    let pass = r.pass && numbers_ok && gadget.all_minimum_contain_forced && single_ok && elapsed < Duration::from_secs(10);
    verdict(
        "criterion 3 (3-SAT construction)",
        pass,
        format!(
            "|V|={} |E|={} K={} f(S_w)={} f(E)={} lambda_w.f(S_w)={} < lambda_w.f(S_1)={} = lambda_w.y_h={}; \
             {} minimum 2-spanners of the gadget, all contain the forced edge: {}; n=3 m=1 K={}; {elapsed:?}",
            d["vertices"],
            d["edges"],
            d["K"],
            d["f(S_w)"],
            d["f(E)"],
            d["lambda.f(S_w)"],
            d["lambda.f(S_1)"],
            d["lambda.y_h"],
            gadget.minimum_count,
            gadget.all_minimum_contain_forced,
            single.details["K"]
        ),
    );
    assert!(pass, "{r:#?}");
}

#[test]
fn criterion_4a_edge_restricted_equals_all_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut spanners = 0u64;
    let mut mismatch = None;
    for i in 0..200 {
        let inst = random_instance(&mut rng, 8, 10, 0..=5, 5, i % 3 == 0);
        let g = inst.graph();
        let m = g.edge_count();
        for mask in 0..=inst.full_mask() {
            let s = Spanner::new(mask_set(mask, m));
            let er = eval(&g, &s, EvalMode::EdgeRestricted);
            let ap = eval(&g, &s, EvalMode::AllPairs);
            let expected = inst.value(mask).map(as_vector);
            let agree = match (&er, &ap, expected) {
                (Ok(a), Ok(b), Some(c)) => *a == c && *b == c,
                (Err(Error::InfeasibleSpanner), Err(Error::InfeasibleSpanner), None) => true,
                _ => false,
            };
            if expected.is_some() {
                spanners += 1;
            }
            if !agree || is_spanner(&g, &s.edges) != expected.is_some() {
                mismatch = Some(format!("{inst:?} mask {mask}: {er:?} {ap:?} {expected:?}"));
                break;
            }
        }
        if mismatch.is_some() {
            break;
        }
    }
    verdict(
        "criterion 4(a) (edge-restricted f2 = all-pairs f2)",
        mismatch.is_none(),
        format!("200 random instances, {spanners} feasible spanners compared against a Floyd-Warshall oracle; {}", mismatch.as_deref().unwrap_or("no mismatch")),
    );
    assert!(mismatch.is_none());
}

#[test]
fn criterion_4b_pruned_front_equals_unpruned() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut mismatch = None;
    let mut points = 0;
    for i in 0..100 {
        let inst = random_instance(&mut rng, 8, 12, -2..=5, 5, i % 2 == 1);
        let g = inst.graph();
        let front = enumerate_front_with(&g, &SolveOptions::with_budget(40)).unwrap();
        let expected = inst.front();
        points += expected.len();
        let witnesses_ok = front.points().iter().zip(front.witnesses().unwrap()).all(|(p, w)| {
            let mask = w.edges.iter().fold(0u64, |acc, e| acc | 1 << e);
            inst.value(mask) == Some(as_triple(p))
        });
        if triples(front.points()) != expected || !witnesses_ok {
            mismatch = Some(format!("{inst:?}: {:?} vs {expected:?}", triples(front.points())));
            break;
        }
    }
    verdict(
        "criterion 4(b) (pruned front = unpruned 2^|E| front)",
        mismatch.is_none(),
        format!("100 random instances with |E| <= 12 and c1 in -2..=5, {points} front points; {}", mismatch.as_deref().unwrap_or("no mismatch")),
    );
    assert!(mismatch.is_none());
}

#[test]
fn criterion_4c_buco_dp_equals_brute() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let mut mismatch = None;
    for i in 0..100 {
        let max_entry = if i % 2 == 0 { 9 } else { 1000 };
        let inst = random_buco(&mut rng, 16, max_entry);
        let (a, b) = (buco_dp(&inst).unwrap(), buco_brute(&inst).unwrap());
        if a.points() != b.points() {
            mismatch = Some(format!("{inst:?}"));
            break;
        }
    }
    verdict(
        "criterion 4(c) (buco_dp = buco_brute)",
        mismatch.is_none(),
        format!("100 random instances with n <= 16, entries <= 9 or <= 1000; {}", mismatch.as_deref().unwrap_or("no mismatch")),
    );
    assert!(mismatch.is_none());
}

#[test]
fn criterion_4d_dichotomic_equals_hull() {
    let opts = SolveOptions::default();
    let mut graphs: Vec<(String, WeightedGraph)> = Vec::new();
    for n in 2..=4 {
        for directed in [false, true] {
            graphs.push((format!("intractable n={n} directed={directed}"), gen_intractable(n, directed).unwrap()));
        }
    }
    for (i, inst) in criterion_2_instances().iter().enumerate() {
        for directed in [false, true] {
            graphs.push((format!("buco #{i} directed={directed}"), gen_from_buco(inst, directed).unwrap().0));
        }
    }
    let mut mismatch = None;
    let mut extreme_points = 0;
    for (label, g) in &graphs {
        let front = enumerate_front_with(g, &opts).unwrap();
        let hull = extreme_from_front(&front);
        let dich = extreme_dichotomic(g, &opts).unwrap();
        extreme_points += hull.len();
        if hull != dich || !hull.iter().all(|c| c.validate(front.points())) {
            mismatch = Some(format!("{label}: {hull:?} vs {dich:?}"));
            break;
        }
    }
    verdict(
        "criterion 4(d) (extreme_dichotomic = extreme_from_front)",
        mismatch.is_none(),
        format!("{} instances from criteria 1-2, {extreme_points} certified extreme points; {}",
            graphs.len(),
            mismatch.as_deref().unwrap_or("no mismatch")
        ),
    );
    assert!(mismatch.is_none());
}

fn random_vector<R: Rng>(rng: &mut R) -> ValueVector {
    ValueVector::new(rng.gen_range(-3..=3), Rational::new(rng.gen_range(1..=6), rng.gen_range(1..=3)))
}

#[test]
fn criterion_5_property_suites() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut failures: Vec<String> = Vec::new();

    // dominance is a strict partial order
    let mut triples_checked = 0;
    for _ in 0..20_000 {
        let (a, b, c) = (random_vector(&mut rng), random_vector(&mut rng), random_vector(&mut rng));
        triples_checked += 1;
        if dominates(&a, &a) || (dominates(&a, &b) && dominates(&b, &a)) {
            failures.push(format!("irreflexive/asymmetric: {a} {b}"));
        }
        if dominates(&a, &b) && dominates(&b, &c) && !dominates(&a, &c) {
            failures.push(format!("transitive: {a} {b} {c}"));
        }
    }

    // f2 monotone under edge addition, and f2(E) = 1
    let mut additions = 0u64;
    for i in 0..150 {
        let inst = random_instance(&mut rng, 7, 10, -2..=5, 6, i % 2 == 0);
        let g = inst.graph();
        let ev = Evaluator::new(&g);
        let m = g.edge_count();
        let full = ev.value(&g.all_edges(), EvalMode::EdgeRestricted).unwrap();
        if full.f2 != Rational::from_integer(1) {
            failures.push(format!("f2(E) = {} on {inst:?}", full.f2));
        }
        for mask in 0..=inst.full_mask() {
            let Ok(v) = ev.value(&mask_set(mask, m), EvalMode::EdgeRestricted) else { continue };
            for e in (0..m).filter(|e| mask >> e & 1 == 0) {
                additions += 1;
                let w = ev.value(&mask_set(mask | 1 << e, m), EvalMode::EdgeRestricted).unwrap();
                if w.f2 > v.f2 {
                    failures.push(format!("adding {e} to mask {mask} raised f2 on {inst:?}"));
                }
            }
        }
    }

    // unweighted bound on every small graph
    let mut unweighted = 0;
    let mut check_unweighted = |directed: bool, k: usize| {
        let pairs: Vec<(usize, usize)> = (0..k)
            .flat_map(|u| (0..k).map(move |v| (u, v)))
            .filter(|&(u, v)| if directed { u != v } else { u < v })
            .collect();
        for mask in 1u64..1 << pairs.len() {
            let edges = (0..pairs.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| Edge::new(pairs[i].0, pairs[i].1, 1, 1))
                .collect();
            let Ok(g) = WeightedGraph::new(directed, k, edges) else { continue };
            unweighted += 1;
            let r = verify_unweighted_bound(&g, &SolveOptions::default()).unwrap();
            if !r.pass {
                failures.push(format!("unweighted bound: {}", json!(r)));
            }
        }
    };
    for k in 2..=5 {
        check_unweighted(false, k);
    }
    check_unweighted(true, 2);
    check_unweighted(true, 3);

    verdict(
        "criterion 5 (property suites)",
        failures.is_empty(),
        format!(
            "{triples_checked} dominance triples, {additions} single-edge additions over 150 instances, \
             f2(E)=1 on all of them, {unweighted} connected unweighted graphs (all on 2..5 vertices, all digraphs on 2..3); \
             failures: {:?}",
            failures.iter().take(3).collect::<Vec<_>>()
        ),
    );
    assert!(failures.is_empty());
}

#[test]
fn closed_form_points_are_attained() {
    for n in 2..=4 {
        let g = gen_intractable(n, false).unwrap();
        let layout = IntractableLayout::new(n);
        for t in 0..1u64 << n {
            let v = eval(&g, &Spanner::new(layout.spanner(t, false)), EvalMode::AllPairs).unwrap();
            assert_eq!(v, layout.x_point(t));
        }
    }
}
