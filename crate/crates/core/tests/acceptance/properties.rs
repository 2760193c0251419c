use mspan::{dominates, nondominated_filter, EvalMode, Evaluator, Rational, ValueVector};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::oracle::random_instance;

fn vector() -> impl Strategy<Value = ValueVector> {
    (-5i64..=5, 1i64..=8, 1i64..=4).prop_map(|(f1, n, d)| ValueVector::new(f1, Rational::new(n, d)))
}

proptest! {
    #[test]
    fn dominance_is_irreflexive(a in vector()) {
        prop_assert!(!dominates(&a, &a));
    }

    #[test]
    fn dominance_is_asymmetric(a in vector(), b in vector()) {
        prop_assert!(!(dominates(&a, &b) && dominates(&b, &a)));
    }

    #[test]
    fn dominance_is_transitive(a in vector(), steps in prop::array::uniform4(0i64..=2)) {
        let b = ValueVector::new(a.f1 + steps[0], a.f2 + Rational::new(steps[1], 2));
        let c = ValueVector::new(b.f1 + steps[2], b.f2 + Rational::new(steps[3], 3));
        if dominates(&a, &b) && dominates(&b, &c) {
            prop_assert!(dominates(&a, &c));
        }
    }

    #[test]
    fn filter_output_is_a_staircase(points in prop::collection::vec(vector(), 0..30)) {
        let front = nondominated_filter(points.clone());
        prop_assert!(front.is_valid());
        for p in &points {
            prop_assert!(front.contains(p) || front.points().iter().any(|q| dominates(q, p)));
        }
        for q in front.points() {
            prop_assert!(points.contains(q));
        }
    }

    #[test]
    fn adding_an_edge_never_raises_stretch(seed in any::<u64>(), directed in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = random_instance(&mut rng, 7, 11, 1..=4, 7, directed);
        let g = inst.graph();
        let ev = Evaluator::new(&g);
        let full = g.all_edges();
        prop_assert_eq!(ev.value(&full, EvalMode::AllPairs).unwrap().f2, Rational::from_integer(1));
        let mut s = full.clone();
        // peel edges while feasible, then add them back one by one
        let mut removed = Vec::new();
        for e in full.iter() {
            s.remove(e);
            if ev.is_feasible(&s) {
                removed.push(e);
            } else {
                s.insert(e);
            }
        }
        let mut last = ev.value(&s, EvalMode::EdgeRestricted).unwrap().f2;
        for e in removed.into_iter().rev() {
            s.insert(e);
            let next = ev.value(&s, EvalMode::EdgeRestricted).unwrap().f2;
            prop_assert!(next <= last);
            last = next;
        }
        prop_assert_eq!(last, Rational::from_integer(1));
    }
}
