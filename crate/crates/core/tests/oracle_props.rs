//! Cross-validation of the acceptance oracle: the routed fast paths agree
//! with the product-graph oracle everywhere, on deterministic complete
//! automata the single run summary matches an independent simulation, and
//! trimming unreachable states never changes the accepted language.

mod common;

use oaut_core::{
    accepts, accepts_routed, enumerate, run_summaries, AutomatonDocument, Condition, LassoWord,
    OracleGuard, Rel, StatKind,
};
use std::collections::BTreeSet;

#[test]
fn routed_agrees_with_oracle_on_a_random_corpus() {
    let guard = OracleGuard::default();
    let conds = common::all_conditions();
    let mut rng = common::rng(101);
    for _ in 0..150 {
        let a = common::random_automaton(&mut rng, 4);
        for w in enumerate(a.alphabet(), 2, 2) {
            for cond in &conds {
                let plain = accepts(&a, cond, &w, &guard).expect("oracle in bounds");
                let routed = accepts_routed(&a, cond, &w, &guard).expect("routed in bounds");
                assert_eq!(plain, routed, "condition {cond}, word {w}");
            }
        }
    }
}

#[test]
fn trim_unreachable_preserves_the_language_on_a_random_corpus() {
    let guard = OracleGuard::default();
    let conds = common::all_conditions();
    let mut rng = common::rng(303);
    let mut trimmed_cases = 0usize;
    for _ in 0..100 {
        let a = common::random_automaton(&mut rng, 4);
        let words = enumerate(a.alphabet(), 3, 3);
        for cond in &conds {
            let t = a.trim_unreachable(cond);
            if t.state_count() < a.state_count() {
                trimmed_cases += 1;
            }
            if a.is_deterministic() {
                assert!(t.is_deterministic(), "trim keeps determinism under {cond}");
            }
            if a.is_complete() {
                assert!(t.is_complete(), "trim keeps completeness under {cond}");
            }
            for w in &words {
                let before = accepts(&a, cond, w, &guard).expect("oracle in bounds");
                let after = accepts(&t, cond, w, &guard).expect("oracle in bounds");
                assert_eq!(before, after, "condition {cond}, word {w}");
            }
        }
    }
    assert!(trimmed_cases > 0, "corpus never exercised an unreachable state");
}

#[test]
fn trim_rewrites_tables_over_the_reachable_part() {
    let guard = OracleGuard::default();
    let doc = AutomatonDocument::parse(
        "alphabet a\nstate q0 init\nstate q1\ntrans q0 a q0\ntrans q1 a q1\ntable {q1}\ncond ninf subseteq\n",
    )
    .expect("document parses");
    let a = doc.automaton;
    let w = LassoWord::parse(":a", a.alphabet()).expect("word parses");

    // `ninf ⊆`: the member covers the removed state, so it survives with the
    // removed state deleted.
    let cond = Condition::Pair(StatKind::Ninf, Rel::Subseteq);
    let t = a.trim_unreachable(&cond);
    assert_eq!(t.state_count(), 1);
    assert_eq!(t.table(), &[BTreeSet::new()]);
    assert!(accepts(&a, &cond, &w, &guard).unwrap());
    assert!(accepts(&t, &cond, &w, &guard).unwrap());

    // `ninf ⊓`: a member meeting the removed set holds on every run, so the
    // removed state is kept as a self-looping sentinel.
    let cond = Condition::Pair(StatKind::Ninf, Rel::Meets);
    let t = a.trim_unreachable(&cond);
    assert_eq!(t.state_count(), 2);
    assert_eq!(t.table(), &[BTreeSet::from([1usize])]);
    assert!(t.is_complete() && t.is_deterministic());
    assert!(accepts(&a, &cond, &w, &guard).unwrap());
    assert!(accepts(&t, &cond, &w, &guard).unwrap());

    // `run =`: a member containing a removed state is unsatisfiable and is
    // dropped outright.
    let cond = Condition::Pair(StatKind::Run, Rel::Eq);
    let t = a.trim_unreachable(&cond);
    assert_eq!(t.state_count(), 1);
    assert!(t.table().is_empty());
    assert!(!accepts(&a, &cond, &w, &guard).unwrap());
    assert!(!accepts(&t, &cond, &w, &guard).unwrap());

    // `inf ⊓`: deleting the removed state empties the member, which is then
    // dropped rather than left behind as a spurious empty set.
    let cond = Condition::Pair(StatKind::Inf, Rel::Meets);
    let t = a.trim_unreachable(&cond);
    assert!(t.table().is_empty());
    assert!(!accepts(&t, &cond, &w, &guard).unwrap());
}

#[test]
fn deterministic_summaries_match_an_independent_simulation() {
    let guard = OracleGuard::default();
    let mut rng = common::rng(202);
    for _ in 0..200 {
        let a = common::random_dca(&mut rng, 4);
        for w in enumerate(a.alphabet(), 3, 3) {
            let summaries = run_summaries(&a, &w, &guard).expect("oracle in bounds");
            assert_eq!(summaries.len(), 1, "one run on a deterministic complete automaton");
            let (run, inf) = common::simulate_unique_run(&a, &w);
            assert_eq!(summaries[0].run_set(), &run, "run set on {w}");
            assert_eq!(summaries[0].inf_set(), &inf, "inf set on {w}");
        }
    }
}
