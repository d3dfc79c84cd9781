//! Shared fixtures for integration tests: seeded random corpora over the
//! two-letter alphabet and an independent run simulator used to
//! cross-check the oracle.
#![allow(dead_code)] // each integration test binary uses a subset

use std::collections::BTreeSet;

use oaut_core::{Automaton, AutomatonParts, Condition, LassoWord, StateId, Symbol};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A fixed-seed generator so every corpus is reproducible.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random automaton over `{a, b}` with `1..=max_states` states,
/// arbitrary transition structure, and up to three table members.
pub fn random_automaton(rng: &mut ChaCha8Rng, max_states: usize) -> Automaton {
    let n = rng.random_range(1..=max_states);
    build_random(rng, n, false)
}

/// A random deterministic complete automaton over `{a, b}`.
pub fn random_dca(rng: &mut ChaCha8Rng, max_states: usize) -> Automaton {
    let n = rng.random_range(1..=max_states);
    build_random(rng, n, true)
}

/// A random deterministic (not necessarily complete) automaton over
/// `{a, b}`.
pub fn random_det(rng: &mut ChaCha8Rng, max_states: usize) -> Automaton {
    let n = rng.random_range(1..=max_states);
    let a = build_random(rng, n, true);
    if rng.random_bool(0.5) {
        return a;
    }
    // Drop a few transitions to exercise incomplete inputs.
    let keep: Vec<(StateId, Symbol, StateId)> = a
        .transitions()
        .iter()
        .filter(|_| rng.random_bool(0.7))
        .map(|&(p, s, q)| {
            (
                a.state(p).clone(),
                a.alphabet().symbol(s).clone(),
                a.state(q).clone(),
            )
        })
        .collect();
    let table = a
        .table()
        .iter()
        .map(|m| m.iter().map(|&q| a.state(q).clone()).collect())
        .collect();
    Automaton::new(AutomatonParts {
        alphabet: a.alphabet().iter().cloned().collect::<Vec<_>>(),
        states: a.states().to_vec(),
        initial: a.state(a.initial()).clone(),
        transitions: keep,
        table,
    })
    .expect("thinned parts stay valid")
}

/// A random automaton over `{a, b}` whose table has exactly one member,
/// read as a Büchi automaton under `(inf, ⊓)`.
pub fn random_buchi(rng: &mut ChaCha8Rng, max_states: usize) -> Automaton {
    let a = random_automaton(rng, max_states);
    let mut member = BTreeSet::new();
    for q in 0..a.state_count() {
        if rng.random_bool(0.4) {
            member.insert(a.state(q).clone());
        }
    }
    let table = vec![member];
    Automaton::new(AutomatonParts {
        alphabet: a.alphabet().iter().cloned().collect::<Vec<_>>(),
        states: a.states().to_vec(),
        initial: a.state(a.initial()).clone(),
        transitions: a
            .transitions()
            .iter()
            .map(|&(p, s, q)| {
                (
                    a.state(p).clone(),
                    a.alphabet().symbol(s).clone(),
                    a.state(q).clone(),
                )
            })
            .collect(),
        table,
    })
    .expect("single-member parts stay valid")
}

fn build_random(rng: &mut ChaCha8Rng, n: usize, det_complete: bool) -> Automaton {
    let alphabet = vec![
        Symbol::new("a").expect("valid symbol"),
        Symbol::new("b").expect("valid symbol"),
    ];
    let states: Vec<StateId> = (0..n)
        .map(|i| StateId::new(format!("q{i}")).expect("valid state name"))
        .collect();
    let mut transitions = Vec::new();
    for q in 0..n {
        for symbol in &alphabet {
            if det_complete {
                let t = rng.random_range(0..n);
                transitions.push((states[q].clone(), symbol.clone(), states[t].clone()));
            } else {
                for t in 0..n {
                    if rng.random_bool(0.35) {
                        transitions.push((
                            states[q].clone(),
                            symbol.clone(),
                            states[t].clone(),
                        ));
                    }
                }
            }
        }
    }
    let mut table = Vec::new();
    for _ in 0..rng.random_range(0..=3usize) {
        let mut member = BTreeSet::new();
        for state in &states {
            if rng.random_bool(0.5) {
                member.insert(state.clone());
            }
        }
        table.push(member);
    }
    let initial = states[0].clone();
    Automaton::new(AutomatonParts {
        alphabet,
        states,
        initial,
        transitions,
        table,
    })
    .expect("random parts are valid")
}

/// All sixteen conditions: the twelve statistic/relation pairs plus the
/// four named ones.
pub fn all_conditions() -> Vec<Condition> {
    let mut conds: Vec<Condition> = Condition::all_pairs().collect();
    conds.extend(
        ["A", "Aprime", "L", "Lprime"]
            .iter()
            .map(|t| Condition::parse_tokens(&[t]).expect("named condition token")),
    );
    conds
}

/// Independently simulates the unique run of a deterministic complete
/// automaton on `w`, returning its `(run, inf)` statistics with index 0
/// excluded — a straight walk that unrolls cycle repetitions until the
/// state at a cycle boundary repeats, sharing no code with the oracle.
pub fn simulate_unique_run(a: &Automaton, w: &LassoWord) -> (BTreeSet<usize>, BTreeSet<usize>) {
    assert!(a.is_deterministic() && a.is_complete());
    let step = |state: usize, letter_index: usize| -> usize {
        let sym = w.letter_at(letter_index);
        let s = a
            .alphabet()
            .index_of(sym.as_str())
            .expect("word letters come from the alphabet");
        a.successors(state, s)[0]
    };
    let mut seq = vec![a.initial()];
    for _ in 0..w.stem().len() {
        seq.push(step(*seq.last().expect("nonempty"), seq.len() - 1));
    }
    // Read whole cycles until the state at a cycle boundary repeats; from
    // there the walk retraces the segment between the two boundaries.
    let mut boundaries: Vec<usize> = Vec::new();
    let (start, end) = loop {
        let pos = seq.len() - 1;
        if let Some(&prev) = boundaries.iter().find(|&&p| seq[p] == seq[pos]) {
            break (prev, pos);
        }
        boundaries.push(pos);
        for _ in 0..w.cycle().len() {
            seq.push(step(*seq.last().expect("nonempty"), seq.len() - 1));
        }
    };
    let run: BTreeSet<usize> = seq[1..=end].iter().copied().collect();
    let inf: BTreeSet<usize> = seq[start + 1..=end].iter().copied().collect();
    (run, inf)
}
