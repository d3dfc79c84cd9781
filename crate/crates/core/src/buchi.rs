//! Translation of every parameterized condition to Büchi acceptance
//! (`(inf, ⊓)` with a single table member), plus emptiness checking with
//! lasso witnesses and bounded language comparison.
//!
//! The pipeline is `condition → Muller → Büchi`:
//!
//! 1. [`condition_to_muller`] builds the visited-set product over
//!    `Q × 𝒫(Q)`.  Along any infinite product path the accumulated
//!    component stabilizes to the run statistic of the projected original
//!    path, so the product's infinitely-visited set is exactly
//!    `{(q, V) : q ∈ I}` for the projected path's statistics `V = run`,
//!    `I = inf`.  Every *coherent* pair (`∅ ≠ I ⊆ V`) whose statistics
//!    satisfy the condition contributes that set as a Muller table member;
//!    nothing else can occur as an infinitely-visited set, so reading the
//!    product under inf-set equality against the table is exact for all
//!    conditions at once.
//! 2. [`muller_to_buchi`] applies the breakpoint construction per Muller
//!    member.
//!
//! [`to_buchi`] composes the two and trims to the reachable part;
//! [`is_empty`] then decides emptiness structurally and returns a lasso
//! witness, and [`bounded_equiv`] compares two automaton/condition pairs on
//! all canonical ultimately periodic words within length bounds.

use crate::automaton::{naming, Automaton};
use crate::error::{Error, Result};
use crate::semantics::{accepts_routed, Condition, OracleGuard, RunSummary};
use crate::transforms::SizeGuard;
use crate::words::{enumerate, LassoWord};
use std::collections::{BTreeSet, HashMap};

/// A Muller acceptance table: a path is accepted when its
/// infinitely-visited set equals one of the members.
///
/// Members index the states of the companion automaton; reading that
/// automaton under inf-set equality against this table realizes the Muller
/// semantics directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MullerTable {
    sets: Vec<BTreeSet<usize>>,
}

impl MullerTable {
    /// A table from the given members, sorted and deduplicated.
    pub fn new(mut sets: Vec<BTreeSet<usize>>) -> Self {
        sets.sort();
        sets.dedup();
        MullerTable { sets }
    }

    /// The members, in canonical order.
    pub fn sets(&self) -> &[BTreeSet<usize>] {
        &self.sets
    }
}

/// Rewrites an automaton under an arbitrary condition into an equivalent
/// Muller automaton: the reachable visited-set product over `Q × 𝒫(Q)`
/// together with its Muller table.
///
/// The product starts at `(q₀, ∅)` and a step to `q` adds `q` to the
/// accumulated set, mirroring the exclusion of the initial position from
/// the path statistics.  For every accumulated value `V` occurring in the
/// product and every nonempty `I ⊆ V` whose product states `(q, V)`,
/// `q ∈ I`, are all present, the statistics pair (`run = V`, `inf = I`) is
/// tested against the condition; satisfied pairs contribute the member
/// `{(q, V) : q ∈ I}`.  Pairs with a missing product state are skipped
/// soundly, since a path realizing them would visit those exact states.
/// The returned automaton carries the same sets as its own table, so it can
/// be read under inf-set equality directly; determinism and completeness
/// are preserved.
pub fn condition_to_muller(
    a: &Automaton,
    cond: &Condition,
    guard: &SizeGuard,
) -> Result<(Automaton, MullerTable)> {
    let n = a.state_count();
    if n > guard.max_subset_states {
        return Err(Error::guard(
            "condition-to-muller subset product states",
            n,
            guard.max_subset_states,
        ));
    }
    let mut states: Vec<(usize, u64)> = vec![(a.initial(), 0)];
    let mut index: HashMap<(usize, u64), usize> = HashMap::from([((a.initial(), 0), 0)]);
    let mut transitions = Vec::new();
    let mut cursor = 0;
    while cursor < states.len() {
        let (p, s) = states[cursor];
        for x in 0..a.alphabet().len() {
            for &q in a.successors(p, x) {
                let next = (q, s | (1 << q));
                let target = *index.entry(next).or_insert_with(|| {
                    states.push(next);
                    states.len() - 1
                });
                transitions.push((cursor, x, target));
            }
        }
        cursor += 1;
    }
    let mut v_masks: BTreeSet<u64> = states.iter().map(|&(_, v)| v).collect();
    v_masks.remove(&0);
    let mut members = Vec::new();
    for &v in &v_masks {
        let run_set: BTreeSet<usize> = (0..n).filter(|&q| v & (1 << q) != 0).collect();
        let mut i_mask = v;
        while i_mask > 0 {
            let inf_states: Vec<usize> = (0..n).filter(|&q| i_mask & (1 << q) != 0).collect();
            if let Some(member) = inf_states
                .iter()
                .map(|&q| index.get(&(q, v)).copied())
                .collect::<Option<BTreeSet<usize>>>()
            {
                let summary = RunSummary::new(run_set.clone(), inf_states.iter().copied().collect())
                    .expect("coherent by construction");
                if crate::semantics::condition_holds(cond, a, &summary) {
                    members.push(member);
                }
            }
            i_mask = (i_mask - 1) & v;
        }
    }
    let table = MullerTable::new(members);
    let names = states
        .iter()
        .map(|&(q, v)| {
            naming::dot_join(&[
                a.state(q).as_str(),
                &naming::set_name(
                    (0..n)
                        .filter(|&p| v & (1 << p) != 0)
                        .map(|p| a.state(p).as_str()),
                ),
            ])
        })
        .collect();
    let product = crate::transforms::assemble(
        a.alphabet().clone(),
        names,
        0,
        transitions,
        table.sets().to_vec(),
    )?;
    Ok((product, table))
}

/// Rewrites an automaton with a Muller table into a Büchi automaton (to be
/// read under `(inf, ⊓)`) with a single possibly-empty table member, via
/// the breakpoint construction.
///
/// The input automaton's own embedded table is ignored; acceptance is taken
/// from `m`.  States are the original ones plus, per Muller member `M`, the
/// full block `{(q, M, K) : q ∈ M, K ⊆ M}`.  Original transitions are
/// copied; a transition into some `q′ ∈ M` may also jump to
/// `(q′, M, {q′})`; inside a block, transitions follow the original ones
/// restricted to `M`, accumulate the breakpoint set `K`, and reset it to
/// `{q′}` from `K = M`.  A path stuck forever in the `M`-block visits only
/// states of `M` and passes `K = M` infinitely often exactly when every
/// state of `M` recurs — i.e. when the projected path's infinitely-visited
/// set is exactly `M` — so the accepting member is all `(q, M, M)`.
pub fn muller_to_buchi(a: &Automaton, m: &MullerTable) -> Result<Automaton> {
    let n = a.state_count();
    let guard = SizeGuard::from_env();
    for member in m.sets() {
        if member.len() > guard.max_member_size {
            return Err(Error::guard(
                "muller-to-buchi member size",
                member.len(),
                guard.max_member_size,
            ));
        }
        if member.iter().any(|&q| q >= n) {
            return Err(Error::unsupported(
                "muller-to-buchi",
                "table member references a state index outside the automaton",
            ));
        }
    }
    let mut names: Vec<String> = a.states().iter().map(|s| s.as_str().to_string()).collect();
    // Block layout: per member, states (q, K) for q ∈ M ascending and K
    // over submasks of M in ascending mask order.
    let mut block_base = Vec::with_capacity(m.sets().len());
    for member in m.sets() {
        block_base.push(names.len());
        let elems: Vec<usize> = member.iter().copied().collect();
        let m_label = naming::set_name(elems.iter().map(|&q| a.state(q).as_str()));
        for &q in &elems {
            for k_mask in 0u64..(1 << elems.len()) {
                let k_label = naming::set_name(
                    elems
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| k_mask & (1 << i) != 0)
                        .map(|(_, &p)| a.state(p).as_str()),
                );
                names.push(naming::dot_join(&[a.state(q).as_str(), &m_label, &k_label]));
            }
        }
    }
    let state_of = |j: usize, elems: &[usize], q: usize, k_mask: u64| -> usize {
        let q_pos = elems.iter().position(|&p| p == q).expect("q in member");
        block_base[j] + q_pos * (1usize << elems.len()) + k_mask as usize
    };
    let mut transitions: Vec<(usize, usize, usize)> = a.transitions().to_vec();
    let mut accepting = BTreeSet::new();
    for (j, member) in m.sets().iter().enumerate() {
        let elems: Vec<usize> = member.iter().copied().collect();
        let full: u64 = (1 << elems.len()) - 1;
        let bit = |q: usize| 1u64 << elems.iter().position(|&p| p == q).expect("q in member");
        for &(p, x, q2) in a.transitions() {
            if member.contains(&q2) {
                // Jump from the copy into the block.
                transitions.push((p, x, state_of(j, &elems, q2, bit(q2))));
            }
        }
        for &q in &elems {
            for k_mask in 0u64..=full {
                let src = state_of(j, &elems, q, k_mask);
                if k_mask == full {
                    accepting.insert(src);
                }
                for &(p, x, q2) in a.transitions() {
                    if p == q && member.contains(&q2) {
                        let k_next = if k_mask == full {
                            bit(q2)
                        } else {
                            k_mask | bit(q2)
                        };
                        transitions.push((src, x, state_of(j, &elems, q2, k_next)));
                    }
                }
            }
        }
    }
    crate::transforms::assemble(
        a.alphabet().clone(),
        names,
        a.initial(),
        transitions,
        vec![accepting],
    )
}

/// Rewrites an automaton under an arbitrary condition into an equivalent
/// Büchi automaton — `(inf, ⊓)` with a single table member — restricted to
/// its reachable part.
///
/// Composes [`condition_to_muller`] and [`muller_to_buchi`], then drops
/// unreachable states; the single table member is intersected with the kept
/// states and retained even when it becomes empty, so the output always has
/// exactly one member.
pub fn to_buchi(a: &Automaton, cond: &Condition, guard: &SizeGuard) -> Result<Automaton> {
    let (product, table) = condition_to_muller(a, cond, guard)?;
    let big = muller_to_buchi(&product, &table)?;
    let reach = big.reachable();
    let mut remap = vec![usize::MAX; big.state_count()];
    let mut names = Vec::new();
    for (i, keep) in reach.iter().enumerate() {
        if *keep {
            remap[i] = names.len();
            names.push(big.state(i).as_str().to_string());
        }
    }
    let transitions = big
        .transitions()
        .iter()
        .filter(|&&(p, _, q)| reach[p] && reach[q])
        .map(|&(p, x, q)| (remap[p], x, remap[q]))
        .collect();
    let member: BTreeSet<usize> = big.table()[0]
        .iter()
        .filter(|&&q| reach[q])
        .map(|&q| remap[q])
        .collect();
    crate::transforms::assemble(
        big.alphabet().clone(),
        names,
        remap[big.initial()],
        transitions,
        vec![member],
    )
}

/// Result of a Büchi emptiness check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmptinessReport {
    /// Whether the language is empty.
    pub empty: bool,
    /// A canonical accepted lasso word when the language is nonempty.
    pub witness: Option<LassoWord>,
}

/// Decides emptiness of a Büchi automaton — one read under `(inf, ⊓)` with
/// a single table member, as produced by [`to_buchi`] — and produces a
/// canonical accepted lasso word when nonempty.
///
/// The language is nonempty exactly when some accepting state is reachable
/// and lies on a cycle.  Among those, the state with the smallest
/// (breadth-first distance, index) is chosen; the witness is its canonical
/// form of (letter-ordered shortest stem) followed by (letter-ordered
/// shortest cycle through the state, at least one step).
pub fn is_empty(a: &Automaton) -> Result<EmptinessReport> {
    let [member] = a.table() else {
        return Err(Error::unsupported(
            "is-empty",
            "requires a single-member table as produced by to-buchi",
        ));
    };
    let n = a.state_count();
    // Breadth-first search from the initial state, expanding letters in
    // alphabet order so stems are canonical.
    let mut dist = vec![usize::MAX; n];
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut queue = std::collections::VecDeque::from([a.initial()]);
    dist[a.initial()] = 0;
    while let Some(p) = queue.pop_front() {
        for x in 0..a.alphabet().len() {
            for &q in a.successors(p, x) {
                if dist[q] == usize::MAX {
                    dist[q] = dist[p] + 1;
                    parent[q] = Some((p, x));
                    queue.push_back(q);
                }
            }
        }
    }
    // A state is on a cycle iff its strongly connected component has an
    // internal edge (more than one node, or a self-loop).
    let mut graph = petgraph::graph::DiGraph::<(), ()>::new();
    let nodes: Vec<_> = (0..n).map(|_| graph.add_node(())).collect();
    let mut has_self_loop = vec![false; n];
    for &(p, _, q) in a.transitions() {
        graph.add_edge(nodes[p], nodes[q], ());
        if p == q {
            has_self_loop[p] = true;
        }
    }
    let mut on_cycle = vec![false; n];
    for scc in petgraph::algo::tarjan_scc(&graph) {
        let internal = scc.len() > 1 || has_self_loop[scc[0].index()];
        for node in scc {
            on_cycle[node.index()] = internal;
        }
    }
    let candidate = member
        .iter()
        .copied()
        .filter(|&q| dist[q] != usize::MAX && on_cycle[q])
        .min_by_key(|&q| (dist[q], q));
    let Some(target) = candidate else {
        return Ok(EmptinessReport {
            empty: true,
            witness: None,
        });
    };
    let mut stem = Vec::new();
    let mut at = target;
    while let Some((p, x)) = parent[at] {
        stem.push(a.alphabet().symbol(x).clone());
        at = p;
    }
    stem.reverse();
    // Shortest cycle through `target`, letters in alphabet order, length ≥ 1.
    let mut cdist = vec![usize::MAX; n];
    let mut cparent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut found: Option<(usize, usize)> = None;
    let mut queue = std::collections::VecDeque::from([target]);
    cdist[target] = 0;
    'outer: while let Some(p) = queue.pop_front() {
        for x in 0..a.alphabet().len() {
            for &q in a.successors(p, x) {
                if q == target {
                    found = Some((p, x));
                    break 'outer;
                }
                if cdist[q] == usize::MAX {
                    cdist[q] = cdist[p] + 1;
                    cparent[q] = Some((p, x));
                    queue.push_back(q);
                }
            }
        }
    }
    let (last, x) = found.expect("target lies on a cycle");
    let mut cycle = vec![a.alphabet().symbol(x).clone()];
    let mut at = last;
    while let Some((p, x)) = cparent[at] {
        cycle.push(a.alphabet().symbol(x).clone());
        at = p;
    }
    cycle.reverse();
    let witness = LassoWord::new(stem, cycle)?;
    Ok(EmptinessReport {
        empty: false,
        witness: Some(witness),
    })
}

/// Result of a bounded language comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundedOutcome {
    /// The languages agree on every canonical word within the bounds.
    Equal,
    /// The first disagreement, in canonical enumeration order.
    Counterexample {
        /// The distinguishing word.
        word: LassoWord,
        /// Acceptance by the first automaton/condition pair.
        in1: bool,
        /// Acceptance by the second automaton/condition pair.
        in2: bool,
    },
}

/// Compares two automaton/condition pairs on every canonical ultimately
/// periodic word with stem length at most `stem_max` and cycle length at
/// most `cycle_max`, in canonical enumeration order; returns the first
/// disagreement if any.
///
/// Both automata must share one alphabet.
pub fn bounded_equiv(
    a1: &Automaton,
    c1: &Condition,
    a2: &Automaton,
    c2: &Condition,
    stem_max: usize,
    cycle_max: usize,
) -> Result<BoundedOutcome> {
    if a1.alphabet() != a2.alphabet() {
        return Err(Error::unsupported(
            "bounded-equiv",
            "automata must share one alphabet",
        ));
    }
    let guard = OracleGuard::default();
    for w in enumerate(a1.alphabet(), stem_max, cycle_max) {
        let in1 = accepts_routed(a1, c1, &w, &guard)?;
        let in2 = accepts_routed(a2, c2, &w, &guard)?;
        if in1 != in2 {
            return Ok(BoundedOutcome::Counterexample { word: w, in1, in2 });
        }
    }
    Ok(BoundedOutcome::Equal)
}
