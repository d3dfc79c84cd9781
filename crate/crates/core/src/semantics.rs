//! Run statistics and parameterized acceptance.
//!
//! A run of an automaton on an infinite word is an infinite sequence of
//! states starting at the initial state and following transitions. Its
//! statistics collect the states occurring at positions **after** the
//! initial one (position 0 is excluded):
//!
//! * `run(p)`: states occurring at least once,
//! * `inf(p)`: states occurring infinitely often (nonempty, ⊆ run),
//! * `fin(p)` = `run(p) ∖ inf(p)`: states occurring finitely often but at
//!   least once,
//! * `ninf(p)` = `Q ∖ inf(p)`: states not occurring infinitely often.
//!
//! An acceptance condition pairs one of these statistics with a relation
//! against the acceptance table 𝓕: the word is accepted iff some run `p`
//! and some member `F ∈ 𝓕` satisfy `stat(p) R F`, where `R` is nonempty
//! intersection (`⊓`), inclusion (`⊆`), or equality (`=`). Four named
//! conditions quantify the member differently: `A` (∃F ⊆ run),
//! `Aprime` (∃F ⊄ run), `L` (∃F ⊆ inf), `Lprime` (∃F ⊄ inf).
//!
//! For ultimately periodic words the full set of achievable
//! `(run, inf)` statistics is computed exactly ([`run_summaries`]): over
//! the product of the automaton with the word's positions, the achievable
//! `inf` sets are projections of strongly connected edge-containing vertex
//! sets, and the achievable prefix-visit sets are enumerated by a
//! breadth-first search over (vertex, visited-set) pairs. This oracle is
//! exponential but exact; [`accepts`] is the reference decision procedure.
//! [`accepts_routed`] gives the same answers (property-tested against the
//! oracle) while dispatching a few conditions to polynomial product-graph
//! routes so that membership stays feasible on large constructed automata.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::automaton::Automaton;
use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::words::LassoWord;

/// Which run statistic a pair condition constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StatKind {
    /// States visited at least once (after position 0).
    Run,
    /// States visited infinitely often.
    Inf,
    /// States visited finitely often but at least once.
    Fin,
    /// States not visited infinitely often.
    Ninf,
}

impl StatKind {
    /// All statistic kinds, in canonical order.
    pub const ALL: [StatKind; 4] = [StatKind::Run, StatKind::Inf, StatKind::Fin, StatKind::Ninf];

    /// The token used in text inputs.
    pub fn token(self) -> &'static str {
        match self {
            StatKind::Run => "run",
            StatKind::Inf => "inf",
            StatKind::Fin => "fin",
            StatKind::Ninf => "ninf",
        }
    }
}

impl fmt::Display for StatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// The relation a pair condition applies between a statistic and a table
/// member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rel {
    /// Nonempty intersection (`⊓`).
    Meets,
    /// Inclusion of the statistic in the member (`⊆`).
    Subseteq,
    /// Equality (`=`).
    Eq,
}

impl Rel {
    /// All relations, in canonical order.
    pub const ALL: [Rel; 3] = [Rel::Meets, Rel::Subseteq, Rel::Eq];

    /// The token used in text inputs.
    pub fn token(self) -> &'static str {
        match self {
            Rel::Meets => "meets",
            Rel::Subseteq => "subseteq",
            Rel::Eq => "eq",
        }
    }
}

impl fmt::Display for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// The four named acceptance conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedCondition {
    /// ∃F ∈ 𝓕: F ⊆ run(p).
    A,
    /// ∃F ∈ 𝓕: F ⊄ run(p).
    APrime,
    /// ∃F ∈ 𝓕: F ⊆ inf(p).
    L,
    /// ∃F ∈ 𝓕: F ⊄ inf(p).
    LPrime,
}

impl NamedCondition {
    /// All named conditions, in canonical order.
    pub const ALL: [NamedCondition; 4] = [
        NamedCondition::A,
        NamedCondition::APrime,
        NamedCondition::L,
        NamedCondition::LPrime,
    ];

    /// The token used in text inputs.
    pub fn token(self) -> &'static str {
        match self {
            NamedCondition::A => "A",
            NamedCondition::APrime => "Aprime",
            NamedCondition::L => "L",
            NamedCondition::LPrime => "Lprime",
        }
    }
}

impl fmt::Display for NamedCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// An acceptance condition: a (statistic, relation) pair or a named
/// condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    /// `stat(p) R F` for some member F.
    Pair(StatKind, Rel),
    /// One of the four named conditions.
    Named(NamedCondition),
}

impl Condition {
    /// The twelve pair conditions in canonical order.
    pub fn all_pairs() -> impl Iterator<Item = Condition> {
        StatKind::ALL
            .into_iter()
            .flat_map(|s| Rel::ALL.into_iter().map(move |r| Condition::Pair(s, r)))
    }

    /// Parses the one- or two-token condition syntax: a named condition
    /// (`A`, `Aprime`, `L`, `Lprime`) or a statistic/relation pair
    /// (`run meets`, `fin eq`, …).
    pub fn parse_tokens(tokens: &[&str]) -> Result<Self> {
        let bad = |msg: String| Error::Word(msg);
        match tokens {
            [name] => {
                for n in NamedCondition::ALL {
                    if n.token() == *name {
                        return Ok(Condition::Named(n));
                    }
                }
                Err(bad(format!(
                    "unknown condition {name:?}: expected A, Aprime, L, Lprime, or a \
                     statistic/relation pair"
                )))
            }
            [stat, rel] => {
                let s = StatKind::ALL
                    .into_iter()
                    .find(|s| s.token() == *stat)
                    .ok_or_else(|| {
                        bad(format!(
                            "unknown statistic {stat:?}: expected run, inf, fin, or ninf"
                        ))
                    })?;
                let r = Rel::ALL
                    .into_iter()
                    .find(|r| r.token() == *rel)
                    .ok_or_else(|| {
                        bad(format!(
                            "unknown relation {rel:?}: expected meets, subseteq, or eq"
                        ))
                    })?;
                Ok(Condition::Pair(s, r))
            }
            _ => Err(bad(format!(
                "expected one or two condition tokens, found {}",
                tokens.len()
            ))),
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::Pair(s, r) => write!(f, "{s} {r}"),
            Condition::Named(n) => write!(f, "{n}"),
        }
    }
}

/// The achievable statistics of one run: its `run` and `inf` sets, as
/// canonical state-index sets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RunSummary {
    run_set: BTreeSet<usize>,
    inf_set: BTreeSet<usize>,
}

impl RunSummary {
    /// Builds a summary, checking the structural invariants: `inf` is
    /// nonempty (an infinite run over finitely many states revisits
    /// something) and `inf ⊆ run`.
    pub fn new(run_set: BTreeSet<usize>, inf_set: BTreeSet<usize>) -> Result<Self> {
        if inf_set.is_empty() {
            return Err(Error::unsupported("run summary", "inf set must be nonempty"));
        }
        if !inf_set.is_subset(&run_set) {
            return Err(Error::unsupported(
                "run summary",
                "inf set must be a subset of the run set",
            ));
        }
        Ok(RunSummary { run_set, inf_set })
    }

    /// States visited at least once (after position 0).
    pub fn run_set(&self) -> &BTreeSet<usize> {
        &self.run_set
    }

    /// States visited infinitely often.
    pub fn inf_set(&self) -> &BTreeSet<usize> {
        &self.inf_set
    }
}

/// Evaluates a statistic from a summary. `n_states` supplies the state
/// universe for `ninf`.
pub fn stat_of(kind: StatKind, summary: &RunSummary, n_states: usize) -> BTreeSet<usize> {
    match kind {
        StatKind::Run => summary.run_set.clone(),
        StatKind::Inf => summary.inf_set.clone(),
        StatKind::Fin => summary.run_set.difference(&summary.inf_set).copied().collect(),
        StatKind::Ninf => (0..n_states)
            .filter(|q| !summary.inf_set.contains(q))
            .collect(),
    }
}

/// Whether a run with the given summary is accepting for `cond` against
/// the automaton's table.
pub fn condition_holds(cond: &Condition, a: &Automaton, summary: &RunSummary) -> bool {
    let table = a.table();
    match cond {
        Condition::Pair(kind, rel) => {
            let stat = stat_of(*kind, summary, a.state_count());
            table.iter().any(|f| match rel {
                Rel::Meets => !stat.is_disjoint(f),
                Rel::Subseteq => stat.is_subset(f),
                Rel::Eq => &stat == f,
            })
        }
        Condition::Named(NamedCondition::A) => {
            table.iter().any(|f| f.is_subset(&summary.run_set))
        }
        Condition::Named(NamedCondition::APrime) => {
            table.iter().any(|f| !f.is_subset(&summary.run_set))
        }
        Condition::Named(NamedCondition::L) => {
            table.iter().any(|f| f.is_subset(&summary.inf_set))
        }
        Condition::Named(NamedCondition::LPrime) => {
            table.iter().any(|f| !f.is_subset(&summary.inf_set))
        }
    }
}

/// Size limits for the membership analyses.
#[derive(Debug, Clone)]
pub struct OracleGuard {
    /// Maximum product vertices `|Q| · (|stem| + |cycle|)`.
    pub max_product_vertices: usize,
    /// Maximum explored (vertex, visited-set) pairs in the prefix search;
    /// caps the worst-case exponential blowup on nondeterministic inputs.
    pub max_visited_pairs: usize,
    /// Largest strongly connected block whose subsets are enumerated for
    /// recurrence analysis (2^size candidates).
    pub max_cycle_block: usize,
}

impl Default for OracleGuard {
    fn default() -> Self {
        OracleGuard {
            max_product_vertices: 1 << 20,
            max_visited_pairs: 1 << 20,
            max_cycle_block: 20,
        }
    }
}

/// The product of an automaton with the positions of a lasso word.
///
/// Vertices are (state, position) pairs with `position < |stem|+|cycle|`;
/// the successor position after the last one wraps to `|stem|`. Runs of
/// the automaton on the word correspond exactly to infinite paths from
/// `(initial, 0)`.
pub(crate) struct WordProduct {
    pub n_states: usize,
    pub positions: usize,
    pub adj: Vec<Vec<u32>>,
    pub start: u32,
}

impl WordProduct {
    pub fn build(a: &Automaton, w: &LassoWord, guard: &OracleGuard) -> Result<Self> {
        let n = a.state_count();
        let m = w.total_len();
        let verts = n * m;
        if verts > guard.max_product_vertices {
            return Err(Error::guard(
                "product vertices",
                verts,
                guard.max_product_vertices,
            ));
        }
        let stem_len = w.stem().len();
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); verts];
        for pos in 0..m {
            let next = if pos + 1 < m { pos + 1 } else { stem_len };
            let sym = a.alphabet().index_of(w.letter_at(pos).as_str());
            if let Some(x) = sym {
                for q in 0..n {
                    let v = (q * m + pos) as u32;
                    for &q2 in a.successors(q, x) {
                        adj[v as usize].push((q2 * m + next) as u32);
                    }
                }
            }
        }
        Ok(WordProduct {
            n_states: n,
            positions: m,
            adj,
            start: (a.initial() * m) as u32,
        })
    }

    pub fn state_of(&self, v: u32) -> usize {
        v as usize / self.positions
    }

    /// Which vertices are reachable from `start` (itself included).
    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        let mut stack = vec![self.start];
        seen[self.start as usize] = true;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Strongly connected components, via Tarjan's algorithm.
    ///
    /// Restricted to `allowed` vertices when given (edges between allowed
    /// vertices only).
    pub fn sccs(&self, allowed: Option<&[bool]>) -> Vec<Vec<u32>> {
        let mut graph = petgraph::graph::DiGraph::<u32, ()>::new();
        let mut node_of = vec![None; self.adj.len()];
        for v in 0..self.adj.len() as u32 {
            if allowed.is_none_or(|al| al[v as usize]) {
                node_of[v as usize] = Some(graph.add_node(v));
            }
        }
        for v in 0..self.adj.len() {
            if let Some(nv) = node_of[v] {
                for &w in &self.adj[v] {
                    if let Some(nw) = node_of[w as usize] {
                        graph.add_edge(nv, nw, ());
                    }
                }
            }
        }
        petgraph::algo::tarjan_scc(&graph)
            .into_iter()
            .map(|comp| comp.into_iter().map(|ix| graph[ix]).collect())
            .collect()
    }

    /// Whether a component (as returned by [`Self::sccs`]) admits an
    /// infinite path: more than one vertex, or a single vertex with a
    /// self-loop.
    pub fn component_is_recurrent(&self, comp: &[u32]) -> bool {
        comp.len() > 1
            || self.adj[comp[0] as usize].contains(&comp[0])
    }
}

/// All achievable (run, inf) statistics of runs of `a` on `w`, sorted.
///
/// Returns an error only when a size guard trips; an empty result means
/// the automaton has no run on the word at all.
pub fn run_summaries(a: &Automaton, w: &LassoWord, guard: &OracleGuard) -> Result<Vec<RunSummary>> {
    let wp = WordProduct::build(a, w, guard)?;
    let n = wp.n_states;
    let verts = wp.adj.len();

    // Prefix search: which (vertex, set of states visited after position 0)
    // pairs are realizable by a finite initial path ending at that vertex.
    let mut pair_sets: Vec<HashSet<Bits>> = vec![HashSet::new(); verts];
    let mut queue: VecDeque<(u32, Bits)> = VecDeque::new();
    let mut explored = 1usize;
    pair_sets[wp.start as usize].insert(Bits::empty(n));
    queue.push_back((wp.start, Bits::empty(n)));
    while let Some((v, s)) = queue.pop_front() {
        for &t in &wp.adj[v as usize] {
            let mut s2 = s.clone();
            s2.insert(wp.state_of(t));
            if pair_sets[t as usize].insert(s2.clone()) {
                explored += 1;
                if explored > guard.max_visited_pairs {
                    return Err(Error::guard(
                        "visited-set pairs",
                        explored,
                        guard.max_visited_pairs,
                    ));
                }
                queue.push_back((t, s2));
            }
        }
    }

    // Recurrence analysis: a set of states is an achievable `inf` with
    // prefix-visits S iff it is the state projection of a strongly
    // connected, edge-containing vertex set C reachable at a pair (x, S)
    // with x ∈ C; C always lies within one strongly connected component.
    let mut summaries: BTreeSet<(Bits, Bits)> = BTreeSet::new();
    for comp in wp.sccs(None) {
        let k = comp.len();
        if !wp.component_is_recurrent(&comp) {
            continue;
        }
        if k > guard.max_cycle_block {
            return Err(Error::guard("recurrence block", k, guard.max_cycle_block));
        }
        // Local adjacency bitmask, forward and backward, within the block.
        let local: std::collections::HashMap<u32, usize> =
            comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut fwd = vec![0u64; k];
        let mut bwd = vec![0u64; k];
        for (i, &v) in comp.iter().enumerate() {
            for &t in &wp.adj[v as usize] {
                if let Some(&j) = local.get(&t) {
                    fwd[i] |= 1 << j;
                    bwd[j] |= 1 << i;
                }
            }
        }
        for mask in 1u64..(1u64 << k) {
            if !mask_is_recurrent(mask, &fwd, &bwd) {
                continue;
            }
            let proj = Bits::from_indices(
                n,
                (0..k).filter(|i| mask >> i & 1 == 1).map(|i| wp.state_of(comp[i])),
            );
            for i in (0..k).filter(|i| mask >> i & 1 == 1) {
                for s in &pair_sets[comp[i] as usize] {
                    summaries.insert((s.union(&proj), proj.clone()));
                }
            }
        }
    }

    Ok(summaries
        .into_iter()
        .map(|(run, inf)| RunSummary {
            run_set: run.to_btree(),
            inf_set: inf.to_btree(),
        })
        .collect())
}

/// Whether `mask` (over a strongly connected block with local adjacency
/// `fwd`/`bwd`) is strongly connected and contains an edge.
fn mask_is_recurrent(mask: u64, fwd: &[u64], bwd: &[u64]) -> bool {
    let first = mask.trailing_zeros() as usize;
    if mask.count_ones() == 1 {
        // Single vertex: needs a self-loop.
        return fwd[first] & mask != 0;
    }
    closure(first, mask, fwd) == mask && closure(first, mask, bwd) == mask
}

/// Fixpoint closure of `{seed}` under `adj`, restricted to `mask`.
fn closure(seed: usize, mask: u64, adj: &[u64]) -> u64 {
    let mut reach = 1u64 << seed;
    loop {
        let mut next = reach;
        let mut rem = reach;
        while rem != 0 {
            let i = rem.trailing_zeros() as usize;
            rem &= rem - 1;
            next |= adj[i] & mask;
        }
        if next == reach {
            return reach;
        }
        reach = next;
    }
}

/// Reference membership: does `a` accept `w` under `cond`?
///
/// Decided via the exact statistics oracle [`run_summaries`]; exponential
/// in the worst case but exact on any input the guards admit.
pub fn accepts(a: &Automaton, cond: &Condition, w: &LassoWord, guard: &OracleGuard) -> Result<bool> {
    let summaries = run_summaries(a, w, guard)?;
    Ok(summaries.iter().any(|s| condition_holds(cond, a, s)))
}

/// Membership with condition-specialized routing.
///
/// Same answers as [`accepts`] — the routes below are property-tested
/// against the oracle — but dispatches three condition families to
/// polynomial product-graph analyses, keeping membership feasible on the
/// large automata produced by constructions:
///
/// * `(inf, ⊓)`: some reachable recurrent component meets ∪𝓕,
/// * `Lprime` and `(ninf, ⊓)` (the same reading: F ⊄ inf ⟺ F meets ninf):
///   some s ∈ ∪𝓕 avoidable forever,
/// * `(fin, =)`: per member, a recurrent component disjoint from it whose
///   projection bounds the prefix.
pub fn accepts_routed(
    a: &Automaton,
    cond: &Condition,
    w: &LassoWord,
    guard: &OracleGuard,
) -> Result<bool> {
    match cond {
        Condition::Pair(StatKind::Inf, Rel::Meets) => route_inf_meets(a, w, guard),
        Condition::Pair(StatKind::Inf, Rel::Subseteq) => route_inf_subseteq(a, w, guard),
        Condition::Pair(StatKind::Run, Rel::Meets) => route_run_meets(a, w, guard),
        Condition::Pair(StatKind::Ninf, Rel::Meets) | Condition::Named(NamedCondition::LPrime) => {
            route_avoid_some(a, w, guard)
        }
        Condition::Pair(StatKind::Fin, Rel::Eq) => route_fin_eq(a, w, guard),
        _ => accepts(a, cond, w, guard),
    }
}

/// `(inf, ⊓)`: ∃F ∈ 𝓕: inf(p) ∩ F ≠ ∅ ⟺ inf(p) ∩ ∪𝓕 ≠ ∅ for some run ⟺
/// some reachable recurrent component contains a vertex over ∪𝓕.
fn route_inf_meets(a: &Automaton, w: &LassoWord, guard: &OracleGuard) -> Result<bool> {
    let targets = a.table_union();
    if targets.is_empty() {
        return Ok(false);
    }
    let wp = WordProduct::build(a, w, guard)?;
    let reach = wp.reachable();
    for comp in wp.sccs(None) {
        if !wp.component_is_recurrent(&comp) {
            continue;
        }
        if !reach[comp[0] as usize] {
            continue;
        }
        if comp.iter().any(|&v| targets.contains(&wp.state_of(v))) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `(inf, ⊆)`: ∃F ∈ 𝓕 with inf(p) ⊆ F for some run ⟺ some run
/// eventually stays on states of a member ⟺ the product restricted to the
/// vertices over some member has a reachable recurrent component.
fn route_inf_subseteq(a: &Automaton, w: &LassoWord, guard: &OracleGuard) -> Result<bool> {
    if a.table().is_empty() {
        return Ok(false);
    }
    let wp = WordProduct::build(a, w, guard)?;
    let reach = wp.reachable();
    for member in a.table() {
        let allowed: Vec<bool> = (0..wp.adj.len())
            .map(|v| member.contains(&wp.state_of(v as u32)))
            .collect();
        for comp in wp.sccs(Some(&allowed)) {
            if wp.component_is_recurrent(&comp) && reach[comp[0] as usize] {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// `(run, ⊓)`: some run visits a state of ∪𝓕 at a positive index and
/// still runs forever ⟺ some vertex over ∪𝓕 is reachable in at least one
/// step and reaches a recurrent component.
fn route_run_meets(a: &Automaton, w: &LassoWord, guard: &OracleGuard) -> Result<bool> {
    let targets = a.table_union();
    if targets.is_empty() {
        return Ok(false);
    }
    let wp = WordProduct::build(a, w, guard)?;
    let verts = wp.adj.len();

    // Forward: vertices reachable from the start by at least one step.
    let mut after_start = vec![false; verts];
    let mut queue: VecDeque<u32> = VecDeque::new();
    for &t in &wp.adj[wp.start as usize] {
        if !after_start[t as usize] {
            after_start[t as usize] = true;
            queue.push_back(t);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &t in &wp.adj[v as usize] {
            if !after_start[t as usize] {
                after_start[t as usize] = true;
                queue.push_back(t);
            }
        }
    }

    // Backward: vertices from which the run can continue forever, i.e.
    // the reverse closure of the recurrent components.
    let mut rev: Vec<Vec<u32>> = vec![Vec::new(); verts];
    for (v, succs) in wp.adj.iter().enumerate() {
        for &t in succs {
            rev[t as usize].push(v as u32);
        }
    }
    let mut alive = vec![false; verts];
    let mut queue: VecDeque<u32> = VecDeque::new();
    for comp in wp.sccs(None) {
        if wp.component_is_recurrent(&comp) {
            for &v in &comp {
                if !alive[v as usize] {
                    alive[v as usize] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    while let Some(v) = queue.pop_front() {
        for &t in &rev[v as usize] {
            if !alive[t as usize] {
                alive[t as usize] = true;
                queue.push_back(t);
            }
        }
    }

    Ok((0..verts)
        .any(|v| after_start[v] && alive[v] && targets.contains(&wp.state_of(v as u32))))
}

/// `Lprime` / `(ninf, ⊓)`: ∃F ∈ 𝓕 ∃s ∈ F with s ∉ inf(p) for some run ⟺
/// for some s ∈ ∪𝓕, a recurrent component avoiding s is reachable.
fn route_avoid_some(a: &Automaton, w: &LassoWord, guard: &OracleGuard) -> Result<bool> {
    let candidates = a.table_union();
    if candidates.is_empty() {
        return Ok(false);
    }
    let wp = WordProduct::build(a, w, guard)?;
    let reach = wp.reachable();
    for s in candidates {
        let allowed: Vec<bool> = (0..wp.adj.len())
            .map(|v| wp.state_of(v as u32) != s)
            .collect();
        for comp in wp.sccs(Some(&allowed)) {
            if wp.component_is_recurrent(&comp) && reach[comp[0] as usize] {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// `(fin, =)`: some run has fin(p) exactly equal to a member F.
///
/// For a fixed F, a witnessing run settles into a recurrent component M of
/// the product restricted away from F (so inf ∩ F = ∅); taking M maximal
/// is lossless, because enlarging the settled component only moves states
/// out of fin that the prefix was allowed to visit anyway. The prefix must
/// reach M visiting only F ∪ proj(M) (after position 0) and covering all
/// of F; that is a search over (vertex, covered ⊆ F) pairs.
fn route_fin_eq(a: &Automaton, w: &LassoWord, guard: &OracleGuard) -> Result<bool> {
    let wp = WordProduct::build(a, w, guard)?;
    for member in a.table() {
        if member.len() > 60 {
            return Err(Error::guard("fin-eq member size", member.len(), 60));
        }
        let f_index: Vec<usize> = member.iter().copied().collect();
        let allowed: Vec<bool> = (0..wp.adj.len())
            .map(|v| !member.contains(&wp.state_of(v as u32)))
            .collect();
        for comp in wp.sccs(Some(&allowed)) {
            if !wp.component_is_recurrent(&comp) {
                continue;
            }
            let proj: BTreeSet<usize> = comp.iter().map(|&v| wp.state_of(v)).collect();
            let in_m: HashSet<u32> = comp.iter().copied().collect();
            // Prefix search over (vertex, covered ⊆ F); only states in
            // F ∪ proj(M) may be visited after position 0.
            let full: u64 = (1u64 << f_index.len()) - 1;
            let mut seen = HashSet::new();
            let mut queue = VecDeque::new();
            let start_key = (wp.start, 0u64);
            seen.insert(start_key);
            queue.push_back(start_key);
            let mut found = in_m.contains(&wp.start) && full == 0;
            'search: while let Some((v, covered)) = queue.pop_front() {
                for &t in &wp.adj[v as usize] {
                    let q = wp.state_of(t);
                    let bit = f_index.iter().position(|&f| f == q);
                    if bit.is_none() && !proj.contains(&q) {
                        continue;
                    }
                    let covered2 = covered | bit.map_or(0, |b| 1u64 << b);
                    if seen.insert((t, covered2)) {
                        if covered2 == full && in_m.contains(&t) {
                            found = true;
                            break 'search;
                        }
                        queue.push_back((t, covered2));
                    }
                }
            }
            if found {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::Automaton;
    use crate::words::LassoWord;

    fn guard() -> OracleGuard {
        OracleGuard::default()
    }

    /// Deterministic single-run automaton: q0 --a--> q1 --a--> q1,
    /// q1 --b--> q0.
    fn two_state() -> Automaton {
        Automaton::build(
            &["a", "b"],
            &["q0", "q1"],
            "q0",
            &[("q0", "a", "q1"), ("q1", "a", "q1"), ("q1", "b", "q0")],
            &[&["q1"]],
        )
        .unwrap()
    }

    #[test]
    fn summaries_of_deterministic_runs() {
        let a = two_state();
        // On a^ω the unique run is q0 q1 q1 q1 … : run = inf = {q1}.
        let w = LassoWord::build(&[], &["a"]).unwrap();
        let s = run_summaries(&a, &w, &guard()).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].run_set(), &BTreeSet::from([1]));
        assert_eq!(s[0].inf_set(), &BTreeSet::from([1]));

        // On (ab)^ω the unique run alternates q1 q0 q1 q0 …, so position 0
        // is excluded but both states recur: run = inf = {q0, q1}.
        let w = LassoWord::build(&[], &["a", "b"]).unwrap();
        let s = run_summaries(&a, &w, &guard()).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].run_set(), &BTreeSet::from([0, 1]));
        assert_eq!(s[0].inf_set(), &BTreeSet::from([0, 1]));

        // On ab·a^ω the run is q0 (q1 q0) q1 q1 …: run = {q0, q1},
        // inf = {q1}, so fin = {q0}.
        let w = LassoWord::build(&["a", "b"], &["a"]).unwrap();
        let s = run_summaries(&a, &w, &guard()).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].run_set(), &BTreeSet::from([0, 1]));
        assert_eq!(s[0].inf_set(), &BTreeSet::from([1]));
    }

    #[test]
    fn no_run_means_no_summaries() {
        // q0 has no b-transition: b^ω admits no run.
        let a = two_state();
        let w = LassoWord::build(&[], &["b"]).unwrap();
        assert!(run_summaries(&a, &w, &guard()).unwrap().is_empty());
        assert!(!accepts(&a, &Condition::Named(NamedCondition::LPrime), &w, &guard()).unwrap());
    }

    #[test]
    fn nondeterministic_choice_yields_multiple_summaries() {
        // q0 --a--> q0 and q0 --a--> q1 --a--> q1: on a^ω a run may stay,
        // may defect to q1 at any time, giving inf = {q0} or inf = {q1}
        // with varying prefix visits.
        let a = Automaton::build(
            &["a"],
            &["q0", "q1"],
            "q0",
            &[("q0", "a", "q0"), ("q0", "a", "q1"), ("q1", "a", "q1")],
            &[&["q0"]],
        )
        .unwrap();
        let w = LassoWord::build(&[], &["a"]).unwrap();
        let s = run_summaries(&a, &w, &guard()).unwrap();
        let pairs: Vec<(Vec<usize>, Vec<usize>)> = s
            .iter()
            .map(|x| {
                (
                    x.run_set().iter().copied().collect(),
                    x.inf_set().iter().copied().collect(),
                )
            })
            .collect();
        assert!(pairs.contains(&(vec![0], vec![0])));
        assert!(pairs.contains(&(vec![1], vec![1])));
        assert!(pairs.contains(&(vec![0, 1], vec![1])));
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn condition_evaluation() {
        let a = two_state();
        let summary = RunSummary::new(BTreeSet::from([0, 1]), BTreeSet::from([1])).unwrap();
        // Table is {{q1}}.
        assert!(condition_holds(
            &Condition::Pair(StatKind::Inf, Rel::Meets),
            &a,
            &summary
        ));
        assert!(condition_holds(
            &Condition::Pair(StatKind::Run, Rel::Meets),
            &a,
            &summary
        ));
        // fin = {q0}: misses {q1}.
        assert!(!condition_holds(
            &Condition::Pair(StatKind::Fin, Rel::Meets),
            &a,
            &summary
        ));
        // ninf = {q0}: not ⊆ {q1}.
        assert!(!condition_holds(
            &Condition::Pair(StatKind::Ninf, Rel::Subseteq),
            &a,
            &summary
        ));
        assert!(condition_holds(&Condition::Named(NamedCondition::L), &a, &summary));
        assert!(!condition_holds(
            &Condition::Named(NamedCondition::LPrime),
            &a,
            &summary
        ));
    }

    #[test]
    fn summary_invariants_enforced() {
        assert!(RunSummary::new(BTreeSet::from([0]), BTreeSet::new()).is_err());
        assert!(RunSummary::new(BTreeSet::from([0]), BTreeSet::from([1])).is_err());
        assert!(RunSummary::new(BTreeSet::from([0, 1]), BTreeSet::from([1])).is_ok());
    }

    #[test]
    fn condition_parsing() {
        assert_eq!(
            Condition::parse_tokens(&["inf", "meets"]).unwrap(),
            Condition::Pair(StatKind::Inf, Rel::Meets)
        );
        assert_eq!(
            Condition::parse_tokens(&["Aprime"]).unwrap(),
            Condition::Named(NamedCondition::APrime)
        );
        assert!(Condition::parse_tokens(&["inf"]).is_err());
        assert!(Condition::parse_tokens(&["meets", "inf"]).is_err());
        assert!(Condition::parse_tokens(&[]).is_err());
        assert_eq!(Condition::Pair(StatKind::Fin, Rel::Eq).to_string(), "fin eq");
        assert_eq!(Condition::Named(NamedCondition::LPrime).to_string(), "Lprime");
    }

    #[test]
    fn guard_trips_are_errors() {
        let a = two_state();
        let w = LassoWord::build(&[], &["a"]).unwrap();
        let tight = OracleGuard {
            max_product_vertices: 1,
            ..OracleGuard::default()
        };
        assert!(matches!(
            run_summaries(&a, &w, &tight),
            Err(Error::GuardExceeded { .. })
        ));
    }
}
