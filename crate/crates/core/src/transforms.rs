//! Condition-changing rewrites: constructions that replace an automaton's
//! acceptance condition by another while preserving the recognized
//! ω-language, plus a union-of-intersections decomposition for deterministic
//! `(fin, ⊆)` automata and its evaluator.
//!
//! Every rewrite states its source and target condition; [`TransformKind`]
//! carries the stable textual identifiers used by the command-line tool and
//! dispatches to the individual functions.  Constructions that build powerset
//! or pair products enforce the limits in [`SizeGuard`] and fail fast with
//! [`Error::GuardExceeded`] instead of exhausting memory.
//!
//! Constructed product states are named deterministically: pair components
//! joined with `·` and state sets rendered as `[a;b]` (see the naming rules
//! in the `automaton` module).  Products are restricted to their reachable
//! part unless a construction's stated state set requires otherwise
//! (`inf_meets_to_fin_eq` declares its full pair set; sink states needed by
//! an acceptance table are kept even when unreachable).

use crate::automaton::{naming, Alphabet, Automaton, StateId, Violation};
use crate::error::{Error, Result};
use crate::semantics::{
    accepts_routed, Condition, NamedCondition, OracleGuard, Rel, StatKind,
};
use crate::words::LassoWord;
use std::collections::{BTreeSet, HashMap, HashSet};

/// Size limits for product- and powerset-building constructions.
///
/// The environment variable `OMEGA_SIZE_GUARD`, when set to an integer,
/// overrides all three limits at once (see [`SizeGuard::from_env`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeGuard {
    /// Maximum `|Q|` for constructions over `Q × 𝒫(Q)` and for table
    /// enumerations over `𝒫(Q)` (default 12).
    pub max_subset_states: usize,
    /// Maximum size of a single acceptance-table member that may be expanded
    /// into its full powerset (default 12).
    pub max_member_size: usize,
    /// Maximum `|Q|` for the state-pair construction of
    /// [`inf_meets_to_fin_eq`], whose table is exponential (default 8).
    pub max_pair_states: usize,
}

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard {
            max_subset_states: 12,
            max_member_size: 12,
            max_pair_states: 8,
        }
    }
}

impl SizeGuard {
    /// The default limits, each overridden by the `OMEGA_SIZE_GUARD`
    /// environment variable when it holds an integer.
    pub fn from_env() -> Self {
        match std::env::var("OMEGA_SIZE_GUARD")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
        {
            Some(limit) => SizeGuard {
                max_subset_states: limit,
                max_member_size: limit,
                max_pair_states: limit,
            },
            None => SizeGuard::default(),
        }
    }
}

/// The fifteen named rewrites, with their stable textual identifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[allow(missing_docs)] // The variants mirror the function names below.
pub enum TransformKind {
    AToRunMeets,
    RunMeetsToA,
    AprimeToRunSubseteq,
    RunSubseteqToAprime,
    ComplementTable,
    AddSink,
    InfMeetsToL,
    LToInfMeets,
    SingleAcceptingLprime,
    LprimeToInfSubseteq,
    CompleteForFin,
    FinSubseteqToFinEq,
    FinMeetsToFinEq,
    InfMeetsToFinEq,
    DfaFinSubseteqDecompose,
}

/// Result of applying a [`TransformKind`]: most rewrites produce an
/// automaton, the decomposition produces a language expression.
#[derive(Debug, Clone)]
pub enum TransformOutput {
    /// A rewritten automaton, to be read under the target condition.
    Automaton(Automaton),
    /// A union-of-intersections language expression.
    Expr(LanguageExpr),
}

impl TransformKind {
    /// All transforms, in catalogue order.
    pub const ALL: [TransformKind; 15] = [
        TransformKind::AToRunMeets,
        TransformKind::RunMeetsToA,
        TransformKind::AprimeToRunSubseteq,
        TransformKind::RunSubseteqToAprime,
        TransformKind::ComplementTable,
        TransformKind::AddSink,
        TransformKind::InfMeetsToL,
        TransformKind::LToInfMeets,
        TransformKind::SingleAcceptingLprime,
        TransformKind::LprimeToInfSubseteq,
        TransformKind::CompleteForFin,
        TransformKind::FinSubseteqToFinEq,
        TransformKind::FinMeetsToFinEq,
        TransformKind::InfMeetsToFinEq,
        TransformKind::DfaFinSubseteqDecompose,
    ];

    /// The stable identifier used on the command line.
    pub fn token(self) -> &'static str {
        match self {
            TransformKind::AToRunMeets => "a-to-run-meets",
            TransformKind::RunMeetsToA => "run-meets-to-a",
            TransformKind::AprimeToRunSubseteq => "aprime-to-run-subseteq",
            TransformKind::RunSubseteqToAprime => "run-subseteq-to-aprime",
            TransformKind::ComplementTable => "complement-table",
            TransformKind::AddSink => "add-sink",
            TransformKind::InfMeetsToL => "inf-meets-to-L",
            TransformKind::LToInfMeets => "L-to-inf-meets",
            TransformKind::SingleAcceptingLprime => "single-accepting-Lprime",
            TransformKind::LprimeToInfSubseteq => "lprime-to-inf-subseteq",
            TransformKind::CompleteForFin => "complete-for-fin",
            TransformKind::FinSubseteqToFinEq => "fin-subseteq-to-fin-eq",
            TransformKind::FinMeetsToFinEq => "fin-meets-to-fin-eq",
            TransformKind::InfMeetsToFinEq => "inf-meets-to-fin-eq",
            TransformKind::DfaFinSubseteqDecompose => "dfa-fin-subseteq-decompose",
        }
    }

    /// Parses a stable transform identifier.
    pub fn parse(token: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.token() == token)
            .ok_or_else(|| Error::BadToken {
                token: token.to_string(),
                reason: "not a known transform name".to_string(),
            })
    }

    /// Given the condition the input automaton is read under, returns the
    /// condition the output must be read under, or an error when this
    /// transform does not apply to `source`.
    ///
    /// `add-sink` keeps the source condition but additionally refuses
    /// unsound conditions once it sees the automaton (see [`add_sink`]);
    /// `dfa-fin-subseteq-decompose` produces an expression whose leaves
    /// carry their own conditions, so its "target" is the unchanged source.
    pub fn conditions(self, source: &Condition) -> Result<Condition> {
        use Condition::{Named, Pair};
        use NamedCondition::{APrime, LPrime, A, L};
        let expected: &[(Condition, Condition)] = match self {
            TransformKind::AToRunMeets => &[(Named(A), Pair(StatKind::Run, Rel::Meets))],
            TransformKind::RunMeetsToA => &[(Pair(StatKind::Run, Rel::Meets), Named(A))],
            TransformKind::AprimeToRunSubseteq => {
                &[(Named(APrime), Pair(StatKind::Run, Rel::Subseteq))]
            }
            TransformKind::RunSubseteqToAprime => {
                &[(Pair(StatKind::Run, Rel::Subseteq), Named(APrime))]
            }
            TransformKind::ComplementTable => &[
                (Named(L), Pair(StatKind::Ninf, Rel::Subseteq)),
                (Pair(StatKind::Ninf, Rel::Subseteq), Named(L)),
                (Pair(StatKind::Inf, Rel::Eq), Pair(StatKind::Ninf, Rel::Eq)),
                (Pair(StatKind::Ninf, Rel::Eq), Pair(StatKind::Inf, Rel::Eq)),
            ],
            TransformKind::AddSink => return Ok(*source),
            TransformKind::InfMeetsToL => &[(Pair(StatKind::Inf, Rel::Meets), Named(L))],
            TransformKind::LToInfMeets => &[(Named(L), Pair(StatKind::Inf, Rel::Meets))],
            TransformKind::SingleAcceptingLprime => &[(Named(LPrime), Named(LPrime))],
            TransformKind::LprimeToInfSubseteq => {
                &[(Named(LPrime), Pair(StatKind::Inf, Rel::Subseteq))]
            }
            TransformKind::CompleteForFin => &[
                (
                    Pair(StatKind::Fin, Rel::Subseteq),
                    Pair(StatKind::Fin, Rel::Subseteq),
                ),
                (Pair(StatKind::Fin, Rel::Eq), Pair(StatKind::Fin, Rel::Eq)),
            ],
            TransformKind::FinSubseteqToFinEq => &[(
                Pair(StatKind::Fin, Rel::Subseteq),
                Pair(StatKind::Fin, Rel::Eq),
            )],
            TransformKind::FinMeetsToFinEq => &[(
                Pair(StatKind::Fin, Rel::Meets),
                Pair(StatKind::Fin, Rel::Eq),
            )],
            TransformKind::InfMeetsToFinEq => &[(
                Pair(StatKind::Inf, Rel::Meets),
                Pair(StatKind::Fin, Rel::Eq),
            )],
            TransformKind::DfaFinSubseteqDecompose => &[(
                Pair(StatKind::Fin, Rel::Subseteq),
                Pair(StatKind::Fin, Rel::Subseteq),
            )],
        };
        expected
            .iter()
            .find(|(from, _)| from == source)
            .map(|(_, to)| *to)
            .ok_or_else(|| {
                let supported: Vec<String> =
                    expected.iter().map(|(from, _)| from.to_string()).collect();
                Error::unsupported(
                    self.token(),
                    format!(
                        "applies to condition {} only, got {source}",
                        supported.join(" / ")
                    ),
                )
            })
    }

    /// Applies this transform to `a`, which is read under `source`.
    pub fn apply(
        self,
        a: &Automaton,
        source: &Condition,
        guard: &SizeGuard,
    ) -> Result<TransformOutput> {
        self.conditions(source)?;
        let out = match self {
            TransformKind::AToRunMeets => a_to_run_meets(a, guard)?,
            TransformKind::RunMeetsToA => run_meets_to_a(a),
            TransformKind::AprimeToRunSubseteq => aprime_to_run_subseteq(a, guard)?,
            TransformKind::RunSubseteqToAprime => run_subseteq_to_aprime(a, guard)?,
            TransformKind::ComplementTable => complement_table(a),
            TransformKind::AddSink => add_sink(a, source)?,
            TransformKind::InfMeetsToL => inf_meets_to_l(a),
            TransformKind::LToInfMeets => l_to_inf_meets(a)?,
            TransformKind::SingleAcceptingLprime => single_accepting_lprime(a, guard)?,
            TransformKind::LprimeToInfSubseteq => lprime_to_inf_subseteq(a)?,
            TransformKind::CompleteForFin => complete_for_fin(a),
            TransformKind::FinSubseteqToFinEq => fin_subseteq_to_fin_eq(a, guard)?,
            TransformKind::FinMeetsToFinEq => fin_meets_to_fin_eq(a, guard)?,
            TransformKind::InfMeetsToFinEq => inf_meets_to_fin_eq(a, guard)?,
            TransformKind::DfaFinSubseteqDecompose => {
                return Ok(TransformOutput::Expr(dfa_fin_subseteq_decompose(a, guard)?))
            }
        };
        Ok(TransformOutput::Automaton(out))
    }
}

impl std::fmt::Display for TransformKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

/// Builds an automaton from index-based pieces after checking that the
/// constructed state names are pairwise distinct.
///
/// Name collisions are impossible for ordinary state names; adversarial
/// names containing `·` or brackets surface here as a duplicate-state
/// validation error instead of silently merging states.
pub(crate) fn assemble(
    alphabet: Alphabet,
    names: Vec<String>,
    initial: usize,
    transitions: Vec<(usize, usize, usize)>,
    table: Vec<BTreeSet<usize>>,
) -> Result<Automaton> {
    let mut seen = HashSet::with_capacity(names.len());
    for name in &names {
        if !seen.insert(name.as_str()) {
            return Err(Error::InvalidAutomaton(vec![Violation::DuplicateState(
                name.clone(),
            )]));
        }
    }
    let states: Vec<StateId> = names
        .into_iter()
        .map(StateId::new)
        .collect::<Result<_>>()?;
    Ok(Automaton::from_indexed(
        alphabet,
        states,
        initial,
        transitions,
        table,
    ))
}

/// Table members as bitmasks over state indices (caller guards `|Q| ≤ 64`).
fn member_masks(a: &Automaton) -> Vec<u64> {
    a.table()
        .iter()
        .map(|m| m.iter().fold(0u64, |acc, &q| acc | (1 << q)))
        .collect()
}

/// Renders a visited-state set as `[a;b]`, states in index order.
fn visited_label(a: &Automaton, mask: u64) -> String {
    naming::set_name(
        (0..a.state_count())
            .filter(|&q| mask & (1 << q) != 0)
            .map(|q| a.state(q).as_str()),
    )
}

/// The states of a mask as an index set, shifted by `offset`.
fn mask_to_set(mask: u64, n: usize, offset: usize) -> BTreeSet<usize> {
    (0..n).filter(|&q| mask & (1 << q) != 0).map(|q| q + offset).collect()
}

/// Rewrites an automaton read under `A` (some table member is contained in
/// the visited-state set) into one read under `(run, ⊓)`.
///
/// The output is the reachable part of the product over `Q × 𝒫(Q)` whose
/// second component accumulates visited transition targets, so it stabilizes
/// to the run statistic along any infinite path; the table holds every
/// singleton `{(q, S)}` whose accumulated set `S` contains some input table
/// member.  Because the accumulated component only grows, such a product
/// state is visited exactly when the underlying run's visited set eventually
/// covers a member.  Determinism and completeness are preserved.
pub fn a_to_run_meets(a: &Automaton, guard: &SizeGuard) -> Result<Automaton> {
    let n = a.state_count();
    if n > guard.max_subset_states {
        return Err(Error::guard(
            "a-to-run-meets subset product states",
            n,
            guard.max_subset_states,
        ));
    }
    let members = member_masks(a);
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
    let table: Vec<BTreeSet<usize>> = states
        .iter()
        .enumerate()
        .filter(|&(_, &(_, s))| members.iter().any(|&f| f & !s == 0))
        .map(|(i, _)| BTreeSet::from([i]))
        .collect();
    let names = states
        .iter()
        .map(|&(q, s)| naming::dot_join(&[a.state(q).as_str(), &visited_label(a, s)]))
        .collect();
    assemble(a.alphabet().clone(), names, 0, transitions, table)
}

/// Rewrites an automaton read under `(run, ⊓)` into one read under `A`.
///
/// Only the table changes: it becomes the singletons of every state that
/// occurs in some member.  Visiting such a state is the same as meeting the
/// member containing it, and a singleton is contained in the run set exactly
/// when its state is visited.
pub fn run_meets_to_a(a: &Automaton) -> Automaton {
    let table = a
        .table_union()
        .into_iter()
        .map(|q| BTreeSet::from([q]))
        .collect();
    Automaton::from_indexed(
        a.alphabet().clone(),
        a.states().to_vec(),
        a.initial(),
        a.transitions().to_vec(),
        table,
    )
}

/// Rewrites an automaton read under `A′` (some table member is *not*
/// contained in the visited-state set) into one read under `(run, ⊆)`.
///
/// A visited-set product as in [`a_to_run_meets`], except that a step whose
/// accumulated set would contain every table member drops to a sink `⊥`
/// instead; the table is the single set of all non-sink states.  A run keeps
/// its visited set inside that single maximal table set exactly when it
/// never reaches the all-members-covered point — the full downward-closed
/// table of sets avoiding `⊥` would accept the same runs, because `run ⊆ F`
/// only needs the maximal such `F`.  Determinism and completeness are
/// preserved; the sink only exists if some step reaches it.
pub fn aprime_to_run_subseteq(a: &Automaton, guard: &SizeGuard) -> Result<Automaton> {
    let n = a.state_count();
    if n > guard.max_subset_states {
        return Err(Error::guard(
            "aprime-to-run-subseteq subset product states",
            n,
            guard.max_subset_states,
        ));
    }
    let members = member_masks(a);
    let mut states: Vec<(usize, u64)> = vec![(a.initial(), 0)];
    let mut index: HashMap<(usize, u64), usize> = HashMap::from([((a.initial(), 0), 0)]);
    let mut transitions = Vec::new();
    let mut sink: Option<usize> = None;
    let mut cursor = 0;
    while cursor < states.len() {
        let (p, s) = states[cursor];
        if p == usize::MAX {
            cursor += 1;
            continue;
        }
        for x in 0..a.alphabet().len() {
            for &q in a.successors(p, x) {
                let grown = s | (1 << q);
                let all_covered = members.iter().all(|&f| f & !grown == 0);
                let target = if all_covered {
                    *sink.get_or_insert_with(|| {
                        states.push((usize::MAX, 0));
                        states.len() - 1
                    })
                } else {
                    *index.entry((q, grown)).or_insert_with(|| {
                        states.push((q, grown));
                        states.len() - 1
                    })
                };
                transitions.push((cursor, x, target));
            }
        }
        cursor += 1;
    }
    if let Some(bot) = sink {
        for x in 0..a.alphabet().len() {
            transitions.push((bot, x, bot));
        }
    }
    let mut names: Vec<String> = states
        .iter()
        .map(|&(q, s)| {
            if q == usize::MAX {
                String::new() // placeholder, replaced below
            } else {
                naming::dot_join(&[a.state(q).as_str(), &visited_label(a, s)])
            }
        })
        .collect();
    if let Some(bot) = sink {
        let taken: HashSet<&str> = names.iter().map(|s| s.as_str()).collect();
        names[bot] = naming::fresh_name("\u{22a5}", &taken);
    }
    let alive: BTreeSet<usize> = (0..states.len()).filter(|&i| Some(i) != sink).collect();
    assemble(a.alphabet().clone(), names, 0, transitions, vec![alive])
}

/// Rewrites an automaton read under `(run, ⊆)` into one read under `A′`.
///
/// The same visited-set product, dropping to the sink `⊥` exactly when the
/// accumulated set fits inside no table member; the output table is `{{⊥}}`.
/// Under `A′` the single member `{⊥}` is not contained in the run set
/// exactly when the sink is never visited, which happens exactly when the
/// input run's visited set stays inside some member.  The sink state is
/// always declared (the table mentions it) even when unreachable;
/// determinism and completeness are preserved.
pub fn run_subseteq_to_aprime(a: &Automaton, guard: &SizeGuard) -> Result<Automaton> {
    let n = a.state_count();
    if n > guard.max_subset_states {
        return Err(Error::guard(
            "run-subseteq-to-aprime subset product states",
            n,
            guard.max_subset_states,
        ));
    }
    let members = member_masks(a);
    let mut states: Vec<(usize, u64)> = vec![(a.initial(), 0)];
    let mut index: HashMap<(usize, u64), usize> = HashMap::from([((a.initial(), 0), 0)]);
    let mut transitions = Vec::new();
    let mut cursor = 0;
    while cursor < states.len() {
        let (p, s) = states[cursor];
        if p == usize::MAX {
            cursor += 1;
            continue;
        }
        for x in 0..a.alphabet().len() {
            for &q in a.successors(p, x) {
                let grown = s | (1 << q);
                let fits_somewhere = members.iter().any(|&f| grown & !f == 0);
                let next = if fits_somewhere {
                    (q, grown)
                } else {
                    (usize::MAX, 0)
                };
                let target = *index.entry(next).or_insert_with(|| {
                    states.push(next);
                    states.len() - 1
                });
                transitions.push((cursor, x, target));
            }
        }
        cursor += 1;
    }
    let sink_idx = *index.entry((usize::MAX, 0)).or_insert_with(|| {
        states.push((usize::MAX, 0));
        states.len() - 1
    });
    for x in 0..a.alphabet().len() {
        transitions.push((sink_idx, x, sink_idx));
    }
    let mut names: Vec<String> = states
        .iter()
        .map(|&(q, s)| {
            if q == usize::MAX {
                String::new()
            } else {
                naming::dot_join(&[a.state(q).as_str(), &visited_label(a, s)])
            }
        })
        .collect();
    let taken: HashSet<&str> = names.iter().map(|s| s.as_str()).collect();
    names[sink_idx] = naming::fresh_name("\u{22a5}", &taken);
    let table = vec![BTreeSet::from([sink_idx])];
    assemble(a.alphabet().clone(), names, 0, transitions, table)
}

/// Replaces the table by the complements of its members; structure is
/// untouched and the operation is an involution.
///
/// This realizes two dualities exactly: `L` (some member inside the
/// inf-set) over table 𝓕 equals `(ninf, ⊆)` over the complemented table,
/// because `F ⊆ inf` iff `ninf ⊆ Q∖F`; and `(inf, =)` equals `(ninf, =)`
/// complemented, because `inf = F` iff `ninf = Q∖F`.  By contrast `L′`
/// pairs with `(ninf, ⊓)` over the *unchanged* table — `F ⊄ inf` iff
/// `F ∩ ninf ≠ ∅` — so no complement is involved in that pairing.
pub fn complement_table(a: &Automaton) -> Automaton {
    let all: BTreeSet<usize> = (0..a.state_count()).collect();
    let table = a
        .table()
        .iter()
        .map(|m| all.difference(m).copied().collect())
        .collect();
    Automaton::from_indexed(
        a.alphabet().clone(),
        a.states().to_vec(),
        a.initial(),
        a.transitions().to_vec(),
        table,
    )
}

/// Completes an automaton by routing every missing transition to a fresh
/// self-looping sink `⊥` outside every table member, for conditions where
/// that preserves the language.
///
/// An already-complete automaton is returned unchanged under any condition.
/// Otherwise the rewrite is language-preserving exactly when the new
/// sink-trapped paths (whose inf-set is `{⊥}`) can never be accepted and no
/// old path's acceptance changes:
///
/// * sound — `(inf, ⊓)`, `(inf, ⊆)`, `(inf, =)` (no member contains `⊥`,
///   and `{⊥} ⊆ F` would need `⊥ ∈ F`); `(run, ⊆)`, `(run, =)` (sink paths
///   have `⊥` in their run set, real members never do); `L` when no member
///   is empty (`F ⊆ {⊥}` forces `F = ∅`);
/// * refused — `L` with an empty member and every other condition: sink
///   paths satisfy `A`/`A′`/`L′`/`(run, ⊓)`/`(ninf, ⊓)` too easily (e.g.
///   any nonempty `F` is not contained in `{⊥}`, giving `L′`), the `fin`
///   conditions see the pre-sink states as finitely visited (use
///   [`complete_for_fin`] instead), and `(ninf, ⊆)` / `(ninf, =)` change on
///   *old* paths because every ninf-set grows by `⊥`.
pub fn add_sink(a: &Automaton, cond: &Condition) -> Result<Automaton> {
    if a.is_complete() {
        return Ok(a.clone());
    }
    let sound = match cond {
        Condition::Pair(StatKind::Inf, _) => true,
        Condition::Pair(StatKind::Run, Rel::Subseteq | Rel::Eq) => true,
        Condition::Named(NamedCondition::L) => !a.table().iter().any(|m| m.is_empty()),
        _ => false,
    };
    if !sound {
        return Err(Error::unsupported(
            "add-sink",
            format!("sink completion does not preserve the language under {cond} (for L, every table member must be nonempty)"),
        ));
    }
    let n = a.state_count();
    let taken: HashSet<&str> = a.states().iter().map(|s| s.as_str()).collect();
    let bot = naming::fresh_name("\u{22a5}", &taken);
    let mut names: Vec<String> = a.states().iter().map(|s| s.as_str().to_string()).collect();
    names.push(bot);
    let mut transitions = a.transitions().to_vec();
    for p in 0..n {
        for x in 0..a.alphabet().len() {
            if a.successors(p, x).is_empty() {
                transitions.push((p, x, n));
            }
        }
    }
    for x in 0..a.alphabet().len() {
        transitions.push((n, x, n));
    }
    let table = a.table().to_vec();
    assemble(a.alphabet().clone(), names, a.initial(), transitions, table)
}

/// Rewrites an automaton read under `(inf, ⊓)` into one read under `L`
/// (some member inside the inf-set) by replacing the table with the
/// singletons of all states occurring in some member; structure is
/// untouched.
///
/// Meeting a member is the same as having some of its states in the
/// inf-set, and a singleton `{q} ⊆ inf` says exactly that.
pub fn inf_meets_to_l(a: &Automaton) -> Automaton {
    let table = a
        .table_union()
        .into_iter()
        .map(|q| BTreeSet::from([q]))
        .collect();
    Automaton::from_indexed(
        a.alphabet().clone(),
        a.states().to_vec(),
        a.initial(),
        a.transitions().to_vec(),
        table,
    )
}

/// Rewrites a deterministic complete automaton read under `L` into one read
/// under `(inf, ⊓)`.
///
/// Per table member `F`, "every state of `F` is visited infinitely often"
/// is turned into plain repeated-visit acceptance with a round-robin
/// counter: the counter waits for the states of `F` in index order,
/// advances on visiting the awaited one, and entering the full-round value
/// marks an accepting tick (`F = ∅` degenerates to a copy accepting
/// everywhere, `F = {q}` to a copy accepting on `{q}`).  The per-member
/// automata are then folded with a binary product whose table lifts each
/// operand's sets, giving the union of their languages.  The output is
/// deterministic and complete.
pub fn l_to_inf_meets(a: &Automaton) -> Result<Automaton> {
    if !a.is_deterministic() || !a.is_complete() {
        return Err(Error::unsupported(
            "L-to-inf-meets",
            "requires a deterministic complete automaton",
        ));
    }
    if a.table().is_empty() {
        return Ok(Automaton::from_indexed(
            a.alphabet().clone(),
            a.states().to_vec(),
            a.initial(),
            a.transitions().to_vec(),
            Vec::new(),
        ));
    }
    let parts: Vec<Automaton> = a
        .table()
        .iter()
        .map(|member| round_robin(a, member))
        .collect::<Result<_>>()?;
    let mut acc = parts[0].clone();
    for next in &parts[1..] {
        acc = product_union(&acc, next)?;
    }
    Ok(acc)
}

/// Round-robin counter product for one member of [`l_to_inf_meets`].
fn round_robin(a: &Automaton, member: &BTreeSet<usize>) -> Result<Automaton> {
    let k = member.len();
    if k == 0 {
        let everything: BTreeSet<usize> = (0..a.state_count()).collect();
        return Ok(Automaton::from_indexed(
            a.alphabet().clone(),
            a.states().to_vec(),
            a.initial(),
            a.transitions().to_vec(),
            vec![everything],
        ));
    }
    if k == 1 {
        return Ok(Automaton::from_indexed(
            a.alphabet().clone(),
            a.states().to_vec(),
            a.initial(),
            a.transitions().to_vec(),
            vec![member.clone()],
        ));
    }
    let awaited: Vec<usize> = member.iter().copied().collect();
    let mut states: Vec<(usize, usize)> = vec![(a.initial(), 0)];
    let mut index: HashMap<(usize, usize), usize> = HashMap::from([((a.initial(), 0), 0)]);
    let mut transitions = Vec::new();
    let mut cursor = 0;
    while cursor < states.len() {
        let (p, c) = states[cursor];
        let c_eff = if c == k { 0 } else { c };
        for x in 0..a.alphabet().len() {
            let q = a.successors(p, x)[0];
            let c_next = c_eff + usize::from(q == awaited[c_eff]);
            let next = (q, c_next);
            let target = *index.entry(next).or_insert_with(|| {
                states.push(next);
                states.len() - 1
            });
            transitions.push((cursor, x, target));
        }
        cursor += 1;
    }
    let ticks: BTreeSet<usize> = states
        .iter()
        .enumerate()
        .filter(|&(_, &(_, c))| c == k)
        .map(|(i, _)| i)
        .collect();
    let names = states
        .iter()
        .map(|&(q, c)| naming::dot_join(&[a.state(q).as_str(), &c.to_string()]))
        .collect();
    assemble(a.alphabet().clone(), names, 0, transitions, vec![ticks])
}

/// Reachable synchronized product of two deterministic complete automata
/// over the same alphabet; the table lifts each operand's sets, so under
/// `(inf, ⊓)` the product accepts the union of the operand languages.
fn product_union(a1: &Automaton, a2: &Automaton) -> Result<Automaton> {
    debug_assert_eq!(a1.alphabet(), a2.alphabet());
    let mut states: Vec<(usize, usize)> = vec![(a1.initial(), a2.initial())];
    let mut index: HashMap<(usize, usize), usize> =
        HashMap::from([((a1.initial(), a2.initial()), 0)]);
    let mut transitions = Vec::new();
    let mut cursor = 0;
    while cursor < states.len() {
        let (p1, p2) = states[cursor];
        for x in 0..a1.alphabet().len() {
            let next = (a1.successors(p1, x)[0], a2.successors(p2, x)[0]);
            let target = *index.entry(next).or_insert_with(|| {
                states.push(next);
                states.len() - 1
            });
            transitions.push((cursor, x, target));
        }
        cursor += 1;
    }
    let mut table = Vec::new();
    for member in a1.table() {
        table.push(
            states
                .iter()
                .enumerate()
                .filter(|&(_, &(s1, _))| member.contains(&s1))
                .map(|(i, _)| i)
                .collect::<BTreeSet<usize>>(),
        );
    }
    for member in a2.table() {
        table.push(
            states
                .iter()
                .enumerate()
                .filter(|&(_, &(_, s2))| member.contains(&s2))
                .map(|(i, _)| i)
                .collect::<BTreeSet<usize>>(),
        );
    }
    let names = states
        .iter()
        .map(|&(s1, s2)| naming::dot_join(&[a1.state(s1).as_str(), a2.state(s2).as_str()]))
        .collect();
    assemble(a1.alphabet().clone(), names, 0, transitions, table)
}

/// Rewrites an automaton read under `L′` (some member not inside the
/// inf-set) into an equivalent one whose table is a single singleton.
///
/// With `𝓕 = ∅` or `𝓕 = {∅}` no member can fail to be inside an inf-set,
/// so the language is empty and a one-state self-loop automaton with table
/// `{{⊥}}` is returned (its lone state is always in the inf-set).
/// Otherwise, with `F̄ = ∪𝓕` and `f` the designated element of `F̄` (the
/// lexicographically least state name), the output tracks the subset of
/// `F̄` visited since the last reset and resets to `∅` on leaving the
/// accepting pair `(f, F̄)`; the reset step deliberately does not record
/// its target.  The pair `(f, F̄)` is in the product's inf-set exactly when
/// every state of `F̄` is visited infinitely often, i.e. when every member
/// is inside the inf-set — the complement of the `L′` requirement — so
/// reading the product under `L′` with table `{{(f, F̄)}}` preserves the
/// language.  Determinism and completeness are preserved; the accepting
/// pair and everything it reaches are kept even when unreachable from the
/// initial state so completeness survives.
pub fn single_accepting_lprime(a: &Automaton, guard: &SizeGuard) -> Result<Automaton> {
    let degenerate =
        a.table().is_empty() || (a.table().len() == 1 && a.table()[0].is_empty());
    if degenerate {
        let transitions = (0..a.alphabet().len()).map(|x| (0, x, 0)).collect();
        return assemble(
            a.alphabet().clone(),
            vec!["\u{22a5}".to_string()],
            0,
            transitions,
            vec![BTreeSet::from([0])],
        );
    }
    let fbar: Vec<usize> = a.table_union().into_iter().collect();
    if fbar.len() > guard.max_subset_states {
        return Err(Error::guard(
            "single-accepting-Lprime tracked set size",
            fbar.len(),
            guard.max_subset_states,
        ));
    }
    let f = *fbar
        .iter()
        .min_by_key(|&&q| a.state(q).as_str())
        .expect("fbar nonempty");
    let bit_of: HashMap<usize, u64> = fbar
        .iter()
        .enumerate()
        .map(|(i, &q)| (q, 1u64 << i))
        .collect();
    let full: u64 = (1 << fbar.len()) - 1;
    let mut states: Vec<(usize, u64)> = vec![(a.initial(), 0)];
    let mut index: HashMap<(usize, u64), usize> = HashMap::from([((a.initial(), 0), 0)]);
    if (a.initial(), 0) != (f, full) {
        states.push((f, full));
        index.insert((f, full), 1);
    }
    let mut transitions = Vec::new();
    let mut cursor = 0;
    while cursor < states.len() {
        let (p, s) = states[cursor];
        let resetting = (p, s) == (f, full);
        for x in 0..a.alphabet().len() {
            for &q in a.successors(p, x) {
                let next = if resetting {
                    (q, 0)
                } else {
                    (q, s | bit_of.get(&q).copied().unwrap_or(0))
                };
                let target = *index.entry(next).or_insert_with(|| {
                    states.push(next);
                    states.len() - 1
                });
                transitions.push((cursor, x, target));
            }
        }
        cursor += 1;
    }
    let label = |mask: u64| {
        naming::set_name(
            fbar.iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, &q)| a.state(q).as_str()),
        )
    };
    let names = states
        .iter()
        .map(|&(q, s)| naming::dot_join(&[a.state(q).as_str(), &label(s)]))
        .collect();
    let accepting = index[&(f, full)];
    assemble(
        a.alphabet().clone(),
        names,
        0,
        transitions,
        vec![BTreeSet::from([accepting])],
    )
}

/// Rewrites an automaton read under `L′` whose table is a single singleton
/// `{{f}}` (apply [`single_accepting_lprime`] first) into one read under
/// `(inf, ⊆)` with table `{Q ∖ {f}}`; structure is untouched.
///
/// The single member fails to be inside the inf-set exactly when `f` is
/// not in it, i.e. when the inf-set stays inside `Q ∖ {f}`.
pub fn lprime_to_inf_subseteq(a: &Automaton) -> Result<Automaton> {
    let f = match a.table() {
        [member] if member.len() == 1 => *member.iter().next().expect("len checked"),
        _ => {
            return Err(Error::unsupported(
                "lprime-to-inf-subseteq",
                "requires a table with exactly one member of size one; apply single-accepting-Lprime first",
            ))
        }
    };
    let complement: BTreeSet<usize> = (0..a.state_count()).filter(|&q| q != f).collect();
    Ok(Automaton::from_indexed(
        a.alphabet().clone(),
        a.states().to_vec(),
        a.initial(),
        a.transitions().to_vec(),
        vec![complement],
    ))
}

/// Completes an automaton for the `fin` conditions by adding a two-stage
/// sink: missing transitions route to a fresh `⊥`, which steps to a fresh
/// self-looping `⊥′` on every letter.
///
/// A path entering the sink visits `⊥` exactly once, so `⊥` lands in its
/// fin-set; no table member contains `⊥`, which makes such paths rejecting
/// under both `(fin, ⊆)` and `(fin, =)` — exactly as they were before the
/// completion, when they died at the missing transition.  (A self-looping
/// single sink would instead put `⊥` in the inf-set and leave the fin-set
/// accidentally acceptable.)  Old paths keep their statistics.  Determinism
/// is preserved; an already-complete automaton is returned unchanged.
pub fn complete_for_fin(a: &Automaton) -> Automaton {
    if a.is_complete() {
        return a.clone();
    }
    let n = a.state_count();
    let mut taken: HashSet<&str> = a.states().iter().map(|s| s.as_str()).collect();
    let bot = naming::fresh_name("\u{22a5}", &taken);
    let bot_name = bot.clone();
    taken.insert(bot_name.as_str());
    let bot2 = naming::fresh_name(&format!("{bot}'"), &taken);
    let mut names: Vec<String> = a.states().iter().map(|s| s.as_str().to_string()).collect();
    names.push(bot);
    names.push(bot2);
    let mut transitions = a.transitions().to_vec();
    for p in 0..n {
        for x in 0..a.alphabet().len() {
            if a.successors(p, x).is_empty() {
                transitions.push((p, x, n));
            }
        }
    }
    for x in 0..a.alphabet().len() {
        transitions.push((n, x, n + 1));
        transitions.push((n + 1, x, n + 1));
    }
    assemble(
        a.alphabet().clone(),
        names,
        a.initial(),
        transitions,
        a.table().to_vec(),
    )
    .expect("fresh sink names cannot collide")
}

/// Rewrites an automaton read under `(fin, ⊆)` into one read under
/// `(fin, =)` by replacing the table with the union of the full powersets
/// of its members (its downward closure); structure is untouched.
///
/// The fin-set is contained in some member exactly when it equals some
/// subset of a member.
pub fn fin_subseteq_to_fin_eq(a: &Automaton, guard: &SizeGuard) -> Result<Automaton> {
    let mut table: Vec<BTreeSet<usize>> = Vec::new();
    for member in a.table() {
        if member.len() > guard.max_member_size {
            return Err(Error::guard(
                "fin-subseteq-to-fin-eq member size",
                member.len(),
                guard.max_member_size,
            ));
        }
        let elems: Vec<usize> = member.iter().copied().collect();
        for mask in 0u64..(1 << elems.len()) {
            table.push(
                elems
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &q)| q)
                    .collect(),
            );
        }
    }
    Ok(Automaton::from_indexed(
        a.alphabet().clone(),
        a.states().to_vec(),
        a.initial(),
        a.transitions().to_vec(),
        table,
    ))
}

/// Rewrites an automaton read under `(fin, ⊓)` into one read under
/// `(fin, =)` by replacing the table with every subset of `Q` that meets
/// some member; structure is untouched.
///
/// The fin-set meets some member exactly when it equals one of the subsets
/// that do.
pub fn fin_meets_to_fin_eq(a: &Automaton, guard: &SizeGuard) -> Result<Automaton> {
    let n = a.state_count();
    if n > guard.max_subset_states {
        return Err(Error::guard(
            "fin-meets-to-fin-eq powerset size",
            n,
            guard.max_subset_states,
        ));
    }
    let union: u64 = a.table_union().iter().fold(0, |acc, &q| acc | (1 << q));
    let mut table = Vec::new();
    for mask in 0u64..(1 << n) {
        if mask & union != 0 {
            table.push(mask_to_set(mask, n, 0));
        }
    }
    Ok(Automaton::from_indexed(
        a.alphabet().clone(),
        a.states().to_vec(),
        a.initial(),
        a.transitions().to_vec(),
        table,
    ))
}

/// Rewrites an automaton read under `(inf, ⊓)` into one read under
/// `(fin, =)`, the constructive heart of expressing every ω-rational
/// language with exact fin-set acceptance.
///
/// States are a fresh initial copy `q₀′`, the original states, and all
/// pairs `(p₁, p₂)`.  Original transitions are kept; every transition
/// `(p, x, q)` additionally offers the detour `(p, x, (q, p))` recording
/// its source, and a pair `(p₁, p₂)` continues like `p₁`.  The table
/// contains `(F ∖ {p₂}) ∪ {(p₁, p₂)}` for every `p₁ ∈ Q`, `F ⊆ Q`, and
/// `p₂` occurring in some input member.
///
/// A path whose fin-set equals such a member visits the pair `(p₁, p₂)`
/// at least once but finitely often; since only `p₂` can precede that
/// pair and the fresh initial state offers no detours, `p₂` really is
/// visited (at an index past 0), and `p₂ ∉ (F ∖ {p₂})` forces `p₂` into
/// the inf-set — so the projected original path meets a member infinitely
/// often.  Conversely an accepting original path can take the detour once
/// at a visit of `p₂` late enough that every finitely-visited state is
/// already done, making its fin-set exactly `fin ∪ {(p₁, p₂)}`.  The
/// fresh initial copy exists to close an index-0 loophole: without it, a
/// detour on the very first step could record the initial state as `p₂`
/// even though that state never occurs in the run statistic.
///
/// The output has exactly `1 + |Q| + |Q|²` states and is nondeterministic
/// by design.
pub fn inf_meets_to_fin_eq(a: &Automaton, guard: &SizeGuard) -> Result<Automaton> {
    let n = a.state_count();
    if n > guard.max_pair_states {
        return Err(Error::guard(
            "inf-meets-to-fin-eq pair construction states",
            n,
            guard.max_pair_states,
        ));
    }
    let taken: HashSet<&str> = a.states().iter().map(|s| s.as_str()).collect();
    let fresh_initial = naming::fresh_name(
        &format!("{}'", a.state(a.initial()).as_str()),
        &taken,
    );
    let mut names: Vec<String> = vec![fresh_initial];
    names.extend(a.states().iter().map(|s| s.as_str().to_string()));
    for p1 in 0..n {
        for p2 in 0..n {
            names.push(naming::dot_join(&[
                a.state(p1).as_str(),
                a.state(p2).as_str(),
            ]));
        }
    }
    let base = |q: usize| 1 + q;
    let pair = |p1: usize, p2: usize| 1 + n + p1 * n + p2;
    let mut transitions = Vec::new();
    for &(p, x, q) in a.transitions() {
        if p == a.initial() {
            transitions.push((0, x, base(q)));
        }
        transitions.push((base(p), x, base(q)));
        transitions.push((base(p), x, pair(q, p)));
        for p2 in 0..n {
            transitions.push((pair(p, p2), x, base(q)));
        }
    }
    let mut table = Vec::new();
    for &p2 in &a.table_union() {
        for p1 in 0..n {
            for fmask in 0u64..(1 << n) {
                let mut member: BTreeSet<usize> = (0..n)
                    .filter(|&q| fmask & (1 << q) != 0 && q != p2)
                    .map(base)
                    .collect();
                member.insert(pair(p1, p2));
                table.push(member);
            }
        }
    }
    assemble(a.alphabet().clone(), names, 0, transitions, table)
}

/// A language formed from automaton leaves by finite unions and
/// intersections.
#[derive(Debug, Clone)]
pub enum LanguageExpr {
    /// Membership decided directly by an automaton under a condition.
    Leaf {
        /// The deciding automaton.
        automaton: Box<Automaton>,
        /// The condition the automaton is read under.
        cond: Condition,
    },
    /// Union of the children's languages (at least one child).
    Union(Vec<LanguageExpr>),
    /// Intersection of the children's languages (at least one child).
    Intersection(Vec<LanguageExpr>),
}

impl LanguageExpr {
    /// A leaf expression.
    pub fn leaf(automaton: Automaton, cond: Condition) -> Self {
        LanguageExpr::Leaf {
            automaton: Box::new(automaton),
            cond,
        }
    }

    /// A union node; requires at least one child sharing one alphabet.
    pub fn union(children: Vec<LanguageExpr>) -> Result<Self> {
        Self::check_children(&children, "union")?;
        Ok(LanguageExpr::Union(children))
    }

    /// An intersection node; requires at least one child sharing one
    /// alphabet.
    pub fn intersection(children: Vec<LanguageExpr>) -> Result<Self> {
        Self::check_children(&children, "intersection")?;
        Ok(LanguageExpr::Intersection(children))
    }

    fn check_children(children: &[LanguageExpr], what: &str) -> Result<()> {
        if children.is_empty() {
            return Err(Error::unsupported(
                "language-expr",
                format!("{what} needs at least one child"),
            ));
        }
        let first = children[0].alphabet().clone();
        for child in &children[1..] {
            if *child.alphabet() != first {
                return Err(Error::unsupported(
                    "language-expr",
                    "all leaves must share one alphabet",
                ));
            }
        }
        Ok(())
    }

    /// The common alphabet of every leaf.
    pub fn alphabet(&self) -> &Alphabet {
        match self {
            LanguageExpr::Leaf { automaton, .. } => automaton.alphabet(),
            LanguageExpr::Union(children) | LanguageExpr::Intersection(children) => {
                children[0].alphabet()
            }
        }
    }

    /// Number of leaves in the expression.
    pub fn leaf_count(&self) -> usize {
        match self {
            LanguageExpr::Leaf { .. } => 1,
            LanguageExpr::Union(children) | LanguageExpr::Intersection(children) => {
                children.iter().map(LanguageExpr::leaf_count).sum()
            }
        }
    }

    /// Deterministic s-expression rendering.
    ///
    /// Leaves are printed as `(leaf COND TABLE)` where `TABLE` lists the
    /// leaf automaton's table sets as `{q0,q1}` (or `-` for an empty
    /// table); unions and intersections as `(union …)` / `(intersection …)`
    /// in child order.  All leaves produced by
    /// [`dfa_fin_subseteq_decompose`] share the input's structure and
    /// differ only in condition and table, which this rendering captures
    /// completely.
    pub fn to_sexpr(&self) -> String {
        match self {
            LanguageExpr::Leaf { automaton, cond } => {
                let mut text = format!("(leaf {cond}");
                if automaton.table().is_empty() {
                    text.push_str(" -");
                }
                for member in automaton.table() {
                    text.push_str(" {");
                    let names: Vec<&str> =
                        member.iter().map(|&q| automaton.state(q).as_str()).collect();
                    text.push_str(&names.join(","));
                    text.push('}');
                }
                text.push(')');
                text
            }
            LanguageExpr::Union(children) => {
                let inner: Vec<String> = children.iter().map(|c| c.to_sexpr()).collect();
                format!("(union {})", inner.join(" "))
            }
            LanguageExpr::Intersection(children) => {
                let inner: Vec<String> = children.iter().map(|c| c.to_sexpr()).collect();
                format!("(intersection {})", inner.join(" "))
            }
        }
    }
}

/// Decomposes a deterministic automaton read under `(fin, ⊆)` into a union
/// of intersections of `(run, ⊆)` and `(inf, ⊓)` languages.
///
/// For the unique run of a deterministic automaton, `fin ⊆ F` for some
/// member iff there is a pair `S′ ⊆ S ⊆ Q` with `S ∖ S′ ⊆ F` such that the
/// run's visited set stays inside `S` while every state of `S′` is visited
/// infinitely often (take `S` = run-set and `S′` = inf-set for the forward
/// direction; conversely any finitely-visited state lies in `S ∖ S′ ⊆ F`).
/// The expression enumerates exactly those pairs — subsets in ascending
/// bitmask order over state indices — with one `(run, ⊆)` leaf for `S` and
/// an `(inf, ⊓)` singleton leaf per state of `S′`.  Determinism matters:
/// with several runs per word, different conjuncts could be satisfied by
/// different runs and the language inclusion would break.
///
/// An empty table means the empty language; it is returned as a single
/// unsatisfiable `(run, ⊆)` leaf with an empty table.
pub fn dfa_fin_subseteq_decompose(a: &Automaton, guard: &SizeGuard) -> Result<LanguageExpr> {
    if !a.is_deterministic() {
        return Err(Error::unsupported(
            "dfa-fin-subseteq-decompose",
            "requires a deterministic automaton",
        ));
    }
    let n = a.state_count();
    if n > guard.max_subset_states {
        return Err(Error::guard(
            "dfa-fin-subseteq-decompose subset pairs",
            n,
            guard.max_subset_states,
        ));
    }
    let run_subseteq = Condition::Pair(StatKind::Run, Rel::Subseteq);
    let inf_meets = Condition::Pair(StatKind::Inf, Rel::Meets);
    let with_table = |table: Vec<BTreeSet<usize>>| {
        Automaton::from_indexed(
            a.alphabet().clone(),
            a.states().to_vec(),
            a.initial(),
            a.transitions().to_vec(),
            table,
        )
    };
    let members = member_masks(a);
    if members.is_empty() {
        return Ok(LanguageExpr::leaf(with_table(Vec::new()), run_subseteq));
    }
    let mut pairs = Vec::new();
    for s_mask in 0u64..(1 << n) {
        for sp_mask in 0u64..=s_mask {
            if sp_mask & !s_mask != 0 {
                continue;
            }
            let finite_part = s_mask & !sp_mask;
            if !members.iter().any(|&f| finite_part & !f == 0) {
                continue;
            }
            let mut leaves = vec![LanguageExpr::leaf(
                with_table(vec![mask_to_set(s_mask, n, 0)]),
                run_subseteq,
            )];
            for q in (0..n).filter(|&q| sp_mask & (1 << q) != 0) {
                leaves.push(LanguageExpr::leaf(
                    with_table(vec![BTreeSet::from([q])]),
                    inf_meets,
                ));
            }
            pairs.push(LanguageExpr::intersection(leaves)?);
        }
    }
    LanguageExpr::union(pairs)
}

/// Decides membership of a word in an expression's language: leaves by
/// automaton acceptance, unions and intersections by any/all over the
/// children.
pub fn expr_accepts(e: &LanguageExpr, w: &LassoWord, guard: &OracleGuard) -> Result<bool> {
    match e {
        LanguageExpr::Leaf { automaton, cond } => accepts_routed(automaton, cond, w, guard),
        LanguageExpr::Union(children) => {
            for child in children {
                if expr_accepts(child, w, guard)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        LanguageExpr::Intersection(children) => {
            for child in children {
                if !expr_accepts(child, w, guard)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}
