//! Automata over finite alphabets, read against infinite words.
//!
//! An automaton is a finite alphabet, a finite nonempty state set with a
//! single initial state, a transition relation, and an *acceptance table*:
//! a finite set of state subsets. The table has no fixed meaning on its
//! own — a separate acceptance condition (see [`crate::semantics`])
//! interprets it against the statistics of an infinite run.
//!
//! The representation is index-canonical: states are numbered by first
//! appearance, symbols by alphabet order, transitions are kept sorted and
//! deduplicated by index triple, and table members are ordered index sets
//! sorted lexicographically. Structural equality therefore coincides with
//! canonical-form equality, and the text serializer
//! ([`crate::format::serialize`]) is a direct dump of this ordering.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::semantics::{Condition, NamedCondition, Rel, StatKind};

/// Characters that may not appear in state or symbol tokens.
///
/// Braces delimit table sets in the text format, ':' separates the parts
/// of a lasso word, and '#' starts a comment; whitespace separates tokens.
const FORBIDDEN_TOKEN_CHARS: [char; 5] = ['{', '}', ':', '#', ','];

fn check_token(text: &str) -> std::result::Result<(), String> {
    if text.is_empty() {
        return Err("token is empty".to_string());
    }
    for c in text.chars() {
        if c.is_whitespace() {
            return Err("token contains whitespace".to_string());
        }
        if FORBIDDEN_TOKEN_CHARS.contains(&c) {
            return Err(format!("token contains reserved character {c:?}"));
        }
    }
    Ok(())
}

/// An alphabet symbol: a nonempty token without whitespace or reserved
/// characters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(String);

impl Symbol {
    /// Validates and wraps a symbol token.
    pub fn new(text: impl Into<String>) -> Result<Self> {
        let text = text.into();
        check_token(&text).map_err(|reason| Error::BadToken {
            token: text.clone(),
            reason,
        })?;
        Ok(Symbol(text))
    }

    /// The symbol text.
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for Symbol {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// A state name: same lexical rules as [`Symbol`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateId(String);

impl StateId {
    /// Validates and wraps a state token.
    pub fn new(text: impl Into<String>) -> Result<Self> {
        let text = text.into();
        check_token(&text).map_err(|reason| Error::BadToken {
            token: text.clone(),
            reason,
        })?;
        Ok(StateId(text))
    }

    /// The state name text.
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for StateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for StateId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// An ordered, duplicate-free sequence of symbols.
///
/// The declaration order is canonical: it fixes the enumeration order of
/// lasso words and the serialization order of transitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
    index: HashMap<String, usize>,
}

impl Alphabet {
    /// Builds an alphabet from symbols in declaration order.
    ///
    /// Fails on an empty list or a duplicate symbol.
    pub fn new(symbols: impl IntoIterator<Item = Symbol>) -> Result<Self> {
        let symbols: Vec<Symbol> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(Error::InvalidAutomaton(vec![Violation::EmptyAlphabet]));
        }
        let mut index = HashMap::new();
        for (i, s) in symbols.iter().enumerate() {
            if index.insert(s.as_str().to_string(), i).is_some() {
                return Err(Error::InvalidAutomaton(vec![Violation::DuplicateSymbol(
                    s.as_str().to_string(),
                )]));
            }
        }
        Ok(Alphabet { symbols, index })
    }

    /// Convenience constructor from string tokens.
    pub fn parse(tokens: &[&str]) -> Result<Self> {
        Alphabet::new(
            tokens
                .iter()
                .map(|t| Symbol::new(*t))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// Number of symbols.
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    /// Whether the alphabet has no symbols (never true for a valid value).
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// The symbol at declaration index `i`.
    pub fn symbol(&self, i: usize) -> &Symbol {
        &self.symbols[i]
    }

    /// Declaration index of a symbol text, if present.
    pub fn index_of(&self, text: &str) -> Option<usize> {
        self.index.get(text).copied()
    }

    /// Iterates symbols in declaration order.
    pub fn iter(&self) -> impl Iterator<Item = &Symbol> {
        self.symbols.iter()
    }
}

/// One structural defect found by [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The alphabet has no symbols.
    EmptyAlphabet,
    /// A symbol appears twice in the alphabet.
    DuplicateSymbol(String),
    /// The state list is empty.
    NoStates,
    /// A state name appears twice.
    DuplicateState(String),
    /// The initial state is not in the state list.
    UnknownInitial(String),
    /// A transition endpoint is not a declared state.
    UnknownTransitionState(String),
    /// A transition symbol is not in the alphabet.
    UnknownTransitionSymbol(String),
    /// A table member mentions an undeclared state.
    UnknownTableState(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyAlphabet => write!(f, "alphabet is empty"),
            Violation::DuplicateSymbol(s) => write!(f, "duplicate symbol {s:?}"),
            Violation::NoStates => write!(f, "no states declared"),
            Violation::DuplicateState(s) => write!(f, "duplicate state {s:?}"),
            Violation::UnknownInitial(s) => write!(f, "initial state {s:?} is not declared"),
            Violation::UnknownTransitionState(s) => {
                write!(f, "transition uses undeclared state {s:?}")
            }
            Violation::UnknownTransitionSymbol(s) => {
                write!(f, "transition uses undeclared symbol {s:?}")
            }
            Violation::UnknownTableState(s) => {
                write!(f, "acceptance table uses undeclared state {s:?}")
            }
        }
    }
}

/// Raw automaton pieces prior to validation.
#[derive(Debug, Clone)]
pub struct AutomatonParts {
    /// Alphabet symbols in declaration order.
    pub alphabet: Vec<Symbol>,
    /// States in declaration order.
    pub states: Vec<StateId>,
    /// The initial state (must be declared).
    pub initial: StateId,
    /// Transition triples (source, symbol, destination).
    pub transitions: Vec<(StateId, Symbol, StateId)>,
    /// Acceptance table: a set of state subsets. May be empty, and members
    /// may be empty — the two are semantically different.
    pub table: Vec<BTreeSet<StateId>>,
}

/// Checks the structural rules and returns every defect found.
///
/// An empty result means [`Automaton::new`] will succeed on these parts.
pub fn validate(parts: &AutomatonParts) -> Vec<Violation> {
    let mut violations = Vec::new();

    if parts.alphabet.is_empty() {
        violations.push(Violation::EmptyAlphabet);
    }
    let mut symbols = HashSet::new();
    for s in &parts.alphabet {
        if !symbols.insert(s.as_str()) {
            violations.push(Violation::DuplicateSymbol(s.as_str().to_string()));
        }
    }

    if parts.states.is_empty() {
        violations.push(Violation::NoStates);
    }
    let mut states = HashSet::new();
    for q in &parts.states {
        if !states.insert(q.as_str()) {
            violations.push(Violation::DuplicateState(q.as_str().to_string()));
        }
    }

    if !states.contains(parts.initial.as_str()) {
        violations.push(Violation::UnknownInitial(parts.initial.as_str().to_string()));
    }

    for (src, sym, dst) in &parts.transitions {
        for q in [src, dst] {
            if !states.contains(q.as_str()) {
                violations.push(Violation::UnknownTransitionState(q.as_str().to_string()));
            }
        }
        if !symbols.contains(sym.as_str()) {
            violations.push(Violation::UnknownTransitionSymbol(sym.as_str().to_string()));
        }
    }

    for member in &parts.table {
        for q in member {
            if !states.contains(q.as_str()) {
                violations.push(Violation::UnknownTableState(q.as_str().to_string()));
            }
        }
    }

    violations
}

/// A validated automaton in canonical indexed form.
#[derive(Debug, Clone)]
pub struct Automaton {
    alphabet: Alphabet,
    states: Vec<StateId>,
    state_index: HashMap<String, usize>,
    initial: usize,
    /// Sorted, deduplicated (source, symbol, destination) index triples.
    transitions: Vec<(usize, usize, usize)>,
    /// Table members as index sets, sorted lexicographically, deduplicated.
    table: Vec<BTreeSet<usize>>,
    /// Cached successor lists: `succs[state][symbol]` sorted ascending.
    succs: Vec<Vec<Vec<usize>>>,
}

impl PartialEq for Automaton {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet
            && self.states == other.states
            && self.initial == other.initial
            && self.transitions == other.transitions
            && self.table == other.table
    }
}

impl Eq for Automaton {}

impl Automaton {
    /// Validates raw parts and builds the canonical form.
    pub fn new(parts: AutomatonParts) -> Result<Self> {
        let violations = validate(&parts);
        if !violations.is_empty() {
            return Err(Error::InvalidAutomaton(violations));
        }
        let alphabet = Alphabet::new(parts.alphabet)?;
        let state_index: HashMap<String, usize> = parts
            .states
            .iter()
            .enumerate()
            .map(|(i, q)| (q.as_str().to_string(), i))
            .collect();
        let initial = state_index[parts.initial.as_str()];
        let transitions = parts
            .transitions
            .iter()
            .map(|(p, x, q)| {
                (
                    state_index[p.as_str()],
                    alphabet.index_of(x.as_str()).expect("validated symbol"),
                    state_index[q.as_str()],
                )
            })
            .collect();
        let table = parts
            .table
            .iter()
            .map(|member| member.iter().map(|q| state_index[q.as_str()]).collect())
            .collect();
        Ok(Self::from_indexed(
            alphabet,
            parts.states,
            initial,
            transitions,
            table,
        ))
    }

    /// Builds from already-indexed data, canonicalizing order.
    ///
    /// Callers must pass in-range indices; this is the constructor used by
    /// transformations that synthesize automata directly.
    pub(crate) fn from_indexed(
        alphabet: Alphabet,
        states: Vec<StateId>,
        initial: usize,
        mut transitions: Vec<(usize, usize, usize)>,
        mut table: Vec<BTreeSet<usize>>,
    ) -> Self {
        let n = states.len();
        debug_assert!(initial < n);
        debug_assert!(transitions
            .iter()
            .all(|&(p, x, q)| p < n && x < alphabet.len() && q < n));
        debug_assert!(table.iter().all(|m| m.iter().all(|&q| q < n)));

        transitions.sort_unstable();
        transitions.dedup();
        table.sort();
        table.dedup();

        let state_index = states
            .iter()
            .enumerate()
            .map(|(i, q)| (q.as_str().to_string(), i))
            .collect();
        let mut succs = vec![vec![Vec::new(); alphabet.len()]; n];
        for &(p, x, q) in &transitions {
            succs[p][x].push(q);
        }

        Automaton {
            alphabet,
            states,
            state_index,
            initial,
            transitions,
            table,
            succs,
        }
    }

    /// Convenience constructor from string tokens.
    ///
    /// Mainly for fixtures and tests; production inputs come through
    /// [`crate::format::parse_document`].
    pub fn build(
        alphabet: &[&str],
        states: &[&str],
        initial: &str,
        transitions: &[(&str, &str, &str)],
        table: &[&[&str]],
    ) -> Result<Self> {
        let parts = AutomatonParts {
            alphabet: alphabet
                .iter()
                .map(|t| Symbol::new(*t))
                .collect::<Result<_>>()?,
            states: states
                .iter()
                .map(|t| StateId::new(*t))
                .collect::<Result<_>>()?,
            initial: StateId::new(initial)?,
            transitions: transitions
                .iter()
                .map(|(p, x, q)| Ok((StateId::new(*p)?, Symbol::new(*x)?, StateId::new(*q)?)))
                .collect::<Result<_>>()?,
            table: table
                .iter()
                .map(|member| member.iter().map(|q| StateId::new(*q)).collect())
                .collect::<Result<_>>()?,
        };
        Automaton::new(parts)
    }

    /// The alphabet.
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Number of states.
    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    /// States in canonical (declaration) order.
    pub fn states(&self) -> &[StateId] {
        &self.states
    }

    /// The state name at index `i`.
    pub fn state(&self, i: usize) -> &StateId {
        &self.states[i]
    }

    /// The canonical index of a state name, if declared.
    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.state_index.get(name).copied()
    }

    /// Index of the initial state.
    pub fn initial(&self) -> usize {
        self.initial
    }

    /// Sorted (source, symbol, destination) index triples.
    pub fn transitions(&self) -> &[(usize, usize, usize)] {
        &self.transitions
    }

    /// Successors of `state` under `symbol`, sorted ascending.
    pub fn successors(&self, state: usize, symbol: usize) -> &[usize] {
        &self.succs[state][symbol]
    }

    /// Acceptance table members as canonical index sets.
    pub fn table(&self) -> &[BTreeSet<usize>] {
        &self.table
    }

    /// Union of all table members.
    pub fn table_union(&self) -> BTreeSet<usize> {
        self.table.iter().flatten().copied().collect()
    }

    /// Whether every (state, symbol) pair has at most one successor.
    pub fn is_deterministic(&self) -> bool {
        self.succs
            .iter()
            .flatten()
            .all(|dsts| dsts.len() <= 1)
    }

    /// Whether every (state, symbol) pair has at least one successor.
    pub fn is_complete(&self) -> bool {
        self.succs
            .iter()
            .flatten()
            .all(|dsts| !dsts.is_empty())
    }

    /// Which states are reachable from the initial state (itself included).
    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.states.len()];
        let mut stack = vec![self.initial];
        seen[self.initial] = true;
        while let Some(p) = stack.pop() {
            for x in 0..self.alphabet.len() {
                for &q in self.successors(p, x) {
                    if !seen[q] {
                        seen[q] = true;
                        stack.push(q);
                    }
                }
            }
        }
        seen
    }

    /// Removes unreachable states while preserving the language under the
    /// given acceptance condition.
    ///
    /// The statistics of any run mention only reachable states, which
    /// licenses a per-condition table rewrite for the removed ones:
    ///
    /// * `run`/`inf`/`fin` with `⊓`: drop removed states from members, and
    ///   drop members this empties (an originally empty member is kept —
    ///   it was already unsatisfiable and harmless).
    /// * `run`/`inf`/`fin` with `⊆`: intersect members with the kept set.
    /// * `run`/`inf`/`fin` with `=`, and the `∃F ⊆ run`/`∃F ⊆ inf` named
    ///   readings: drop members containing a removed state (unsatisfiable).
    /// * `ninf` with `⊆`/`=`: a removed state lies in `ninf` of every run,
    ///   so members that omit one are unsatisfiable and are dropped;
    ///   surviving members are intersected with the kept set.
    /// * `ninf` with `⊓` and the `∃F ⊄ run`/`∃F ⊄ inf` named readings: a
    ///   member meeting the removed set is satisfied by *every* run. One
    ///   removed state is kept as a sentinel (never reachable, so always in
    ///   `ninf`, never in `run`); such members become
    ///   `(F ∩ kept) ∪ {sentinel}`. The sentinel is given a self-loop on
    ///   every symbol so completeness is preserved.
    ///
    /// Determinism and completeness of the input are preserved, and the
    /// result is index-canonical over the surviving states.
    pub fn trim_unreachable(&self, cond: &Condition) -> Automaton {
        let reach = self.reachable();
        if reach.iter().all(|&r| r) {
            return self.clone();
        }

        // Sentinel-style conditions: a member meeting the removed set is
        // satisfied unconditionally and must stay satisfiable after the
        // rewrite.
        let sentinel_style = matches!(
            cond,
            Condition::Pair(StatKind::Ninf, Rel::Meets)
                | Condition::Named(NamedCondition::APrime)
                | Condition::Named(NamedCondition::LPrime)
        );
        let member_meets_removed = |member: &BTreeSet<usize>| member.iter().any(|&q| !reach[q]);
        let sentinel: Option<usize> = if sentinel_style {
            // First state in canonical order that is removed and appears in
            // some member.
            (0..self.states.len())
                .find(|&q| !reach[q] && self.table.iter().any(|m| m.contains(&q)))
        } else {
            None
        };

        let keep: Vec<bool> = (0..self.states.len())
            .map(|q| reach[q] || Some(q) == sentinel)
            .collect();
        let mut new_index = vec![usize::MAX; self.states.len()];
        let mut states = Vec::new();
        for q in 0..self.states.len() {
            if keep[q] {
                new_index[q] = states.len();
                states.push(self.states[q].clone());
            }
        }

        let mut transitions: Vec<(usize, usize, usize)> = self
            .transitions
            .iter()
            .filter(|&&(p, _, q)| reach[p] && reach[q])
            .map(|&(p, x, q)| (new_index[p], x, new_index[q]))
            .collect();
        if let Some(s) = sentinel {
            for x in 0..self.alphabet.len() {
                transitions.push((new_index[s], x, new_index[s]));
            }
        }

        let remap = |member: &BTreeSet<usize>| -> BTreeSet<usize> {
            member
                .iter()
                .filter(|&&q| reach[q])
                .map(|&q| new_index[q])
                .collect()
        };

        let mut table: Vec<BTreeSet<usize>> = Vec::new();
        match cond {
            Condition::Pair(StatKind::Run | StatKind::Inf | StatKind::Fin, Rel::Meets) => {
                for member in &self.table {
                    let kept = remap(member);
                    if kept.is_empty() && !member.is_empty() {
                        continue;
                    }
                    table.push(kept);
                }
            }
            Condition::Pair(StatKind::Run | StatKind::Inf | StatKind::Fin, Rel::Subseteq) => {
                for member in &self.table {
                    table.push(remap(member));
                }
            }
            Condition::Pair(StatKind::Run | StatKind::Inf | StatKind::Fin, Rel::Eq)
            | Condition::Named(NamedCondition::A)
            | Condition::Named(NamedCondition::L) => {
                for member in &self.table {
                    if !member_meets_removed(member) {
                        table.push(remap(member));
                    }
                }
            }
            Condition::Pair(StatKind::Ninf, Rel::Subseteq | Rel::Eq) => {
                for member in &self.table {
                    // Unsatisfiable unless the member covers every removed
                    // state.
                    let covers_removed =
                        (0..self.states.len()).all(|q| reach[q] || member.contains(&q));
                    if covers_removed {
                        table.push(remap(member));
                    }
                }
            }
            Condition::Pair(StatKind::Ninf, Rel::Meets)
            | Condition::Named(NamedCondition::APrime)
            | Condition::Named(NamedCondition::LPrime) => {
                for member in &self.table {
                    let mut kept = remap(member);
                    if member_meets_removed(member) {
                        let s = sentinel.expect("sentinel exists when a member meets removed");
                        kept.insert(new_index[s]);
                    }
                    table.push(kept);
                }
            }
        }

        Automaton::from_indexed(
            self.alphabet.clone(),
            states,
            new_index[self.initial],
            transitions,
            table,
        )
    }
}

/// Naming scheme for constructed states.
///
/// Constructions form product states and annotated states; their names are
/// derived from the operand names so outputs stay readable:
///
/// * components are joined with '·' (e.g. pair state `p·q`),
/// * state sets render as `[a;b]` over the canonical member order
///   (braces and commas are reserved by the text format, so brackets and
///   semicolons are used),
/// * a fresh auxiliary state is named by appending `'` to a base name
///   until it avoids every taken name.
///
/// The scheme is injective whenever operand names avoid '·', '[', ']' and
/// ';'; adversarial names can collide, which surfaces as a duplicate-state
/// validation error rather than a silent merge.
pub(crate) mod naming {
    use std::collections::HashSet;

    /// Joins name components with '·'.
    pub(crate) fn dot_join(parts: &[&str]) -> String {
        parts.join("\u{b7}")
    }

    /// Renders a set of names as `[a;b]`, in the order given.
    pub(crate) fn set_name<'a>(parts: impl IntoIterator<Item = &'a str>) -> String {
        let mut out = String::from("[");
        for (i, p) in parts.into_iter().enumerate() {
            if i > 0 {
                out.push(';');
            }
            out.push_str(p);
        }
        out.push(']');
        out
    }

    /// Returns `base` with as many `'` appended as needed to avoid `taken`.
    pub(crate) fn fresh_name(base: &str, taken: &HashSet<&str>) -> String {
        let mut name = base.to_string();
        while taken.contains(name.as_str()) {
            name.push('\'');
        }
        name
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn token_rules() {
        assert!(Symbol::new("a").is_ok());
        assert!(Symbol::new("ab1").is_ok());
        assert!(Symbol::new("⊥").is_ok());
        assert!(Symbol::new("").is_err());
        assert!(Symbol::new("a b").is_err());
        assert!(Symbol::new("a{").is_err());
        assert!(Symbol::new("a}").is_err());
        assert!(Symbol::new("a:b").is_err());
        assert!(Symbol::new("a#").is_err());
        assert!(StateId::new("q0").is_ok());
        assert!(StateId::new("q 0").is_err());
    }

    #[test]
    fn validation_reports_all_defects() {
        let parts = AutomatonParts {
            alphabet: vec![Symbol::new("a").unwrap(), Symbol::new("a").unwrap()],
            states: vec![StateId::new("q").unwrap(), StateId::new("q").unwrap()],
            initial: StateId::new("r").unwrap(),
            transitions: vec![(
                StateId::new("q").unwrap(),
                Symbol::new("b").unwrap(),
                StateId::new("s").unwrap(),
            )],
            table: vec![BTreeSet::from([StateId::new("t").unwrap()])],
        };
        let violations = validate(&parts);
        assert!(violations.contains(&Violation::DuplicateSymbol("a".into())));
        assert!(violations.contains(&Violation::DuplicateState("q".into())));
        assert!(violations.contains(&Violation::UnknownInitial("r".into())));
        assert!(violations.contains(&Violation::UnknownTransitionSymbol("b".into())));
        assert!(violations.contains(&Violation::UnknownTransitionState("s".into())));
        assert!(violations.contains(&Violation::UnknownTableState("t".into())));
        assert!(Automaton::new(parts).is_err());
    }

    #[test]
    fn canonical_ordering() {
        let a = Automaton::build(
            &["a", "b"],
            &["q0", "q1"],
            "q0",
            &[
                ("q1", "b", "q0"),
                ("q0", "a", "q1"),
                ("q0", "a", "q1"), // duplicate collapses
                ("q0", "b", "q0"),
            ],
            &[&["q1", "q0"], &[], &["q1"]],
        )
        .unwrap();
        assert_eq!(a.transitions(), &[(0, 0, 1), (0, 1, 0), (1, 1, 0)]);
        // Table sorted lexicographically by index sequence; ∅ first.
        assert_eq!(
            a.table(),
            &[
                BTreeSet::new(),
                BTreeSet::from([0, 1]),
                BTreeSet::from([1])
            ]
        );
        assert!(a.is_deterministic());
        assert!(!a.is_complete());
    }

    #[test]
    fn determinism_and_completeness() {
        let complete = Automaton::build(
            &["a"],
            &["p", "q"],
            "p",
            &[("p", "a", "q"), ("q", "a", "q")],
            &[],
        )
        .unwrap();
        assert!(complete.is_deterministic() && complete.is_complete());

        let nondet = Automaton::build(
            &["a"],
            &["p", "q"],
            "p",
            &[("p", "a", "q"), ("p", "a", "p"), ("q", "a", "q")],
            &[],
        )
        .unwrap();
        assert!(!nondet.is_deterministic() && nondet.is_complete());
    }

    #[test]
    fn reachability() {
        let a = Automaton::build(
            &["a"],
            &["p", "q", "r"],
            "p",
            &[("p", "a", "p"), ("q", "a", "r")],
            &[],
        )
        .unwrap();
        assert_eq!(a.reachable(), vec![true, false, false]);
    }

    #[test]
    fn fresh_names_and_set_names() {
        let taken: std::collections::HashSet<&str> = ["⊥", "⊥'"].into_iter().collect();
        assert_eq!(naming::fresh_name("⊥", &taken), "⊥''");
        assert_eq!(naming::fresh_name("x", &taken), "x");
        assert_eq!(naming::set_name(["a", "b"]), "[a;b]");
        assert_eq!(naming::set_name([]), "[]");
        assert_eq!(naming::dot_join(&["p", "[a]"]), "p·[a]");
    }
}
