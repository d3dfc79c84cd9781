//! Monadic second-order formulas over ω-words, and the translation of an
//! automaton under a parameterized condition into an equivalent sentence.
//!
//! An ω-word is viewed as the structure with domain the positions, the
//! successor relation `S`, the order `<`, and one letter predicate per
//! alphabet symbol.  A run is encoded by one second-order variable `X_q`
//! per state holding the positions where the run sits in `q` (position 0
//! carries the initial state).  The sentence produced by
//! [`automaton_formula`] existentially quantifies these sets and asserts
//! four things: the sets are pairwise disjoint, consecutive positions are
//! linked by a transition reading the letter in between, position 0 (the
//! position without predecessor) carries the initial state, and the path
//! statistic of the run relates to the acceptance table as the condition
//! demands.
//!
//! The statistic of a single state is definable from its occurrence set:
//! [`c_formula`] produces, for each statistic kind, the formula stating
//! that a state with occurrence set `X` belongs to the statistic.  The
//! index-0 exclusion of the statistics shows up as the "has a predecessor"
//! guard in the `run` formula.  [`cond_formula`] then spells out the
//! relation against the table member-by-member on top of those per-state
//! formulas.
//!
//! Formulas render to a stable s-expression syntax via
//! [`Formula::render`]; empty conjunctions and disjunctions render as
//! `(and)` (true) and `(or)` (false).

use crate::automaton::Automaton;
use crate::error::{Error, Result};
use crate::semantics::{Condition, Rel, StatKind};
use std::collections::BTreeSet;

/// A monadic second-order formula over ω-word structures.
///
/// First-order variables range over positions, second-order variables over
/// position sets; the two sorts live in one name space and are kept apart
/// by convention (`x`, `y` versus `X_…`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    /// Equality of two positions.
    FOEq(String, String),
    /// `S(x, y)`: position `y` is the successor of position `x`.
    Succ(String, String),
    /// `x < y` in the position order.
    Lt(String, String),
    /// The letter at a position: `Letter(a, x)` says position `x` carries
    /// symbol `a`.
    Letter(String, String),
    /// `SetMem(X, x)`: position `x` belongs to set `X`.
    SetMem(String, String),
    /// Negation.
    Not(Box<Formula>),
    /// Conjunction; empty renders as `(and)` and is true.
    And(Vec<Formula>),
    /// Disjunction; empty renders as `(or)` and is false.
    Or(Vec<Formula>),
    /// Implication.
    Implies(Box<Formula>, Box<Formula>),
    /// First-order existential quantifier.
    ExistsFO(String, Box<Formula>),
    /// First-order universal quantifier.
    ForallFO(String, Box<Formula>),
    /// Second-order existential quantifier.
    ExistsSO(String, Box<Formula>),
    /// Second-order universal quantifier.
    ForallSO(String, Box<Formula>),
}

impl Formula {
    /// Renders the formula as a stable s-expression.
    ///
    /// Tokens: `exists1`/`forall1` and `exists2`/`forall2` for the two
    /// quantifier sorts, `and`/`or`/`not`/`->` for the connectives, and
    /// `=`/`S`/`<`/`letter`/`in` for the atoms.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out);
        out
    }

    fn render_into(&self, out: &mut String) {
        match self {
            Formula::FOEq(x, y) => *out += &format!("(= {x} {y})"),
            Formula::Succ(x, y) => *out += &format!("(S {x} {y})"),
            Formula::Lt(x, y) => *out += &format!("(< {x} {y})"),
            Formula::Letter(a, x) => *out += &format!("(letter {a} {x})"),
            Formula::SetMem(set, x) => *out += &format!("(in {set} {x})"),
            Formula::Not(f) => {
                out.push_str("(not ");
                f.render_into(out);
                out.push(')');
            }
            Formula::And(fs) | Formula::Or(fs) => {
                out.push('(');
                out.push_str(if matches!(self, Formula::And(_)) {
                    "and"
                } else {
                    "or"
                });
                for f in fs {
                    out.push(' ');
                    f.render_into(out);
                }
                out.push(')');
            }
            Formula::Implies(f, g) => {
                out.push_str("(-> ");
                f.render_into(out);
                out.push(' ');
                g.render_into(out);
                out.push(')');
            }
            Formula::ExistsFO(v, f)
            | Formula::ForallFO(v, f)
            | Formula::ExistsSO(v, f)
            | Formula::ForallSO(v, f) => {
                let head = match self {
                    Formula::ExistsFO(..) => "exists1",
                    Formula::ForallFO(..) => "forall1",
                    Formula::ExistsSO(..) => "exists2",
                    _ => "forall2",
                };
                *out += &format!("({head} {v} ");
                f.render_into(out);
                out.push(')');
            }
        }
    }

    /// The free variables of both sorts.
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut free = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut free);
        free
    }

    fn collect_free(&self, bound: &mut Vec<String>, free: &mut BTreeSet<String>) {
        let record = |v: &String, bound: &[String], free: &mut BTreeSet<String>| {
            if !bound.contains(v) {
                free.insert(v.clone());
            }
        };
        match self {
            Formula::FOEq(x, y) | Formula::Succ(x, y) | Formula::Lt(x, y) => {
                record(x, bound, free);
                record(y, bound, free);
            }
            // The symbol of a letter atom is not a variable.
            Formula::Letter(_, x) => record(x, bound, free),
            Formula::SetMem(set, x) => {
                record(set, bound, free);
                record(x, bound, free);
            }
            Formula::Not(f) => f.collect_free(bound, free),
            Formula::And(fs) | Formula::Or(fs) => {
                for f in fs {
                    f.collect_free(bound, free);
                }
            }
            Formula::Implies(f, g) => {
                f.collect_free(bound, free);
                g.collect_free(bound, free);
            }
            Formula::ExistsFO(v, f)
            | Formula::ForallFO(v, f)
            | Formula::ExistsSO(v, f)
            | Formula::ForallSO(v, f) => {
                bound.push(v.clone());
                f.collect_free(bound, free);
                bound.pop();
            }
        }
    }
}

impl std::fmt::Display for Formula {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

/// The formula stating that the state with occurrence set `set_var`
/// belongs to the given path statistic.
///
/// * `run`: some position with a predecessor lies in the set (the
///   predecessor guard excludes position 0 from the statistic);
/// * `inf`: beyond every position lies a position in the set;
/// * `fin`: in the run but not infinitely often;
/// * `ninf`: not infinitely often.
pub fn c_formula(kind: StatKind, set_var: &str) -> Formula {
    let x = || "x".to_string();
    let y = || "y".to_string();
    match kind {
        StatKind::Run => Formula::ExistsFO(
            x(),
            Box::new(Formula::And(vec![
                Formula::ExistsFO(y(), Box::new(Formula::Succ(y(), x()))),
                Formula::SetMem(set_var.to_string(), x()),
            ])),
        ),
        StatKind::Inf => Formula::ForallFO(
            x(),
            Box::new(Formula::ExistsFO(
                y(),
                Box::new(Formula::And(vec![
                    Formula::Lt(x(), y()),
                    Formula::SetMem(set_var.to_string(), y()),
                ])),
            )),
        ),
        StatKind::Fin => Formula::And(vec![
            c_formula(StatKind::Run, set_var),
            Formula::Not(Box::new(c_formula(StatKind::Inf, set_var))),
        ]),
        StatKind::Ninf => Formula::Not(Box::new(c_formula(StatKind::Inf, set_var))),
    }
}

/// The acceptance part of a sentence: some table member relates to the
/// path statistic as `rel` demands, spelled out member-by-member on top of
/// the per-state statistic formulas.
///
/// `state_vars` holds the occurrence-set variable of each state by index;
/// `table` holds the members as index sets.  Meets becomes a disjunction
/// over the member's states, containment a conjunction of negations over
/// the states outside the member, and equality the conjunction of both
/// directions.
pub fn cond_formula(
    kind: StatKind,
    rel: Rel,
    table: &[BTreeSet<usize>],
    state_vars: &[String],
) -> Formula {
    let holds = |q: usize| c_formula(kind, &state_vars[q]);
    let absent = |q: usize| Formula::Not(Box::new(c_formula(kind, &state_vars[q])));
    let members = table.iter().map(|member| match rel {
        Rel::Meets => Formula::Or(member.iter().map(|&q| holds(q)).collect()),
        Rel::Subseteq => Formula::And(
            (0..state_vars.len())
                .filter(|q| !member.contains(q))
                .map(absent)
                .collect(),
        ),
        Rel::Eq => Formula::And(vec![
            Formula::And(member.iter().map(|&q| holds(q)).collect()),
            Formula::And(
                (0..state_vars.len())
                    .filter(|q| !member.contains(q))
                    .map(absent)
                    .collect(),
            ),
        ]),
    });
    Formula::Or(members.collect())
}

/// Translates an automaton under a parameterized condition into a closed
/// formula holding exactly on the accepted ω-words.
///
/// Named conditions are rejected; rewrite them to parameterized form
/// first.  The sentence existentially quantifies one occurrence set per
/// state in declaration order and asserts disjointness (over all ordered
/// pairs of distinct states), the transition discipline, the initial
/// state at the predecessor-less position, and the acceptance condition.
pub fn automaton_formula(a: &Automaton, cond: &Condition) -> Result<Formula> {
    let Condition::Pair(kind, rel) = cond else {
        return Err(Error::unsupported(
            "automaton-formula",
            format!("named condition {cond} must be rewritten to parameterized form first"),
        ));
    };
    let n = a.state_count();
    let vars: Vec<String> = (0..n).map(|q| format!("X_{}", a.state(q).as_str())).collect();
    let x = || "x".to_string();
    let y = || "y".to_string();

    let mut disjoint = Vec::new();
    for p in 0..n {
        for q in 0..n {
            if p != q {
                disjoint.push(Formula::Not(Box::new(Formula::ExistsFO(
                    x(),
                    Box::new(Formula::And(vec![
                        Formula::SetMem(vars[p].clone(), x()),
                        Formula::SetMem(vars[q].clone(), x()),
                    ])),
                ))));
            }
        }
    }
    let disjointness = Formula::And(disjoint);

    let steps = a
        .transitions()
        .iter()
        .map(|&(p, sym, q)| {
            Formula::And(vec![
                Formula::SetMem(vars[p].clone(), x()),
                Formula::Letter(a.alphabet().symbol(sym).as_str().to_string(), x()),
                Formula::SetMem(vars[q].clone(), y()),
            ])
        })
        .collect();
    let transition = Formula::ForallFO(
        x(),
        Box::new(Formula::ForallFO(
            y(),
            Box::new(Formula::Implies(
                Box::new(Formula::Succ(x(), y())),
                Box::new(Formula::Or(steps)),
            )),
        )),
    );

    let initial = Formula::ExistsFO(
        x(),
        Box::new(Formula::And(vec![
            Formula::Not(Box::new(Formula::ExistsFO(
                y(),
                Box::new(Formula::Succ(y(), x())),
            ))),
            Formula::SetMem(vars[a.initial()].clone(), x()),
        ])),
    );

    let acceptance = cond_formula(*kind, *rel, a.table(), &vars);

    let mut body = Formula::And(vec![disjointness, transition, initial, acceptance]);
    for var in vars.into_iter().rev() {
        body = Formula::ExistsSO(var, Box::new(body));
    }
    Ok(body)
}
