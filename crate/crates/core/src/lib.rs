//! Finite automata on infinite words under parameterized acceptance.
//!
//! The same automaton — alphabet, states, transitions, and an acceptance
//! table of state subsets — denotes different ω-languages depending on how
//! the table is read. This crate makes the reading a first-class value
//! ([`Condition`]): one of twelve (statistic, relation) pairs built from
//! the run statistics `run`/`inf`/`fin`/`ninf` and the relations
//! `⊓`/`⊆`/`=`, or one of four named subset readings (`A`, `Aprime`, `L`,
//! `Lprime`).
//!
//! On top of the representation the crate provides:
//!
//! * exact membership for ultimately periodic words via a run-statistics
//!   oracle ([`semantics`]),
//! * language-preserving rewrites between conditions ([`transforms`]),
//! * compilation of any condition to an equivalent automaton in Büchi
//!   form, plus emptiness with witnesses and bounded equivalence
//!   ([`buchi`]),
//! * emission of defining monadic second-order formulas ([`mso`]),
//! * reference automata and languages with a bounded verifier
//!   ([`witnesses`]),
//! * a canonical text format ([`format`]).

#![warn(missing_docs)]

pub mod automaton;
pub mod buchi;
mod bits;
pub mod error;
pub mod format;
pub mod mso;
pub mod semantics;
pub mod transforms;
pub mod witnesses;
pub mod words;

pub use automaton::{Alphabet, Automaton, AutomatonParts, StateId, Symbol, Violation};
pub use buchi::{
    bounded_equiv, condition_to_muller, is_empty, muller_to_buchi, to_buchi, BoundedOutcome,
    EmptinessReport, MullerTable,
};
pub use error::{Error, Result};
pub use format::AutomatonDocument;
pub use mso::{automaton_formula, c_formula, cond_formula, Formula};
pub use semantics::{
    accepts, accepts_routed, condition_holds, run_summaries, stat_of, Condition, NamedCondition,
    OracleGuard, Rel, RunSummary, StatKind,
};
pub use transforms::{
    expr_accepts, LanguageExpr, SizeGuard, TransformKind, TransformOutput,
};
pub use witnesses::{figure_automaton, verify_figure, FigureCheck, FigureId, LanguageId};
pub use words::{enumerate, is_canonical, normalize, LassoWord};
