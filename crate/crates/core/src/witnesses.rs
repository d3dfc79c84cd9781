//! A fixed catalogue of small example automata (`fig2`–`fig5`) paired with
//! directly-implemented predicates for the ω-languages they recognize, plus
//! an exhaustive bounded cross-check between the two.
//!
//! Each figure is a hard-coded automaton over `{a, b}` together with the
//! acceptance condition it is meant to be read under.  The matching language
//! is described by an independent predicate on canonical lasso words, so
//! [`verify_figure`] can compare automaton membership (decided by the
//! semantics oracle) against the predicate on every canonical lasso within
//! given bounds.  The pairing is `fig2 ↔ L1`, `fig3 ↔ L2`, `fig4 ↔ L4`,
//! `fig5 ↔ L5`; `L3` has no figure and is kept for documentation tests.

use crate::automaton::Automaton;
use crate::error::{Error, Result};
use crate::semantics::{accepts, Condition, NamedCondition, OracleGuard, Rel, StatKind};
use crate::words::{enumerate, LassoWord};
use std::fmt;

/// Identifier for one of the four hard-coded example automata.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigureId {
    /// Two-state complete DFA for `(a+b)*a^ω` under `Lprime`.
    Fig2,
    /// Three-state incomplete DFA for `ab*a(a+b)^ω` under `Lprime`.
    Fig3,
    /// Two-state complete nondeterministic automaton for `(a+b)*ba^ω`
    /// under `Lprime`.
    Fig4,
    /// Six-state complete DFA for `a(a*b)^ω + b(a+b)*a^ω` under `(fin, =)`.
    Fig5,
}

impl FigureId {
    /// All figures, in catalogue order.
    pub const ALL: [FigureId; 4] = [
        FigureId::Fig2,
        FigureId::Fig3,
        FigureId::Fig4,
        FigureId::Fig5,
    ];

    /// The stable textual identifier (`fig2` … `fig5`).
    pub fn token(self) -> &'static str {
        match self {
            FigureId::Fig2 => "fig2",
            FigureId::Fig3 => "fig3",
            FigureId::Fig4 => "fig4",
            FigureId::Fig5 => "fig5",
        }
    }

    /// Parses a figure identifier token.
    pub fn parse(token: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.token() == token)
            .ok_or_else(|| Error::BadToken {
                token: token.to_string(),
                reason: "expected one of fig2, fig3, fig4, fig5".to_string(),
            })
    }

    /// The language this figure recognizes under its condition.
    pub fn language(self) -> LanguageId {
        match self {
            FigureId::Fig2 => LanguageId::L1,
            FigureId::Fig3 => LanguageId::L2,
            FigureId::Fig4 => LanguageId::L4,
            FigureId::Fig5 => LanguageId::L5,
        }
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Identifier for one of the five separation languages over `{a, b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LanguageId {
    /// `(a+b)*a^ω` — eventually only `a`.
    L1,
    /// `ab*a(a+b)^ω` — starts with `a`, then `b`s until a second `a`.
    L2,
    /// `b*ab*a(a+b)^ω` — at least two `a`s overall.
    L3,
    /// `(a+b)*ba^ω` — eventually only `a`, with at least one `b` before.
    L4,
    /// `a(a*b)^ω + b(a+b)*a^ω` — starts `a` with infinitely many `b`s, or
    /// starts `b` and is eventually only `a`.
    L5,
}

impl LanguageId {
    /// All languages, in catalogue order.
    pub const ALL: [LanguageId; 5] = [
        LanguageId::L1,
        LanguageId::L2,
        LanguageId::L3,
        LanguageId::L4,
        LanguageId::L5,
    ];

    /// The stable textual identifier (`L1` … `L5`).
    pub fn token(self) -> &'static str {
        match self {
            LanguageId::L1 => "L1",
            LanguageId::L2 => "L2",
            LanguageId::L3 => "L3",
            LanguageId::L4 => "L4",
            LanguageId::L5 => "L5",
        }
    }

    /// A human-readable regular-expression description.
    pub fn description(self) -> &'static str {
        match self {
            LanguageId::L1 => "(a+b)*a^w",
            LanguageId::L2 => "ab*a(a+b)^w",
            LanguageId::L3 => "b*ab*a(a+b)^w",
            LanguageId::L4 => "(a+b)*ba^w",
            LanguageId::L5 => "a(a*b)^w + b(a+b)*a^w",
        }
    }

    /// Decides membership of a canonical lasso word in this language.
    ///
    /// Only the symbols `a` and `b` are meaningful; any other symbol in the
    /// word is an error.  Every scan below is bounded:
    ///
    /// * `L1`, `L4`, `L5` inspect the stem and cycle letter lists directly
    ///   (a lasso is eventually only `a` iff its cycle is, and contains
    ///   infinitely many `b`s iff its cycle contains one);
    /// * `L2` scans positions `1 ..= |stem|+|cycle|` for the first non-`b`
    ///   letter — sufficient because the letter sequence is periodic from
    ///   index `|stem|` on, so if every letter in that window is `b`, all
    ///   later letters are `b` too.
    pub fn predicate(self, w: &LassoWord) -> Result<bool> {
        let letter = |i: usize| -> Result<bool> {
            match w.letter_at(i).as_str() {
                "a" => Ok(true),
                "b" => Ok(false),
                other => Err(Error::Word(format!(
                    "language predicates are defined over {{a, b}}; found symbol '{other}'"
                ))),
            }
        };
        // Validate every distinct letter up front so the error does not
        // depend on which clause short-circuits.
        for s in w.stem().iter().chain(w.cycle()) {
            if !matches!(s.as_str(), "a" | "b") {
                return Err(Error::Word(format!(
                    "language predicates are defined over {{a, b}}; found symbol '{}'",
                    s.as_str()
                )));
            }
        }
        let cycle_all_a = w.cycle().iter().all(|s| s.as_str() == "a");
        let cycle_has_b = !cycle_all_a;
        let stem_a_count = w.stem().iter().filter(|s| s.as_str() == "a").count();
        let stem_has_b = w.stem().iter().any(|s| s.as_str() == "b");
        let cycle_has_a = w.cycle().iter().any(|s| s.as_str() == "a");
        Ok(match self {
            LanguageId::L1 => cycle_all_a,
            LanguageId::L2 => {
                // First letter `a`, then `b`s until some later `a`.
                if !letter(0)? {
                    return Ok(false);
                }
                let bound = w.total_len();
                (1..=bound).any(|i| letter(i).expect("validated above"))
            }
            // At least two `a`s overall: an `a` in the cycle occurs
            // infinitely often, otherwise both must come from the stem.
            LanguageId::L3 => cycle_has_a || stem_a_count >= 2,
            LanguageId::L4 => cycle_all_a && stem_has_b,
            LanguageId::L5 => {
                let first_is_a = letter(0)?;
                (first_is_a && cycle_has_b) || (!first_is_a && cycle_all_a)
            }
        })
    }
}

impl fmt::Display for LanguageId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Returns the hard-coded automaton for a figure together with the
/// acceptance condition it is read under.
pub fn figure_automaton(id: FigureId) -> (Automaton, Condition) {
    let lprime = Condition::Named(NamedCondition::LPrime);
    match id {
        FigureId::Fig2 => (
            Automaton::build(
                &["a", "b"],
                &["q0", "q1"],
                "q0",
                &[
                    ("q0", "a", "q0"),
                    ("q0", "b", "q1"),
                    ("q1", "a", "q0"),
                    ("q1", "b", "q1"),
                ],
                &[&["q1"]],
            )
            .expect("fig2 is statically valid"),
            lprime,
        ),
        FigureId::Fig3 => (
            Automaton::build(
                &["a", "b"],
                &["q0", "q1", "q2"],
                "q0",
                &[
                    ("q0", "a", "q1"),
                    ("q1", "b", "q1"),
                    ("q1", "a", "q2"),
                    ("q2", "a", "q2"),
                    ("q2", "b", "q2"),
                ],
                &[&["q1"]],
            )
            .expect("fig3 is statically valid"),
            lprime,
        ),
        FigureId::Fig4 => (
            Automaton::build(
                &["a", "b"],
                &["q0", "q1"],
                "q0",
                &[
                    ("q0", "a", "q0"),
                    ("q0", "b", "q0"),
                    ("q0", "b", "q1"),
                    ("q1", "b", "q0"),
                    ("q1", "a", "q1"),
                ],
                &[&["q0"]],
            )
            .expect("fig4 is statically valid"),
            lprime,
        ),
        FigureId::Fig5 => (
            Automaton::build(
                &["a", "b"],
                &["q0", "q1", "q2", "q3", "q4", "q5"],
                "q0",
                &[
                    ("q0", "a", "q1"),
                    ("q0", "b", "q3"),
                    ("q1", "a", "q2"),
                    ("q1", "b", "q1"),
                    ("q2", "a", "q2"),
                    ("q2", "b", "q1"),
                    ("q3", "a", "q4"),
                    ("q3", "b", "q4"),
                    ("q4", "a", "q5"),
                    ("q4", "b", "q4"),
                    ("q5", "a", "q5"),
                    ("q5", "b", "q4"),
                ],
                &[&[], &["q2"], &["q3", "q4"]],
            )
            .expect("fig5 is statically valid"),
            Condition::Pair(StatKind::Fin, Rel::Eq),
        ),
    }
}

/// Outcome of [`verify_figure`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FigureCheck {
    /// Automaton membership and predicate agreed on every word checked.
    Equal,
    /// The first word (in enumeration order) where the two sides disagree.
    Counterexample {
        /// The disagreeing word.
        word: LassoWord,
        /// Whether the figure automaton accepts it under its condition.
        automaton_accepts: bool,
        /// Whether the language predicate holds for it.
        predicate_accepts: bool,
    },
}

/// Checks the figure automaton against its language predicate on every
/// canonical lasso word with `|stem| ≤ stem_max` and `|cycle| ≤ cycle_max`.
///
/// Membership on the automaton side is decided by the semantics oracle
/// ([`accepts`]), not by any derived fast path, so this doubles as an
/// end-to-end oracle exercise.  Returns the first disagreement in
/// enumeration order, if any.
pub fn verify_figure(id: FigureId, stem_max: usize, cycle_max: usize) -> Result<FigureCheck> {
    let (a, cond) = figure_automaton(id);
    let lang = id.language();
    let guard = OracleGuard::default();
    for word in enumerate(a.alphabet(), stem_max, cycle_max) {
        let automaton_accepts = accepts(&a, &cond, &word, &guard)?;
        let predicate_accepts = lang.predicate(&word)?;
        if automaton_accepts != predicate_accepts {
            return Ok(FigureCheck::Counterexample {
                word,
                automaton_accepts,
                predicate_accepts,
            });
        }
    }
    Ok(FigureCheck::Equal)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn captions_determinism_and_completeness() {
        let (fig2, c2) = figure_automaton(FigureId::Fig2);
        assert_eq!(fig2.state_count(), 2);
        assert!(fig2.is_deterministic() && fig2.is_complete());
        assert_eq!(c2, Condition::Named(NamedCondition::LPrime));
        assert_eq!(fig2.table(), &[[1usize].into()]);

        let (fig3, _) = figure_automaton(FigureId::Fig3);
        assert_eq!(fig3.state_count(), 3);
        assert!(fig3.is_deterministic() && !fig3.is_complete());

        let (fig4, _) = figure_automaton(FigureId::Fig4);
        assert!(!fig4.is_deterministic() && fig4.is_complete());

        let (fig5, c5) = figure_automaton(FigureId::Fig5);
        assert_eq!(fig5.state_count(), 6);
        assert!(fig5.is_deterministic() && fig5.is_complete());
        assert_eq!(c5, Condition::Pair(StatKind::Fin, Rel::Eq));
        assert_eq!(
            fig5.table(),
            &[[].into(), [2usize].into(), [3usize, 4].into()]
                as &[std::collections::BTreeSet<usize>]
        );
    }

    fn word(text: &str) -> LassoWord {
        let alphabet = crate::automaton::Alphabet::parse(&["a", "b"]).unwrap();
        LassoWord::parse(text, &alphabet).unwrap()
    }

    #[test]
    fn predicate_spot_checks() {
        assert!(LanguageId::L1.predicate(&word(":a")).unwrap());
        assert!(LanguageId::L1.predicate(&word("ab:a")).unwrap());
        assert!(!LanguageId::L1.predicate(&word(":ba")).unwrap());

        assert!(LanguageId::L2.predicate(&word("a:a")).unwrap());
        assert!(LanguageId::L2.predicate(&word("abba:b")).unwrap());
        assert!(!LanguageId::L2.predicate(&word("a:b")).unwrap());
        assert!(!LanguageId::L2.predicate(&word(":b")).unwrap());

        assert!(!LanguageId::L4.predicate(&word(":a")).unwrap());
        assert!(LanguageId::L4.predicate(&word("b:a")).unwrap());

        assert!(LanguageId::L5.predicate(&word("b:a")).unwrap());
        assert!(LanguageId::L5.predicate(&word("a:b")).unwrap());
        assert!(!LanguageId::L5.predicate(&word(":b")).unwrap());
    }

    #[test]
    fn predicates_reject_foreign_symbols() {
        let alphabet = crate::automaton::Alphabet::parse(&["c"]).unwrap();
        let w = LassoWord::parse(":c", &alphabet).unwrap();
        for lang in LanguageId::ALL {
            assert!(lang.predicate(&w).is_err(), "{lang} accepted symbol c");
        }
    }

    #[test]
    fn l3_strictly_contains_l2_on_bounded_words() {
        let alphabet = crate::automaton::Alphabet::parse(&["a", "b"]).unwrap();
        let mut strict = false;
        for w in enumerate(&alphabet, 3, 3) {
            let in2 = LanguageId::L2.predicate(&w).unwrap();
            let in3 = LanguageId::L3.predicate(&w).unwrap();
            assert!(!in2 || in3, "L2 word {w} missing from L3");
            strict |= in3 && !in2;
        }
        assert!(strict, "no word separated L3 from L2");
    }

    #[test]
    fn all_figures_verify_at_4_4() {
        for id in FigureId::ALL {
            assert_eq!(
                verify_figure(id, 4, 4).unwrap(),
                FigureCheck::Equal,
                "figure {id} disagreed with {}",
                id.language()
            );
        }
    }

    #[test]
    fn figure_ids_round_trip() {
        for id in FigureId::ALL {
            assert_eq!(FigureId::parse(id.token()).unwrap(), id);
        }
        assert!(FigureId::parse("fig6").is_err());
    }
}
