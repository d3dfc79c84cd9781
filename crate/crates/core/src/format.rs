//! The `.oaut` text format: parsing and canonical serialization of an
//! automaton together with the condition it is read under.
//!
//! A document is a sequence of lines.  `#` starts a comment reaching the
//! end of the line; blank (or comment-only) lines are ignored.  The
//! remaining lines are directives:
//!
//! ```text
//! alphabet a b          # declared symbols, in order; must come first
//! state q0 init         # one state per line; exactly one carries `init`
//! state q1
//! trans q0 a q1         # source, symbol, target
//! table {q1} {q0,q1}    # acceptance sets; `table -` declares no sets
//! cond fin eq           # statistic + relation, or a named condition
//! ```
//!
//! The `alphabet` directive must be the first directive and appear exactly
//! once; `cond` appears exactly once; at least one `table` directive is
//! required, with several accumulating their sets.  A set is written
//! `{name,name,…}` without spaces — `{}` is the empty set, which is
//! different from `table -` (no sets at all).  Lexical problems are
//! reported with 1-based line and column; structural problems (unknown or
//! duplicate states, nondeclared symbols) come from automaton validation
//! and carry no position.
//!
//! Serialization is canonical: declared alphabet order, states in
//! automaton order with `init` on the initial one, transitions in the
//! automaton's sorted order, one `table` line whose sets list their state
//! names in lexicographic order and are themselves ordered
//! lexicographically (`-` for an empty table), the `cond` line last, and
//! exactly one trailing newline.  Parsing a serialized document yields the
//! document back.

use crate::automaton::{Automaton, AutomatonParts, StateId, Symbol};
use crate::error::{Error, Result};
use crate::semantics::Condition;
use std::collections::BTreeSet;

/// An automaton paired with the condition it is read under — the content
/// of one `.oaut` document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomatonDocument {
    /// The automaton.
    pub automaton: Automaton,
    /// The condition the automaton is read under.
    pub condition: Condition,
}

/// One whitespace-separated token with its 1-based character column.
fn tokens_of(line: &str) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut start = 0;
    for (i, ch) in line.chars().enumerate() {
        if ch == '#' {
            break;
        }
        if ch.is_whitespace() {
            if !current.is_empty() {
                out.push((start, std::mem::take(&mut current)));
            }
        } else {
            if current.is_empty() {
                start = i + 1;
            }
            current.push(ch);
        }
    }
    if !current.is_empty() {
        out.push((start, current));
    }
    out
}

/// Parses one `{name,…}` set token into state names.
fn parse_set(line: usize, col: usize, token: &str) -> Result<Vec<String>> {
    let inner = token
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| {
            Error::parse_at(
                line,
                col,
                format!("expected a set like {{q0,q1}} or {{}}, got `{token}`"),
            )
        })?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|name| {
            if name.is_empty() {
                Err(Error::parse_at(line, col, "empty name in set"))
            } else {
                Ok(name.to_string())
            }
        })
        .collect()
}

impl AutomatonDocument {
    /// Parses a document from its text form.
    pub fn parse(text: &str) -> Result<Self> {
        let mut alphabet: Option<Vec<Symbol>> = None;
        let mut states: Vec<StateId> = Vec::new();
        let mut initial: Option<StateId> = None;
        let mut transitions: Vec<(StateId, Symbol, StateId)> = Vec::new();
        let mut table: Option<Vec<BTreeSet<StateId>>> = None;
        let mut condition: Option<Condition> = None;
        let mut line_count = 0;

        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            line_count = line;
            let tokens = tokens_of(raw);
            let Some((head_col, head)) = tokens.first() else {
                continue;
            };
            let args = &tokens[1..];
            if alphabet.is_none() && head != "alphabet" {
                return Err(Error::parse_at(
                    line,
                    *head_col,
                    "the alphabet declaration must come first",
                ));
            }
            match head.as_str() {
                "alphabet" => {
                    if alphabet.is_some() {
                        return Err(Error::parse_at(
                            line,
                            *head_col,
                            "duplicate alphabet declaration",
                        ));
                    }
                    if args.is_empty() {
                        return Err(Error::parse_at(
                            line,
                            *head_col,
                            "alphabet needs at least one symbol",
                        ));
                    }
                    let symbols = args
                        .iter()
                        .map(|(col, tok)| {
                            Symbol::new(tok.clone())
                                .map_err(|e| Error::parse_at(line, *col, e.to_string()))
                        })
                        .collect::<Result<Vec<Symbol>>>()?;
                    alphabet = Some(symbols);
                }
                "state" => {
                    let (name_col, name) = args.first().ok_or_else(|| {
                        Error::parse_at(line, *head_col, "state needs a name")
                    })?;
                    let id = StateId::new(name.clone())
                        .map_err(|e| Error::parse_at(line, *name_col, e.to_string()))?;
                    match args.get(1) {
                        None => {}
                        Some((col, marker)) if marker == "init" && args.len() == 2 => {
                            if initial.is_some() {
                                return Err(Error::parse_at(
                                    line,
                                    *col,
                                    "a second state is marked init",
                                ));
                            }
                            initial = Some(id.clone());
                        }
                        Some((col, other)) => {
                            return Err(Error::parse_at(
                                line,
                                *col,
                                format!("unexpected `{other}` after state name (only `init` is allowed)"),
                            ));
                        }
                    }
                    states.push(id);
                }
                "trans" => {
                    let [(c1, src), (c2, sym), (c3, dst)] = args else {
                        return Err(Error::parse_at(
                            line,
                            *head_col,
                            "trans expects source, symbol, and target",
                        ));
                    };
                    let src = StateId::new(src.clone())
                        .map_err(|e| Error::parse_at(line, *c1, e.to_string()))?;
                    let sym = Symbol::new(sym.clone())
                        .map_err(|e| Error::parse_at(line, *c2, e.to_string()))?;
                    let dst = StateId::new(dst.clone())
                        .map_err(|e| Error::parse_at(line, *c3, e.to_string()))?;
                    transitions.push((src, sym, dst));
                }
                "table" => {
                    let members = table.get_or_insert_with(Vec::new);
                    if args.is_empty() {
                        return Err(Error::parse_at(
                            line,
                            *head_col,
                            "table needs sets, or `-` for none",
                        ));
                    }
                    if args.len() == 1 && args[0].1 == "-" {
                        continue;
                    }
                    for (col, token) in args {
                        if token == "-" {
                            return Err(Error::parse_at(
                                line,
                                *col,
                                "`-` stands alone on its table line",
                            ));
                        }
                        let names = parse_set(line, *col, token)?;
                        let member = names
                            .into_iter()
                            .map(|name| {
                                StateId::new(name)
                                    .map_err(|e| Error::parse_at(line, *col, e.to_string()))
                            })
                            .collect::<Result<BTreeSet<StateId>>>()?;
                        members.push(member);
                    }
                }
                "cond" => {
                    if condition.is_some() {
                        return Err(Error::parse_at(
                            line,
                            *head_col,
                            "duplicate cond declaration",
                        ));
                    }
                    if args.is_empty() {
                        return Err(Error::parse_at(line, *head_col, "cond needs a condition"));
                    }
                    let words: Vec<&str> = args.iter().map(|(_, t)| t.as_str()).collect();
                    let cond = Condition::parse_tokens(&words)
                        .map_err(|e| Error::parse_at(line, args[0].0, e.to_string()))?;
                    condition = Some(cond);
                }
                other => {
                    return Err(Error::parse_at(
                        line,
                        *head_col,
                        format!("unknown directive `{other}`"),
                    ));
                }
            }
        }

        let end = line_count + 1;
        let missing = |what: &str| Error::parse_at(end, 1, format!("missing {what}"));
        let alphabet = alphabet.ok_or_else(|| missing("alphabet declaration"))?;
        let initial = initial.ok_or_else(|| missing("state marked init"))?;
        let table = table.ok_or_else(|| missing("table declaration"))?;
        let condition = condition.ok_or_else(|| missing("cond declaration"))?;
        let automaton = Automaton::new(AutomatonParts {
            alphabet,
            states,
            initial,
            transitions,
            table,
        })?;
        Ok(AutomatonDocument {
            automaton,
            condition,
        })
    }

    /// Serializes the document into its canonical text form.
    pub fn serialize(&self) -> String {
        let a = &self.automaton;
        let mut out = String::from("alphabet");
        for sym in a.alphabet().iter() {
            out.push(' ');
            out.push_str(sym.as_str());
        }
        out.push('\n');
        for (i, state) in a.states().iter().enumerate() {
            out.push_str("state ");
            out.push_str(state.as_str());
            if i == a.initial() {
                out.push_str(" init");
            }
            out.push('\n');
        }
        for &(p, x, q) in a.transitions() {
            out.push_str("trans ");
            out.push_str(a.state(p).as_str());
            out.push(' ');
            out.push_str(a.alphabet().symbol(x).as_str());
            out.push(' ');
            out.push_str(a.state(q).as_str());
            out.push('\n');
        }
        out.push_str("table");
        if a.table().is_empty() {
            out.push_str(" -");
        } else {
            let mut rendered: Vec<String> = a
                .table()
                .iter()
                .map(|member| {
                    let mut names: Vec<&str> =
                        member.iter().map(|&q| a.state(q).as_str()).collect();
                    names.sort_unstable();
                    format!("{{{}}}", names.join(","))
                })
                .collect();
            rendered.sort_unstable();
            for set in rendered {
                out.push(' ');
                out.push_str(&set);
            }
        }
        out.push('\n');
        out.push_str("cond ");
        out.push_str(&self.condition.to_string());
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::{NamedCondition, Rel, StatKind};
    use crate::witnesses::{figure_automaton, FigureId};

    #[test]
    fn figures_round_trip() {
        for id in FigureId::ALL {
            let (automaton, condition) = figure_automaton(id);
            let doc = AutomatonDocument {
                automaton,
                condition,
            };
            let text = doc.serialize();
            let back = AutomatonDocument::parse(&text).unwrap();
            assert_eq!(back, doc, "{id}");
            assert_eq!(back.serialize(), text, "{id} canonical form is stable");
            assert!(text.ends_with('\n') && !text.ends_with("\n\n"));
        }
    }

    #[test]
    fn parses_comments_blanks_and_accumulating_tables() {
        let text = "\
# a document
alphabet a b   # symbols

state q0 init
state q1
trans q0 a q1  # one step
trans q1 b q1
table {q1}
table {q0,q1} {}
cond inf meets
";
        let doc = AutomatonDocument::parse(text).unwrap();
        assert_eq!(doc.automaton.state_count(), 2);
        assert_eq!(
            doc.automaton.table(),
            &[
                BTreeSet::new(),
                BTreeSet::from([0usize, 1]),
                BTreeSet::from([1]),
            ] as &[BTreeSet<usize>]
        );
        assert_eq!(doc.condition, Condition::Pair(StatKind::Inf, Rel::Meets));
    }

    #[test]
    fn empty_table_differs_from_empty_set() {
        let base = "alphabet a\nstate q0 init\ntrans q0 a q0\n";
        let none = AutomatonDocument::parse(&format!("{base}table -\ncond run meets\n")).unwrap();
        assert!(none.automaton.table().is_empty());
        let empty_set =
            AutomatonDocument::parse(&format!("{base}table {{}}\ncond run meets\n")).unwrap();
        assert_eq!(
            empty_set.automaton.table(),
            &[BTreeSet::new()] as &[BTreeSet<usize>]
        );
        assert!(none.serialize().contains("table -\n"));
        assert!(empty_set.serialize().contains("table {}\n"));
    }

    #[test]
    fn named_condition_round_trips() {
        let text = "alphabet a\nstate q0 init\ntrans q0 a q0\ntable {q0}\ncond Lprime\n";
        let doc = AutomatonDocument::parse(text).unwrap();
        assert_eq!(doc.condition, Condition::Named(NamedCondition::LPrime));
        assert_eq!(doc.serialize(), text);
    }

    #[test]
    fn reports_line_and_column() {
        let cases: &[(&str, usize, usize)] = &[
            // Alphabet not first.
            ("state q0 init\nalphabet a\n", 1, 1),
            // Duplicate alphabet.
            ("alphabet a\nalphabet b\n", 2, 1),
            // Second init marker.
            ("alphabet a\nstate q0 init\nstate q1 init\n", 3, 10),
            // Malformed trans.
            ("alphabet a\nstate q0 init\ntrans q0 a\n", 3, 1),
            // Malformed set.
            ("alphabet a\nstate q0 init\ntrans q0 a q0\ntable q0\n", 4, 7),
            // Empty name inside a set.
            ("alphabet a\nstate q0 init\ntrans q0 a q0\ntable {q0,}\n", 4, 7),
            // Unknown directive.
            ("alphabet a\n  flip q0\n", 2, 3),
            // Bad condition tokens.
            ("alphabet a\nstate q0 init\ntable -\ncond frobnicate\n", 4, 6),
            // Stray `-` among sets.
            ("alphabet a\nstate q0 init\ntable {q0} -\ncond L\n", 3, 12),
        ];
        for (text, line, column) in cases {
            match AutomatonDocument::parse(text) {
                Err(Error::Parse {
                    line: l,
                    column: c,
                    ..
                }) => {
                    assert_eq!((l, c), (*line, *column), "position for {text:?}");
                }
                other => panic!("expected a parse error for {text:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn missing_sections_are_reported_at_document_end() {
        let text = "alphabet a\nstate q0 init\ntable -\n";
        match AutomatonDocument::parse(text) {
            Err(Error::Parse { line, message, .. }) => {
                assert_eq!(line, 4);
                assert!(message.contains("cond"));
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
        assert!(AutomatonDocument::parse("").is_err());
    }

    #[test]
    fn structural_problems_come_from_validation() {
        // Transition uses an undeclared state: document-level error.
        let text = "alphabet a\nstate q0 init\ntrans q0 a q9\ntable -\ncond L\n";
        match AutomatonDocument::parse(text) {
            Err(Error::InvalidAutomaton(violations)) => assert!(!violations.is_empty()),
            other => panic!("expected a validation error, got {other:?}"),
        }
    }

    #[test]
    fn serialization_orders_table_sets_lexicographically() {
        let automaton = Automaton::build(
            &["a"],
            &["b", "a"],
            "b",
            &[("b", "a", "a"), ("a", "a", "b")],
            &[&["b", "a"], &["b"]],
        )
        .unwrap();
        let doc = AutomatonDocument {
            automaton,
            condition: Condition::Pair(StatKind::Fin, Rel::Eq),
        };
        let text = doc.serialize();
        let table_line = text.lines().find(|l| l.starts_with("table")).unwrap();
        assert_eq!(table_line, "table {a,b} {b}");
        assert_eq!(AutomatonDocument::parse(&text).unwrap(), doc);
    }
}
