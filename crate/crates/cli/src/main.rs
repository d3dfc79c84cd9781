//! `oaut` — command-line interface to the ω-automaton library: inspect
//! `.oaut` documents, decide word membership, apply condition-changing
//! rewrites, translate to Büchi form, check emptiness, compare languages
//! on bounded words, emit equivalent MSO sentences, and reproduce the
//! built-in witness automata.
//!
//! Exit codes: 0 for success (and for "yes" answers), 1 for "no" answers
//! (word rejected, languages differ, language nonempty), 2 for any error,
//! with a one-line diagnostic on stderr.

use clap::{Parser, Subcommand};
use oaut_core::semantics::{accepts_routed, Condition, NamedCondition, OracleGuard, Rel, StatKind};
use oaut_core::transforms::{self, SizeGuard, TransformKind, TransformOutput};
use oaut_core::words::LassoWord;
use oaut_core::{
    automaton_formula, bounded_equiv, is_empty, to_buchi, verify_figure, Automaton,
    AutomatonDocument, BoundedOutcome, FigureCheck, FigureId,
};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "oaut", version, about = "ω-automata under parameterized acceptance conditions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print structural facts about a document.
    Info {
        /// The `.oaut` document.
        file: PathBuf,
    },
    /// Decide whether the automaton accepts an ultimately periodic word.
    Accepts {
        /// The `.oaut` document.
        file: PathBuf,
        /// The word, written STEM:CYCLE (for example `ab:ba`, or `:a`).
        #[arg(long)]
        word: String,
        /// Read the automaton under this condition instead of the
        /// document's (one named token, or statistic and relation).
        #[arg(long, num_args = 1..=2)]
        cond: Option<Vec<String>>,
    },
    /// Apply a condition-changing rewrite and write the result.
    Transform {
        /// The rewrite name (see the library's transform catalogue).
        name: String,
        /// The `.oaut` document to rewrite.
        file: PathBuf,
        /// Output path: a canonical `.oaut` document, or an s-expression
        /// for the decomposition rewrite.
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Translate to an equivalent Büchi automaton (inf meets, one set).
    ToBuchi {
        /// The `.oaut` document.
        file: PathBuf,
        /// Output path for the canonical `.oaut` document.
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Check emptiness of a Büchi document produced by to-buchi.
    Empty {
        /// The `.oaut` document (single table set, read under inf meets).
        file: PathBuf,
    },
    /// Compare two documents on all short ultimately periodic words.
    Equiv {
        /// The first `.oaut` document.
        file1: PathBuf,
        /// The second `.oaut` document (same alphabet).
        file2: PathBuf,
        /// Largest stem length to try.
        #[arg(long)]
        stem_max: usize,
        /// Largest cycle length to try.
        #[arg(long)]
        cycle_max: usize,
    },
    /// Emit an equivalent monadic second-order sentence.
    EmitMso {
        /// The `.oaut` document; named conditions are rewritten first.
        file: PathBuf,
    },
    /// Print a built-in witness automaton, or check it against its
    /// reference language.
    Witness {
        /// One of fig2, fig3, fig4, fig5.
        figure: String,
        /// Compare the automaton against the reference language on all
        /// short words instead of printing the document.
        #[arg(long)]
        check: bool,
        /// Largest stem length for --check.
        #[arg(long, default_value_t = 4)]
        stem_max: usize,
        /// Largest cycle length for --check.
        #[arg(long, default_value_t = 4)]
        cycle_max: usize,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn read_doc(path: &Path) -> Result<AutomatonDocument, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    AutomatonDocument::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_file(path: &Path, content: &str) -> Result<(), String> {
    std::fs::write(path, content).map_err(|e| format!("{}: {e}", path.display()))
}

/// Rewrites a document with a named condition into an equivalent pair of
/// automaton and parameterized condition.
fn to_pair_form(
    doc: &AutomatonDocument,
    guard: &SizeGuard,
) -> Result<(Automaton, Condition), oaut_core::Error> {
    match doc.condition {
        Condition::Pair(..) => Ok((doc.automaton.clone(), doc.condition)),
        Condition::Named(NamedCondition::A) => Ok((
            transforms::a_to_run_meets(&doc.automaton, guard)?,
            Condition::Pair(StatKind::Run, Rel::Meets),
        )),
        Condition::Named(NamedCondition::APrime) => Ok((
            transforms::aprime_to_run_subseteq(&doc.automaton, guard)?,
            Condition::Pair(StatKind::Run, Rel::Subseteq),
        )),
        Condition::Named(NamedCondition::L) => Ok((
            transforms::l_to_inf_meets(&doc.automaton)?,
            Condition::Pair(StatKind::Inf, Rel::Meets),
        )),
        Condition::Named(NamedCondition::LPrime) => {
            let single = transforms::single_accepting_lprime(&doc.automaton, guard)?;
            Ok((
                transforms::lprime_to_inf_subseteq(&single)?,
                Condition::Pair(StatKind::Inf, Rel::Subseteq),
            ))
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let size_guard = SizeGuard::from_env();
    let oracle_guard = OracleGuard::default();
    match cli.command {
        Command::Info { file } => {
            let doc = read_doc(&file)?;
            let a = &doc.automaton;
            println!("states {}", a.state_count());
            println!("transitions {}", a.transitions().len());
            println!("deterministic {}", a.is_deterministic());
            println!("complete {}", a.is_complete());
            println!("table-sets {}", a.table().len());
            println!("cond {}", doc.condition);
            Ok(ExitCode::SUCCESS)
        }
        Command::Accepts { file, word, cond } => {
            let doc = read_doc(&file)?;
            let condition = match cond {
                Some(tokens) => {
                    let refs: Vec<&str> = tokens.iter().map(String::as_str).collect();
                    Condition::parse_tokens(&refs).map_err(|e| e.to_string())?
                }
                None => doc.condition,
            };
            let w = LassoWord::parse(&word, doc.automaton.alphabet())
                .map_err(|e| e.to_string())?;
            let accepted = accepts_routed(&doc.automaton, &condition, &w, &oracle_guard)
                .map_err(|e| e.to_string())?;
            println!("{accepted}");
            Ok(if accepted {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Transform { name, file, out } => {
            let kind = TransformKind::parse(&name).map_err(|e| e.to_string())?;
            let doc = read_doc(&file)?;
            let target = kind.conditions(&doc.condition).map_err(|e| e.to_string())?;
            match kind
                .apply(&doc.automaton, &doc.condition, &size_guard)
                .map_err(|e| e.to_string())?
            {
                TransformOutput::Automaton(automaton) => {
                    let result = AutomatonDocument {
                        automaton,
                        condition: target,
                    };
                    write_file(&out, &result.serialize())?;
                }
                TransformOutput::Expr(expr) => {
                    write_file(&out, &format!("{}\n", expr.to_sexpr()))?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::ToBuchi { file, out } => {
            let doc = read_doc(&file)?;
            let automaton = to_buchi(&doc.automaton, &doc.condition, &size_guard)
                .map_err(|e| e.to_string())?;
            let result = AutomatonDocument {
                automaton,
                condition: Condition::Pair(StatKind::Inf, Rel::Meets),
            };
            write_file(&out, &result.serialize())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Empty { file } => {
            let doc = read_doc(&file)?;
            if doc.condition != Condition::Pair(StatKind::Inf, Rel::Meets) {
                return Err(format!(
                    "{}: emptiness needs a Büchi document (cond inf meets); run to-buchi first",
                    file.display()
                ));
            }
            let report = is_empty(&doc.automaton).map_err(|e| e.to_string())?;
            match report.witness {
                None => {
                    println!("empty");
                    Ok(ExitCode::SUCCESS)
                }
                Some(w) => {
                    println!("witness {w}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Equiv {
            file1,
            file2,
            stem_max,
            cycle_max,
        } => {
            let doc1 = read_doc(&file1)?;
            let doc2 = read_doc(&file2)?;
            let outcome = bounded_equiv(
                &doc1.automaton,
                &doc1.condition,
                &doc2.automaton,
                &doc2.condition,
                stem_max,
                cycle_max,
            )
            .map_err(|e| e.to_string())?;
            match outcome {
                BoundedOutcome::Equal => {
                    println!("equal-bounded {stem_max} {cycle_max}");
                    Ok(ExitCode::SUCCESS)
                }
                BoundedOutcome::Counterexample { word, in1, in2 } => {
                    println!("counterexample {word} in1={in1} in2={in2}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::EmitMso { file } => {
            let doc = read_doc(&file)?;
            let (automaton, condition) =
                to_pair_form(&doc, &size_guard).map_err(|e| e.to_string())?;
            let formula =
                automaton_formula(&automaton, &condition).map_err(|e| e.to_string())?;
            println!("{}", formula.render());
            Ok(ExitCode::SUCCESS)
        }
        Command::Witness {
            figure,
            check,
            stem_max,
            cycle_max,
        } => {
            let id = FigureId::parse(&figure).map_err(|e| e.to_string())?;
            if !check {
                let (automaton, condition) = oaut_core::figure_automaton(id);
                let doc = AutomatonDocument {
                    automaton,
                    condition,
                };
                print!("{}", doc.serialize());
                return Ok(ExitCode::SUCCESS);
            }
            match verify_figure(id, stem_max, cycle_max).map_err(|e| e.to_string())? {
                FigureCheck::Equal => {
                    println!("equal-bounded {stem_max} {cycle_max}");
                    Ok(ExitCode::SUCCESS)
                }
                FigureCheck::Counterexample {
                    word,
                    automaton_accepts,
                    predicate_accepts,
                } => {
                    println!(
                        "counterexample {word} automaton={automaton_accepts} predicate={predicate_accepts}"
                    );
                    Ok(ExitCode::from(1))
                }
            }
        }
    }
}
