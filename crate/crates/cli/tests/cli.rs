//! End-to-end tests driving the `oaut` binary as a subprocess.

use std::path::PathBuf;
use std::process::Command;

const FIG2: &str = "\
alphabet a b
state q0 init
state q1
trans q0 a q0
trans q0 b q1
trans q1 a q0
trans q1 b q1
table {q1}
cond Lprime
";

const FIG2_L: &str = "\
alphabet a b
state q0 init
state q1
trans q0 a q0
trans q0 b q1
trans q1 a q0
trans q1 b q1
table {q1}
cond L
";

const FIG3: &str = "\
alphabet a b
state q0 init
state q1
state q2
trans q0 a q1
trans q1 a q2
trans q1 b q1
trans q2 a q2
trans q2 b q2
table {q1}
cond Lprime
";

const FIG5: &str = "\
alphabet a b
state q0 init
state q1
state q2
state q3
state q4
state q5
trans q0 a q1
trans q0 b q3
trans q1 a q2
trans q1 b q1
trans q2 a q2
trans q2 b q1
trans q3 a q4
trans q3 b q4
trans q4 a q5
trans q4 b q4
trans q5 a q5
trans q5 b q4
table {} {q2} {q3,q4}
cond fin eq
";

const DFA_FIN_SUBSETEQ: &str = "\
alphabet a b
state q0 init
state q1
trans q0 a q0
trans q0 b q1
trans q1 a q0
trans q1 b q1
table {q1}
cond fin subseteq
";

fn fixture(name: &str, content: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("oaut-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn oaut(args: &[&str]) -> (String, String, i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_oaut"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(output.stdout).unwrap(),
        String::from_utf8(output.stderr).unwrap(),
        output.status.code().expect("no signal"),
    )
}

#[test]
fn accepts_answers_and_exit_codes() {
    let fig2 = fixture("fig2.oaut", FIG2);
    let (out, _, code) = oaut(&["accepts", fig2.to_str().unwrap(), "--word", ":a"]);
    assert_eq!((out.as_str(), code), ("true\n", 0));

    let fig5 = fixture("fig5.oaut", FIG5);
    let (out, _, code) = oaut(&["accepts", fig5.to_str().unwrap(), "--word", ":b"]);
    assert_eq!((out.as_str(), code), ("false\n", 1));
}

#[test]
fn accepts_condition_override() {
    let fig2 = fixture("fig2-override.oaut", FIG2);
    let file = fig2.to_str().unwrap();
    let (out, _, code) = oaut(&["accepts", file, "--word", ":a", "--cond", "L"]);
    assert_eq!((out.as_str(), code), ("false\n", 1));
    let (out, _, code) = oaut(&["accepts", file, "--word", ":a", "--cond", "ninf", "meets"]);
    assert_eq!((out.as_str(), code), ("true\n", 0));
}

#[test]
fn info_prints_structural_facts() {
    let fig5 = fixture("fig5-info.oaut", FIG5);
    let (out, _, code) = oaut(&["info", fig5.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "states 6\ntransitions 12\ndeterministic true\ncomplete true\ntable-sets 3\ncond fin eq\n"
    );
}

#[test]
fn unknown_transform_fails_with_diagnostic() {
    let fig2 = fixture("fig2-badname.oaut", FIG2);
    let (_, err, code) = oaut(&["transform", "no-such-name", fig2.to_str().unwrap(), "-o", "/dev/null"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error: "), "stderr: {err}");
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn transform_writes_a_canonical_document() {
    let fig2 = fixture("fig2-single.oaut", FIG2);
    let out_path = fixture("fig2-single-out.oaut", "");
    let (_, _, code) = oaut(&[
        "transform",
        "single-accepting-Lprime",
        fig2.to_str().unwrap(),
        "-o",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&out_path).unwrap();
    assert!(text.contains("cond Lprime\n"));
    // The rewritten automaton still accepts a^ω.
    let (out, _, code) = oaut(&["accepts", out_path.to_str().unwrap(), "--word", ":a"]);
    assert_eq!((out.as_str(), code), ("true\n", 0));
}

#[test]
fn transform_refuses_wrong_source_condition() {
    let fig2 = fixture("fig2-wrongsource.oaut", FIG2);
    let (_, err, code) = oaut(&[
        "transform",
        "a-to-run-meets",
        fig2.to_str().unwrap(),
        "-o",
        "/dev/null",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("a-to-run-meets"), "stderr: {err}");
}

#[test]
fn decompose_writes_an_expression() {
    let dfa = fixture("dfa.oaut", DFA_FIN_SUBSETEQ);
    let out_path = fixture("dfa.sexpr", "");
    let (_, _, code) = oaut(&[
        "transform",
        "dfa-fin-subseteq-decompose",
        dfa.to_str().unwrap(),
        "-o",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&out_path).unwrap();
    assert!(text.starts_with("(union (intersection (leaf run subseteq "));
    assert!(text.ends_with(")\n"));
}

#[test]
fn to_buchi_then_emptiness_finds_a_witness() {
    let fig3 = fixture("fig3.oaut", FIG3);
    let buchi = fixture("fig3-buchi.oaut", "");
    let (_, _, code) = oaut(&[
        "to-buchi",
        fig3.to_str().unwrap(),
        "-o",
        buchi.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&buchi).unwrap();
    assert!(text.contains("cond inf meets\n"));

    let (out, _, code) = oaut(&["empty", buchi.to_str().unwrap()]);
    assert_eq!(code, 1);
    let witness = out.strip_prefix("witness ").unwrap().trim().to_string();
    // The witness is accepted by the original document too.
    let (out, _, code) = oaut(&["accepts", fig3.to_str().unwrap(), "--word", &witness]);
    assert_eq!((out.as_str(), code), ("true\n", 0));
}

#[test]
fn emptiness_of_an_empty_language() {
    let doc = "alphabet a\nstate q0 init\ntrans q0 a q0\ntable {}\ncond inf meets\n";
    let file = fixture("empty-buchi.oaut", doc);
    let (out, _, code) = oaut(&["empty", file.to_str().unwrap()]);
    assert_eq!((out.as_str(), code), ("empty\n", 0));

    // Wrong condition: needs to-buchi first.
    let fig2 = fixture("fig2-empty.oaut", FIG2);
    let (_, err, code) = oaut(&["empty", fig2.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("to-buchi"), "stderr: {err}");
}

#[test]
fn equiv_reports_first_counterexample() {
    let fig2 = fixture("fig2-eq.oaut", FIG2);
    let fig2_l = fixture("fig2-l.oaut", FIG2_L);
    let (out, _, code) = oaut(&[
        "equiv",
        fig2.to_str().unwrap(),
        fig2_l.to_str().unwrap(),
        "--stem-max",
        "2",
        "--cycle-max",
        "2",
    ]);
    assert_eq!(code, 1);
    assert_eq!(out, "counterexample :a in1=true in2=false\n");

    let (out, _, code) = oaut(&[
        "equiv",
        fig2.to_str().unwrap(),
        fig2.to_str().unwrap(),
        "--stem-max",
        "2",
        "--cycle-max",
        "2",
    ]);
    assert_eq!((out.as_str(), code), ("equal-bounded 2 2\n", 0));
}

#[test]
fn emit_mso_renders_a_closed_sentence() {
    let dfa = fixture("dfa-mso.oaut", DFA_FIN_SUBSETEQ);
    let (out, _, code) = oaut(&["emit-mso", dfa.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("(exists2 X_q0 (exists2 X_q1 (and "));
    assert_eq!(out.lines().count(), 1);

    // A named condition is rewritten before emission.
    let fig2_l = fixture("fig2-l-mso.oaut", FIG2_L);
    let (out, _, code) = oaut(&["emit-mso", fig2_l.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("(exists2 "));
}

#[test]
fn witness_prints_and_checks_figures() {
    let (out, _, code) = oaut(&["witness", "fig4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("alphabet a b\n"));
    assert!(out.contains("cond Lprime\n"));

    let (out, _, code) = oaut(&[
        "witness", "fig4", "--check", "--stem-max", "3", "--cycle-max", "3",
    ]);
    assert_eq!((out.as_str(), code), ("equal-bounded 3 3\n", 0));

    let (_, err, code) = oaut(&["witness", "fig9"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error: "));
}

#[test]
fn document_errors_carry_positions() {
    let bad = fixture("bad.oaut", "state q0\nalphabet a\n");
    let (_, err, code) = oaut(&["info", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 1"), "stderr: {err}");

    let (_, err, code) = oaut(&["info", "/nonexistent/x.oaut"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error: "), "stderr: {err}");
}
