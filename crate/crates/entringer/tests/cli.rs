//! End-to-end tests of the command-line interface: output text, stdin
//! fallback, and the exit-code contract (0 success, 1 invalid data,
//! 2 usage).

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_entringer"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_entringer"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .take()
        .expect("stdin piped")
        .write_all(input.as_bytes())
        .expect("stdin accepts input");
    child.wait_with_output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    assert!(
        out.status.success(),
        "expected success, got {:?} with stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn code_of(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn map_prints_the_parent_array() {
    let out = run(&["map", "7 4 8 5 9 1 6 2 3"]);
    assert_eq!(stdout_of(&out), "0 1 1 2 4 3 5 4 5\n");
}

#[test]
fn map_accepts_compact_words() {
    let out = run(&["map", "748591623"]);
    assert_eq!(stdout_of(&out), "0 1 1 2 4 3 5 4 5\n");
}

#[test]
fn map_trace_appends_the_descent() {
    let out = run(&["map", "21534", "--trace"]);
    assert_eq!(
        stdout_of(&out),
        "0 1 1 3 4\n(a, 5, 2)\n(b1, 3, 3)\n(a, 3, 2)\n(base, 1, 1)\n"
    );
}

#[test]
fn map_dot_emits_graphviz() {
    let out = run(&["map", "213", "--dot"]);
    assert_eq!(
        stdout_of(&out),
        "digraph {\n    1;\n    2;\n    3;\n    1 -> 2 [style=bold];\n    1 -> 3;\n}\n"
    );
}

#[test]
fn unmap_inverts_map() {
    let out = run(&["unmap", "0 1 1 2 4 3 5 4 5"]);
    assert_eq!(stdout_of(&out), "7 4 8 5 9 1 6 2 3\n");
}

#[test]
fn map_reads_stdin_when_no_argument() {
    let out = run_with_stdin(&["map"], "2 1 5 3 4\n");
    assert_eq!(stdout_of(&out), "0 1 1 3 4\n");
}

#[test]
fn unmap_reads_stdin_when_no_argument() {
    let out = run_with_stdin(&["unmap"], "0 1 1 3 4\n");
    assert_eq!(stdout_of(&out), "2 1 5 3 4\n");
}

#[test]
fn dot_renders_a_tree_directly() {
    let out = run(&["dot", "0 1 1"]);
    let text = stdout_of(&out);
    assert!(text.starts_with("digraph {\n"));
    assert!(text.contains("    1 -> 2 [style=bold];\n"));
    assert!(text.contains("    1 -> 3;\n"));
}

#[test]
fn enum_lists_words_in_order() {
    let out = run(&["enum", "perms", "4"]);
    assert_eq!(
        stdout_of(&out),
        "2 1 4 3\n3 1 4 2\n3 2 4 1\n4 1 3 2\n4 2 3 1\n"
    );
}

#[test]
fn enum_restricts_to_a_class() {
    let out = run(&["enum", "perms", "4", "--k", "3"]);
    assert_eq!(stdout_of(&out), "3 1 4 2\n3 2 4 1\n");
    let out = run(&["enum", "trees", "4", "--k", "4"]);
    assert_eq!(stdout_of(&out), "0 1 1 2\n0 1 2 3\n");
}

#[test]
fn enum_stats_appends_statistics() {
    let out = run(&["enum", "perms", "4", "--k", "3", "--stats"]);
    assert_eq!(stdout_of(&out), "3 1 4 2\t3\t1\n3 2 4 1\t4\t0\n");
}

#[test]
fn enum_count_only_works_beyond_the_listing_cap() {
    let out = run(&["enum", "perms", "4", "--count-only"]);
    assert_eq!(stdout_of(&out), "5\n");
    let out = run(&["enum", "trees", "16", "--k", "2", "--count-only"]);
    assert_eq!(stdout_of(&out), "199360981\n");
}

#[test]
fn table_counts_aligned_and_machine() {
    let out = run(&["table", "counts", "4"]);
    assert_eq!(stdout_of(&out), "1: 1\n2: 0 1\n3: 0 1 1\n4: 0 1 2 2\n");
    let out = run(&["table", "counts", "3", "--machine"]);
    assert_eq!(stdout_of(&out), "1 1 1\n2 1 0\n2 2 1\n3 1 0\n3 2 1\n3 3 1\n");
}

#[test]
fn table_poly_lists_terms() {
    let out = run(&["table", "poly", "4"]);
    let text = stdout_of(&out);
    assert!(text.starts_with("1 1 0 0 1\n"));
    // The (4, 4) cell is q^4 p^2 + q^5 p.
    assert!(text.ends_with("4 4 4 2 1\n4 4 5 1 1\n"));
}

#[test]
fn verify_reports_sections_and_succeeds() {
    let out = run(&[
        "verify",
        "--roundtrip-n", "6",
        "--refinement-n", "6",
        "--equinumerosity-n", "6",
        "--counts-n", "7",
        "--poly-n", "6",
        "--identity-n", "7",
    ]);
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 8);
    assert!(text.lines().take(7).all(|l| l.starts_with("ok   ")));
    assert!(text.lines().last().unwrap().starts_with("all sections passed"));
}

#[test]
fn invalid_data_exits_one() {
    // Readable but not alternating.
    let out = run(&["map", "1 2 3"]);
    assert_eq!(code_of(&out), 1);
    // Readable but not a permutation.
    let out = run(&["map", "2 2 1"]);
    assert_eq!(code_of(&out), 1);
    // Readable but not an increasing tree.
    let out = run(&["unmap", "0 1 5"]);
    assert_eq!(code_of(&out), 1);
    let out = run(&["unmap", "0 1 1 1"]);
    assert_eq!(code_of(&out), 1);
    // Failure messages land on stderr, not stdout.
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
}

#[test]
fn usage_problems_exit_two() {
    // Unreadable tokens.
    let out = run(&["map", "2 1 x"]);
    assert_eq!(code_of(&out), 2);
    let out = run(&["unmap", "0 z"]);
    assert_eq!(code_of(&out), 2);
    // Statistics are a word-side notion.
    let out = run(&["enum", "trees", "4", "--stats"]);
    assert_eq!(code_of(&out), 2);
    // Class index outside the triangle.
    let out = run(&["enum", "perms", "4", "--k", "9"]);
    assert_eq!(code_of(&out), 2);
    // Listings and polynomial tables are capped.
    let out = run(&["enum", "perms", "13"]);
    assert_eq!(code_of(&out), 2);
    let out = run(&["table", "poly", "13"]);
    assert_eq!(code_of(&out), 2);
    // Unknown subcommands are clap's to reject.
    let out = run(&["frobnicate"]);
    assert_eq!(code_of(&out), 2);
}
