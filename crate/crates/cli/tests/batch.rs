use std::io::Write;
use std::process::{Command, Output, Stdio};

use tempfile::NamedTempFile;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_distalg"))
}

fn script(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn batch(text: &str, extra: &[&str]) -> Output {
    let f = script(text);
    bin().arg("batch").arg(f.path()).args(extra).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const GOLDEN_SCRIPT: &str = include_str!("golden/h_delta_table.txt");
const GOLDEN_OUT: &str = include_str!("golden/h_delta_table.out");

#[test]
fn h_delta_table_golden() {
    let o = batch(GOLDEN_SCRIPT, &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), GOLDEN_OUT);
}

#[test]
fn repl_replays_golden() {
    let mut child = bin().arg("repl").stdin(Stdio::piped()).stdout(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(GOLDEN_SCRIPT.as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), GOLDEN_OUT);
}

#[test]
fn deterministic_output() {
    let text = "let F = abs(x-1/2) + 2*delta(0,1)\nF*F\nD(F,2)\npair F bump(1/3,2)\nformat json\nAD(F)\nsupp F\n";
    let a = batch(text, &["--eps-depth", "10"]);
    let b = batch(text, &["--eps-depth", "10"]);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn empty_file() {
    let o = batch("", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty() && o.stderr.is_empty());
}

#[test]
fn unsupported_argument_exits_one() {
    let o = batch("H(x)\nH(x^2)\ndelta(0)\n", &[]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "H(x)\ndelta(0)\n");
    let err = stderr(&o);
    assert!(err.contains("x^2") && err.contains("unsupported argument"), "{err}");
    // not a syntax error, so strict mode still runs to the end
    let o = batch("H(x^2)\nx\n", &["--strict"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "x\n");
}

#[test]
fn strict_syntax_error_aborts() {
    let o = batch("x\nH(x\nx^2\n", &["--strict"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o), "x\n");
    let o = batch("x\nH(x\nx^2\n", &[]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "x\nx^2\n");
}

#[test]
fn missing_file_exits_two() {
    let o = bin().args(["batch", "/nonexistent/script.txt"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_mode_one_object_per_result() {
    let o = batch("setM [0,1)\ndelta(0)*H(x)\nlet G = x\n# comment\nformat plain\nG\n", &["--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 4, "{out}");
    for l in &lines[..3] {
        serde_json::from_str::<serde_json::Value>(l).unwrap();
    }
    let v: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
    let round = distalg::dist_from_json(&v["value"].to_string()).unwrap();
    assert_eq!(distalg_core::lang::print_plain(&round), "delta(0)");
    assert_eq!(lines[3], "x");
}

#[test]
fn oracle_command() {
    let o = batch("oracle abs(x) ; abs(x) bump(0,1)\npair x^2 bump(0,1)\n", &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    let mut lines = out.lines();
    let oracle = lines.next().unwrap();
    let pairing = lines.next().unwrap();
    let symbolic: f64 = oracle.split_whitespace().nth(1).unwrap().trim_end_matches(',').parse().unwrap();
    let direct: f64 = pairing.split_whitespace().next().unwrap().parse().unwrap();
    assert_eq!(symbolic, direct);
    let discrepancy: f64 = oracle.rsplit(' ').next().unwrap().parse().unwrap();
    assert!(discrepancy <= 1e-6, "{oracle}");
}

#[test]
fn flags_are_validated() {
    assert_eq!(batch("x\n", &["--tolerance", "0"]).status.code(), Some(2));
    assert_eq!(batch("x\n", &["--eps-depth", "1"]).status.code(), Some(2));
    assert_ne!(batch("x\n", &["--format", "tex"]).status.code(), Some(0));
}

#[test]
fn latex_format() {
    let o = batch("format latex\n1/2*delta(1/3,2) + H(x)\n", &[]);
    assert_eq!(stdout(&o), "\\frac{1}{2} \\delta_{\\frac{1}{3}}^{(2)} + H(x)\n");
}

#[test]
fn quit_stops_the_script() {
    let o = batch("x\nquit\nx^2\n", &[]);
    assert_eq!(stdout(&o), "x\n");
    assert_eq!(o.status.code(), Some(0));
}
