use std::io::Write;
use std::process::{Command, Output, Stdio};

fn skewsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewsym")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn quantum_power_sum_inline() {
    let o = skewsym(&["expand", "--shape", "-", "--with", "qp:3", "--inline"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(1) * s[3] + (-q) * s[2,1] + (q^2) * s[1,1,1]");
}

#[test]
fn pieri_expansion_has_nine_terms() {
    let o = skewsym(&["expand", "--shape", "3,2,2/1,1", "--with", "s:2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 9);
    assert!(out.contains("(-1) * s[4,2,2/1]"));
    assert!(out.contains("(1) * s[3,2,2]"));
}

#[test]
fn output_is_deterministic() {
    let args = ["expand", "--shape", "4,3,3/2,2", "--with", "barp:3"];
    assert_eq!(stdout(&skewsym(&args)), stdout(&skewsym(&args)));
}

#[test]
fn bad_arguments_exit_two() {
    assert_eq!(skewsym(&["expand", "--shape", "2,3", "--with", "s:1"]).status.code(), Some(2));
    assert_eq!(skewsym(&["expand", "--shape", "2", "--with", "z:1"]).status.code(), Some(2));
    assert_eq!(skewsym(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(skewsym(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn empty_sweep_is_vacuous() {
    let o = skewsym(&["verify", "sqmnr", "--max-lambda", "0", "--max-r", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "SUMMARY rule=sqmnr cases=0 failed=0");
}

#[test]
fn small_sweep_reports_every_case() {
    let o = skewsym(&["verify", "spr", "--max-lambda", "1", "--max-r", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 3);
    assert!(out.ends_with("SUMMARY rule=spr cases=3 failed=0\n"));
}

#[test]
fn failing_conjecture_exits_one() {
    let o = skewsym(&["conjecture", "hl1", "--max-lambda", "2", "--max-r", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("conj1\t1,1\t1,1\t1\t"));
    let o = skewsym(&["conjecture", "hl-sqmnr", "--max-lambda", "2", "--max-r", "1", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn trace_rectify_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_skewsym"))
        .args(["trace", "rectify", "--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b". 2\n1 3\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("slide "));
    assert!(lines[1].starts_with("result "));
}

#[test]
fn trace_insert_bumps_down_the_rows() {
    let o = skewsym(&["trace", "insert", "--tableau", "1 2 / 3", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("bump")).count(), 3);
}

#[test]
fn trace_without_tableau_is_usage_error() {
    assert_eq!(skewsym(&["trace", "rectify"]).status.code(), Some(2));
}
