//! End-to-end checks of the powmap binary: output contracts and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn powmap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_powmap"))
        .args(args)
        .output()
        .expect("spawn powmap")
}

fn stdout_of(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).expect("utf-8 stdout")
}

fn stderr_of(out: &Output) -> &str {
    std::str::from_utf8(&out.stderr).expect("utf-8 stderr")
}

#[test]
fn count_prints_cycle_total() {
    let out = powmap(&["count", "--group", "cyclic:10", "--a", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "N = 2\n");

    let out = powmap(&["count", "--group", "sl2:3", "--a", "2"]);
    assert_eq!(stdout_of(&out), "N = 5\n");

    // Closed-form spectra reach groups far past the realization budget.
    // p = 10⁹+7 ≡ 7 (mod 8) so 2 is a square mod p, and (p−1)/2 is prime,
    // hence ord_p(2) = (p−1)/2 and N = 1 + 2.
    let out = powmap(&["count", "--group", "cyclic:1000000007", "--a", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "N = 3\n");
}

#[test]
fn period_prints_exact_rational() {
    let out = powmap(&["period", "--group", "cyclic:10", "--a", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "17/5\n");

    // Non-cyclic groups go through the explicit graph: in D₅ under squaring
    // the identity and the five reflections land on the fixed point e and the
    // four rotations form one 4-cycle, so C = (6·1 + 4·4)/10 = 11/5.
    let out = powmap(&["period", "--group", "dihedral:5", "--a", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "11/5\n");
}

#[test]
fn spectrum_lists_order_counts() {
    let out = powmap(&["spectrum", "--group", "dihedral:6"]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "|G| = 12\nw(1) = 1\nw(2) = 7\nw(3) = 2\nw(6) = 2\n"
    );
}

#[test]
fn graph_dot_stdout_and_summary() {
    let out = powmap(&["graph", "--group", "cyclic:10", "--a", "2", "--dot", "-"]);
    assert!(out.status.success());
    let dot = stdout_of(&out);
    assert!(dot.starts_with("digraph power_map {\n"));
    assert!(dot.ends_with("}\n"));
    assert_eq!(dot.lines().filter(|l| l.ends_with(";") && !l.contains("->")).count(), 10);
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 10);
    assert!(dot.contains("  0 -> 0;"));

    // Without --dot -, stdout carries the component summary instead.
    let out = powmap(&["graph", "--group", "cyclic:10", "--a", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "components = 2\ncycle lengths = [1, 4]\n");

    let out = powmap(&[
        "graph",
        "--group",
        "cyclic:3",
        "--a",
        "2",
        "--dot",
        "-",
        "--undirected",
    ]);
    assert!(stdout_of(&out).starts_with("graph power_map {\n"));
    assert!(stdout_of(&out).contains("  1 -- 2;"));
}

#[test]
fn scan_csv_identical_across_worker_counts() {
    let golden = "n,N,ratio\n1,1,1.000000\n2,1,0.500000\n3,2,0.666667\n4,1,0.250000\n\
                  5,2,0.400000\n6,2,0.333333\n7,3,0.428571\n8,1,0.125000\n9,3,0.333333\n\
                  10,2,0.200000\n";
    let mut outputs = Vec::new();
    for jobs in ["1", "3", "7"] {
        let out = powmap(&["scan", "--a", "2", "--max", "10", "--csv", "-", "--jobs", jobs]);
        assert!(out.status.success());
        assert_eq!(stderr_of(&out), "average = 9/5\n");
        outputs.push(out.stdout);
    }
    assert_eq!(outputs[0], golden.as_bytes());
    assert!(outputs.iter().all(|o| *o == outputs[0]));
}

#[test]
fn scan_without_csv_prints_average_only() {
    let out = powmap(&["scan", "--a", "2", "--max", "10"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "average = 9/5\n");
    assert_eq!(stderr_of(&out), "");
}

#[test]
fn verify_single_suite_passes() {
    let out = powmap(&["verify", "--suite", "extremal"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.starts_with("PASS extremal "));
    assert!(text.ends_with("suites=1 failures=0\n"));
}

#[test]
fn conjecture_accepts_catalog_file() {
    let path = scratch_file("powmap-cli-mini.cat");
    std::fs::write(
        &path,
        "q8 8 2 2,3,1,0,6,7,5,4 4,5,7,6,1,0,2,3\nc6 6 1 1,2,3,4,5,0\n",
    )
    .unwrap();
    let out = powmap(&[
        "conjecture",
        "--catalog",
        path.to_str().unwrap(),
        "--a-max",
        "20",
    ]);
    std::fs::remove_file(&path).ok();
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("PASS conjecture [groups=2 a=2..=20] cases=38"));
    assert!(text.ends_with("suites=1 failures=0\n"));
}

#[test]
fn usage_errors_exit_two() {
    // Unparseable descriptor, zero exponent, unknown suite, missing catalog:
    // all usage/input errors, all exit code 2 with a message on stderr.
    let cases: &[&[&str]] = &[
        &["count", "--group", "frobnicate:9", "--a", "2"],
        &["count", "--group", "cyclic:10", "--a", "0"],
        &["count", "--group", "cyclic:10"],
        &["scan", "--a", "1", "--max", "10"],
        &["verify", "--suite", "nosuch"],
        &["conjecture", "--catalog", "/nonexistent/x.cat"],
        &["graph", "--group", "dihedral:2", "--a", "2"],
    ];
    for args in cases {
        let out = powmap(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        assert!(!stderr_of(&out).is_empty(), "args {args:?}");
    }
}

fn scratch_file(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("{}-{name}", std::process::id()));
    p
}
