//! End-to-end checks of the `turan` binary: output, files and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn turan() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_turan"));
    cmd.env_remove("TURAN_THREADS");
    cmd
}

fn run(args: &[&str]) -> Output {
    turan().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("JSON output")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("turan-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn eval_equality_value() {
    let o = run(&[
        "eval",
        "--sum",
        "S",
        "--n",
        "3",
        "--a",
        "1",
        "--x",
        "2.0943951",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: f64 = stdout(&o).trim().parse().unwrap();
    assert!((v - 0.8660254).abs() < 1e-7, "{v}");
}

#[test]
fn eval_every_kind() {
    let cases: &[(&[&str], f64)] = &[
        (&["--sum", "S-star", "--n", "1", "--x", "1"], 1f64.sin()),
        (
            &["--sum", "phi", "--n", "6", "--x", "1.5707963267948966"],
            2.0,
        ),
        (
            &[
                "--sum",
                "phi-closed",
                "--n",
                "6",
                "--x",
                "1.5707963267948966",
            ],
            2.0,
        ),
        (
            &["--sum", "fejer-jackson", "--n", "1", "--x", "0.5"],
            0.5f64.sin(),
        ),
        (
            &["--sum", "carslaw", "--n", "0", "--x", "1.5707963267948966"],
            1.0,
        ),
        (&["--sum", "lambda", "--n", "0", "--x", "0.3"], 1.0),
        (&["--sum", "cheb-t", "--n", "2", "--x", "-0.5"], -0.5),
        (&["--sum", "cheb-u", "--n", "2", "--x", "0.5"], 0.0),
        (
            &[
                "--sum",
                "Theta-star",
                "--n",
                "2",
                "--a",
                "1",
                "--x",
                "1",
                "--y",
                "2",
            ],
            2.0 * 1f64.sin() * 2f64.sin(),
        ),
    ];
    for (args, want) in cases {
        let o = turan().arg("eval").args(*args).output().unwrap();
        assert_eq!(
            o.status.code(),
            Some(0),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        let v: f64 = stdout(&o).trim().parse().unwrap();
        assert!((v - want).abs() < 1e-14, "{args:?}: {v} vs {want}");
    }
}

#[test]
fn certify_inline_and_file() {
    let o = run(&["certify", "--coeffs", "[3,2,1]"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["gammas"], serde_json::json!([1.0, 0.0, 1.0]));
    assert_eq!(v["verdict"], "CertifiedNonnegative");

    let path = scratch("coeffs.json");
    std::fs::write(&path, "[1, -1]").unwrap();
    let o = run(&["certify", "--coeffs-file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["verdict"], "Indeterminate");

    assert_eq!(
        run(&["certify", "--coeffs", "{\"a\": 1}"]).status.code(),
        Some(1)
    );
    assert_eq!(run(&["certify"]).status.code(), Some(1));
}

#[test]
fn verify_clean_spec() {
    let o = run(&["verify", "--spec", "thm3.2", "--n-max", "30"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v = json(&o);
    assert_eq!(v["schema"], "v1");
    assert_eq!(v["spec"], "thm3.2");
    assert_eq!(v["violations"], serde_json::json!([]));
    assert!(v["min_margin"].as_f64().unwrap() > -1e-9);
    for key in ["grid", "argmin", "equality_hits", "wall_time_s"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn verify_probe_finds_violations() {
    let o = run(&[
        "verify", "--spec", "thm3.4", "--probe", "--a", "0.9", "--n-max", "4",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let v = json(&o);
    assert!(v["violation_count"].as_u64().unwrap() > 0);
    assert!(v["argmin"]["x"].as_f64().unwrap() > 2.5);
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["verify", "--spec", "thm7.7"][..],
        &["verify", "--spec", "thm3.4", "--a", "0.5"],
        &["eval", "--sum", "S", "--n", "0", "--x", "1"],
        &["eval", "--sum", "nope", "--n", "1", "--x", "1"],
        &["cheb-integral", "--kind", "u", "--n", "2", "--x", "1.5"],
        &[
            "cheb-integral",
            "--kind",
            "u",
            "--n",
            "2",
            "--x",
            "0.5",
            "--nodes",
            "2",
        ],
        &[
            "sweep-a", "--spec", "thm3.4", "--a-min", "1", "--a-max", "0",
        ],
        &[],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?} wrote to stdout");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn sweep_reports_boundary_at_one() {
    let o = run(&[
        "sweep-a", "--spec", "thm3.4", "--a-min", "0.5", "--a-max", "1.5", "--steps", "100",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 101);
    for e in entries {
        let a = e["a"].as_f64().unwrap();
        assert_eq!(!e["counterexample_value"].is_null(), a < 1.0, "a = {a}");
    }
    assert_eq!(v["largest_a_with_counterexample"].as_f64(), Some(0.99));
    assert_eq!(v["smallest_a_without_counterexample"].as_f64(), Some(1.0));

    let o = run(&[
        "sweep-a", "--spec", "thm3.10", "--a-min", "0.9", "--a-max", "1.1", "--steps", "4",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        json(&o)["smallest_a_without_counterexample"].as_f64(),
        Some(1.0)
    );
}

#[test]
fn cheb_integral_reports_both_values() {
    let o = run(&["cheb-integral", "--kind", "tu", "--n", "0", "--x", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert!((v["closed_form"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!((v["quadrature"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    let o = run(&["cheb-integral", "--kind", "u", "--n", "30", "--x", "-0.9"]);
    let v = json(&o);
    assert!(v["abs_diff"].as_f64().unwrap() < 1e-8);
}

#[test]
fn crossing_prints_root() {
    let o = run(&["crossing"]);
    assert_eq!(o.status.code(), Some(0));
    let x: f64 = stdout(&o).trim().parse().unwrap();
    assert!((x - 2.204).abs() < 1e-3);
}

#[test]
fn deterministic_reports_are_byte_identical() {
    let args = [
        "verify",
        "--spec",
        "thm3.8",
        "--n-max",
        "6",
        "--x-steps",
        "63",
        "--deterministic",
    ];
    let one = turan()
        .args(args)
        .env("TURAN_THREADS", "1")
        .output()
        .unwrap();
    let three = turan()
        .args(args)
        .env("TURAN_THREADS", "3")
        .output()
        .unwrap();
    let again = turan().args(args).output().unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, three.stdout);
    assert_eq!(one.stdout, again.stdout);
    assert_eq!(json(&one)["wall_time_s"].as_f64(), Some(0.0));

    let bad = turan()
        .args(args)
        .env("TURAN_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn verify_all_writes_one_report_per_spec() {
    let path = scratch("all.json");
    let o = run(&[
        "verify",
        "--spec",
        "all",
        "--n-max",
        "4",
        "--x-steps",
        "31",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(o.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 22);
}

#[test]
fn report_csv_layout() {
    let o = run(&[
        "report",
        "--spec",
        "thm3.1",
        "--n-max",
        "3",
        "--a",
        "1",
        "--x-steps",
        "7",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,a,x,y,lhs,bound,margin"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    // n = 1 and n = 3, 7 nodes plus the pinned 2π/3
    assert_eq!(rows.len(), 16);
    assert!(rows.iter().all(|r| r.len() == 7 && r[3].is_empty()));

    let o = run(&[
        "report",
        "--spec",
        "thm3.7",
        "--n-max",
        "3",
        "--a",
        "1",
        "--x-steps",
        "3",
    ]);
    let text = stdout(&o);
    assert!(text
        .lines()
        .skip(1)
        .all(|l| !l.split(',').nth(3).unwrap().is_empty()));

    let path = scratch("margins.csv");
    let o = run(&[
        "report",
        "--spec",
        "eq4.4",
        "--n-max",
        "2",
        "--x-steps",
        "15",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let file = std::fs::read_to_string(&path).unwrap();
    assert!(file.starts_with("n,a,x,y,lhs,bound,margin\n"));

    let o = run(&[
        "report",
        "--spec",
        "eq4.4",
        "--n-max",
        "1",
        "--x-steps",
        "3",
        "--format",
        "json",
    ]);
    let v = json(&o);
    assert_eq!(v.as_array().unwrap().len(), 2 * 3);
}
