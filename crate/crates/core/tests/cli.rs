//! The installed binary: exit codes, output files and report round trips.

use finite_cone::verifier::{run_suite, Report, Verdict};
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finite-cone"))
        .args(args)
        .env_remove("FINITE_CONE_OUTPUT_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn tabulate_sample_lists() {
    let o = bin(&["tabulate", "--family", "uni-N", "-p", "10", "-n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n=0\t1\nn=1\t8*t - 1\nn=2\t42*t^2 - 14*t + 1\n");

    let o = bin(&[
        "tabulate",
        "--family",
        "cone-M",
        "-d",
        "1",
        "--mu",
        "0.5",
        "-p",
        "10",
        "-q",
        "0",
        "-n",
        "1",
        "--convention",
        "paper-gegenbauer",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "(n=0, m=0, k=0)\t1\n(n=1, m=0, k=0)\t7*t - 2\n(n=1, m=1, k=0)\tx\n"
    );
}

#[test]
fn tabulate_json_lists_norms() {
    let o = bin(&[
        "tabulate", "--family", "uni-M", "-p", "12", "-q", "0", "-n", "1", "--format", "json",
    ]);
    let rows: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rows[1]["polynomial"], "10*t - 1");
    assert_eq!(rows[0]["norm_sq"], 1.0);
}

#[test]
fn window_violation_exits_2() {
    let o = bin(&[
        "tabulate", "--family", "cone-M", "-p", "4", "-q", "0", "-n", "3",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("requires p > 2N+2μ+d"));
}

#[test]
fn config_errors_exit_2() {
    assert_eq!(
        bin(&["tabulate", "--family", "uni-M", "-p", "10", "--nope"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bin(&["tabulate", "--family", "ball"]).status.code(),
        Some(2)
    );
    let o = bin(&["tabulate", "--family", "uni-M", "-p", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("needs -q"));
}

#[test]
fn verify_all_passes_and_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = bin(&[
        "verify",
        "--suite",
        "all",
        "--family",
        "cone-M",
        "-d",
        "1",
        "--mu",
        "0.5",
        "-p",
        "30",
        "-q",
        "0",
        "-n",
        "4",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report = Report::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.schema_version, "1");
    assert!(report.passed());
    assert!(report.checks.iter().all(|c| !c.anchor.is_empty()));

    // Re-running the stored descriptor reproduces every metric bit for bit.
    let again = run_suite(report.suite, &report.descriptor, &report.thresholds).unwrap();
    let bits = |r: &Report| {
        r.checks
            .iter()
            .map(|c| c.metric.to_bits())
            .collect::<Vec<_>>()
    };
    assert_eq!(bits(&report), bits(&again));
}

#[test]
fn output_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_finite-cone"))
        .args([
            "verify", "--suite", "gram", "--family", "surf-N", "-d", "2", "-p", "25", "-n", "3",
            "--format", "csv",
        ])
        .env("FINITE_CONE_OUTPUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(dir.path().join("report-surf-N-gram.csv")).unwrap();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    let row = rows.iter().find(|r| &r[2] == "(n=1, m=0, l=0)").unwrap();
    let expected: f64 = row[4].parse().unwrap();
    assert!((expected - 1.0 / 21.0).abs() < 1e-15);
    assert_eq!(&row[7], "pass");
}

#[test]
fn limit_suite_reports_unit_exponents() {
    let o = bin(&[
        "verify",
        "--suite",
        "limit",
        "--family",
        "cone-M",
        "-d",
        "2",
        "-p",
        "30",
        "-q",
        "0",
        "-n",
        "3",
        "--p-grid",
        "1e2,1e3,1e4",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report = Report::from_json(&stdout(&o)).unwrap();
    let fitted: Vec<f64> = report.checks.iter().filter_map(|c| c.value).collect();
    assert!(!fitted.is_empty());
    assert!(fitted.iter().all(|k| (k - 1.0).abs() < 0.05), "{fitted:?}");
}

#[test]
fn boundary_probe_mode() {
    let args = [
        "verify", "--suite", "gram", "--family", "cone-M", "-p", "10", "-q", "0", "-n", "4",
    ];
    let o = bin(&args);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("requires p > 2N+2μ+d"));
    let o = bin(&[&args[..], &["--probe"]].concat());
    assert_eq!(o.status.code(), Some(0));
    let report = Report::from_json(&stdout(&o)).unwrap();
    assert_eq!(report.checks[0].verdict, Verdict::ExpectedFailure);
}

#[test]
fn tightened_threshold_fails_with_exit_1() {
    let o = bin(&[
        "verify",
        "--suite",
        "gram",
        "--family",
        "uni-M",
        "-p",
        "12",
        "-q",
        "0",
        "-n",
        "5",
        "--gram-diag-tol",
        "0",
        "--format",
        "text",
    ]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
}

#[test]
fn eval_points() {
    let base = [
        "eval",
        "--family",
        "cone-M",
        "-p",
        "10",
        "-q",
        "0",
        "--mu",
        "0.5",
        "--convention",
        "paper-gegenbauer",
    ];
    let o = bin(&[
        &base[..],
        &["--element", "1,1", "--point", "0.5,1", "--format", "json"],
    ]
    .concat());
    assert_eq!(o.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rows[0]["value"], 0.5);

    let o = bin(&[
        &base[..],
        &["--element", "0,0", "--point", "0.3,0.7", "--point", "-1,4"],
    ]
    .concat());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.ends_with("\t1")));

    let o = bin(&[&base[..], &["--element", "1,1", "--point", "2,1"]].concat());
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("domain error"));
}

#[test]
fn help_lists_windows() {
    let o = bin(&["verify", "--help"]);
    let help = stdout(&o);
    for window in [
        "p > 2N+1, q > -1",
        "p > 2N+2μ+d, q > -2μ-d",
        "p > 2N+d, q > -d",
        "β > -d",
    ] {
        assert!(help.contains(window), "{window}");
    }
}
