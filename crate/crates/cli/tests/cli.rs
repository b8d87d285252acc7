use std::process::{Command, Output};

use sccckit::{Status, VerificationReport};

fn sccckit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sccckit")).args(args).env_remove("SCCCKIT_SEED").output().expect("binary runs")
}

fn json_report(args: &[&str]) -> (VerificationReport, Output) {
    let mut full = args.to_vec();
    full.push("--json");
    let out = sccckit(&full);
    let report = VerificationReport::from_json(&String::from_utf8_lossy(&out.stdout)).expect("json on stdout");
    (report, out)
}

#[test]
fn sccc_suite_passes_with_exit_zero() {
    let (report, out) = json_report(&["verify", "sccc", "--model", "fdhilb", "--trials", "20", "--seed", "7"]);
    assert!(out.status.success());
    assert_eq!(report.schema, 1);
    assert_eq!((report.suite.as_str(), report.seed, report.trials), ("sccc", 7, 20));
    assert!(report.passed());
}

#[test]
fn broken_involution_fails_with_witness() {
    let (report, out) = json_report(&["verify", "sccc", "--model", "transpose-complex", "--trials", "20"]);
    assert_eq!(out.status.code(), Some(1));
    let failed = report.failures().next().expect("a failing check");
    assert!(failed.witness.as_ref().is_some_and(|w| !w.is_empty()));
}

#[test]
fn expected_failures_keep_exit_zero() {
    let (report, out) = json_report(&["verify", "prep-state", "--model", "fdhilb", "--trials", "10"]);
    assert!(out.status.success());
    assert!(report.results.iter().all(|r| r.status == Status::ExpectedFail));
    let (report, out) = json_report(&["verify", "prep-state", "--model", "wproj:fdhilb", "--trials", "10"]);
    assert!(out.status.success());
    assert!(report.results.iter().all(|r| r.status == Status::Pass));
}

#[test]
fn shorthand_commands_match_verify() {
    let a = sccckit(&["wproj", "check", "--trials", "10", "--json"]);
    let b = sccckit(&["verify", "wproj", "--trials", "10", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let a = sccckit(&["born", "verify", "--nu", "1/2", "--trials", "10", "--json"]);
    let b = sccckit(&["verify", "born", "--nu", "0.5", "--trials", "10", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(sccckit(&["ortho", "verify", "--model", "rel", "--trials", "10"]).status.success());
}

#[test]
fn unknown_model_is_a_usage_error() {
    let out = sccckit(&["verify", "ortho", "--model", "wproj:fdhilb"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("unknown model") && err.contains("Usage"), "{err}");
    assert_eq!(sccckit(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(sccckit(&["verify", "born", "--nu", "3"]).status.code(), Some(2));
}

#[test]
fn teleport_single_state_reports_branches() {
    let (report, out) = json_report(&["protocol", "teleport", "--model", "fdhilb", "--state", "[[1,0],[0,0]]"]);
    assert!(out.status.success());
    let branch = report.get("branch-2").unwrap();
    let literal = &branch.witness.as_ref().unwrap()[0];
    let expected = [[0.5, 0.0], [0.0, 0.0]];
    for (row, want) in literal.entries.iter().zip(expected) {
        assert!((row[0][0] - want[0]).abs() < 1e-12 && (row[0][1] - want[1]).abs() < 1e-12);
    }
    assert!(branch.detail.as_ref().unwrap().contains("0.25"));
}

#[test]
fn malformed_state_is_an_error() {
    let out = sccckit(&["protocol", "teleport", "--state", "[[1,0]"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));
    let out = sccckit(&["protocol", "teleport", "--state", "[[1,0],[0,0],[0,0]]"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn json_file_and_text_summary() {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("equivalence.json");
    let out = sccckit(&[
        "verify",
        "equivalence",
        "--model",
        "corrupt-trace:fdhilb",
        "--trials",
        "20",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("XFAIL ortho-bornian"), "{text}");
    let report = VerificationReport::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.get("verdicts-agree").unwrap().status, Status::Pass);
    assert_eq!(VerificationReport::from_json(&report.to_json()).unwrap(), report);
}

#[test]
fn seed_from_environment() {
    let with_env = Command::new(env!("CARGO_BIN_EXE_sccckit"))
        .args(["verify", "ortho", "--trials", "5", "--json"])
        .env("SCCCKIT_SEED", "99")
        .output()
        .unwrap();
    let (report, _) = json_report(&["verify", "ortho", "--trials", "5", "--seed", "99"]);
    assert_eq!(VerificationReport::from_json(&String::from_utf8_lossy(&with_env.stdout)).unwrap(), report);
    assert_eq!(report.seed, 99);
}
