//! Byte-for-byte comparison of CLI output against frozen files.

mod common;

use std::fs;

#[test]
fn outputs_match_golden_files() {
    for (name, args) in common::CASES {
        let out = common::run(args);
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        let expected = fs::read(common::golden_path(name)).unwrap();
        assert_eq!(
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&expected),
            "{name}"
        );
    }
}

#[test]
fn repeated_runs_are_identical() {
    for (name, args) in common::CASES {
        assert_eq!(common::run(args).stdout, common::run(args).stdout, "{name}");
    }
}

#[test]
fn antisymmetry_violation_exits_one() {
    let out = common::run(&["-i", "tests/fixtures/antisymmetric.space", "dual", "--space", "Bad"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.starts_with("error: ") && err.contains("antisymmetric.space:1:"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn unknown_space_is_reported() {
    let out = common::run(&["-i", "tests/fixtures/basic.space", "dual", "--space", "Nope"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`Nope`"));
}

#[test]
fn timing_is_opt_in() {
    let args = ["-i", "tests/fixtures/basic.space", "dual", "--space", "S"];
    assert!(!String::from_utf8_lossy(&common::run(&args).stdout).contains("elapsed_ms"));
    let mut timed = args.to_vec();
    timed.push("--timing");
    assert!(String::from_utf8_lossy(&common::run(&timed).stdout).contains("elapsed_ms"));
}
