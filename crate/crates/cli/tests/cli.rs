// Copyright 2026 The gateset Authors
// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;
use std::process::Command;

use gateset_cli::{run, Certificate, Report, Verdict, SCHEMA_VERSION};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn gateset(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_gateset"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json_report(args: &[&str]) -> (i32, Report) {
    let mut argv = vec!["gateset"];
    argv.extend_from_slice(args);
    argv.extend_from_slice(&["--output", "json"]);
    let out = run(argv);
    let report: Report = serde_json::from_str(&out.stdout).expect("valid report JSON");
    (out.exit_code, report)
}

#[test]
fn ht_is_universal() {
    let (code, stdout, _) = gateset(&["grp-universal", "--input", &data("ht.json")]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("verdict: Yes"));
}

#[test]
fn hs_is_not_universal() {
    let (code, stdout, _) = gateset(&["grp-universal", "--input", &data("hs.json")]);
    assert_eq!(code, 1, "{stdout}");
    assert!(stdout.contains("finite: true"));
}

#[test]
fn xz_membership_fails() {
    let (code, stdout, _) = gateset(&["alg-member", "--input", &data("xz.json")]);
    assert_eq!(code, 1, "{stdout}");
    let (code, _) = json_report(&[
        "alg-member",
        "--input",
        &data("xz.json"),
        "--projector",
        "x2",
    ]);
    assert_eq!(code, 1);
}

#[test]
fn bad_flags_exit_3_with_usage() {
    let (code, stdout, stderr) =
        gateset(&["grp-universal", "--input", &data("ht.json"), "--bogus"]);
    assert_eq!(code, 3);
    assert!(stdout.is_empty());
    assert!(stderr.contains("Usage"));
    let (code, _, _) = gateset(&["grp-universal"]);
    assert_eq!(code, 3);
    let (code, _, _) = gateset(&["frobnicate"]);
    assert_eq!(code, 3);
    let (code, _, _) = gateset(&[
        "grp-universal",
        "--input",
        &data("ht.json"),
        "--budget",
        "many",
    ]);
    assert_eq!(code, 3);
    let (code, _, _) = gateset(&[]);
    assert_eq!(code, 3);
}

#[test]
fn help_and_version_succeed() {
    let (code, stdout, _) = gateset(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("grp-universal"));
    let (code, stdout, _) = gateset(&["--version"]);
    assert_eq!(code, 0);
    assert!(stdout.contains(env!("CARGO_PKG_VERSION")));
}

#[test]
fn input_errors_exit_3_with_report() {
    let (code, report) = json_report(&["grp-universal", "--input", "/nonexistent.json"]);
    assert_eq!(code, 3);
    assert_eq!(report.verdict, Verdict::Error);
    assert!(report.error.is_some());

    let (code, report) = json_report(&[
        "grp-universal",
        "--input",
        &data("ht.json"),
        "--no-normalize",
    ]);
    assert_eq!(code, 3);
    assert!(report.error.unwrap().contains("special unitary"));

    let (code, _) = json_report(&[
        "grp-universal",
        "--input",
        &data("ht.json"),
        "--tol-dedup",
        "2.0",
    ]);
    assert_eq!(code, 3);
}

#[test]
fn hypothesis_errors_exit_3() {
    // the generated algebra u(1) is not simple
    let dir = std::env::temp_dir().join(format!("gateset-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("u1.json");
    std::fs::write(
        &path,
        r#"{"d": 2, "problem": "subgroup_universality",
            "hamiltonians": [[[[0.3, 0], [0, 0]], [[0, 0], [-0.3, 0]]]]}"#,
    )
    .unwrap();
    let (code, report) = json_report(&["sub-universal", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 3);
    assert!(report.error.unwrap().contains("simple"));
}

#[test]
fn json_report_round_trips_and_agrees_with_text() {
    for args in [
        vec!["grp-universal", "--input", &data("ht.json")[..]],
        vec!["grp-universal", "--input", &data("hs.json")[..]],
        vec!["alg-member", "--input", &data("xz.json")[..]],
        vec!["alg-universal", "--input", &data("cnot_local.json")[..]],
        vec!["grp-member", "--input", &data("member_yes.json")[..]],
        vec![
            "grp-member",
            "--input",
            &data("member_undecidable.json")[..],
        ],
        vec!["sub-universal", "--input", &data("subgroup_su3.json")[..]],
        vec!["info", "--input", &data("ht.json")[..]],
        vec!["verify-appendix", "--samples", "5"],
    ] {
        let (code, report) = json_report(&args);
        assert_eq!(report.schema, SCHEMA_VERSION);
        assert_eq!(code, report.verdict.exit_code());
        let again: Report = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(again, report);

        let mut argv = vec!["gateset"];
        argv.extend_from_slice(&args);
        let text = run(argv);
        assert_eq!(text.exit_code, code);
        assert!(
            text.stdout
                .contains(&format!("verdict: {:?}", report.verdict)),
            "{}",
            text.stdout
        );
    }
}

#[test]
fn exit_codes_depend_only_on_verdict() {
    assert_eq!(Verdict::Yes.exit_code(), 0);
    assert_eq!(Verdict::Ok.exit_code(), 0);
    assert_eq!(Verdict::No.exit_code(), 1);
    assert_eq!(Verdict::Inconclusive.exit_code(), 2);
    assert_eq!(Verdict::Error.exit_code(), 3);
}

#[test]
fn certificates_carry_dimensions() {
    let (code, report) = json_report(&["alg-universal", "--input", &data("cnot_local.json")]);
    assert_eq!(code, 1);
    match report.certificate.unwrap() {
        Certificate::Algebra {
            verdict,
            generated_dim,
            ..
        } => {
            assert_eq!(generated_dim, 3);
            assert!(!verdict.commutant.equal);
            assert!(verdict.witness.is_some());
        }
        c => panic!("unexpected certificate {c:?}"),
    }

    let (code, report) = json_report(&["grp-member", "--input", &data("member_undecidable.json")]);
    assert_eq!(code, 2);
    match report.certificate.unwrap() {
        Certificate::Group(v) => {
            let d = v.diagram.unwrap();
            assert!(!d.decidable);
        }
        c => panic!("unexpected certificate {c:?}"),
    }
}

#[test]
fn inconclusive_reports_budget() {
    let (code, report) = json_report(&[
        "sub-universal",
        "--input",
        &data("subgroup_su3.json"),
        "--max-word-length",
        "0",
    ]);
    assert_eq!(code, 2);
    match report.certificate.unwrap() {
        Certificate::Group(v) => {
            let b = v.budget.unwrap();
            assert_eq!(b.max_word_length, 0);
            assert!(!b.is_finite);
        }
        c => panic!("unexpected certificate {c:?}"),
    }
}

#[test]
fn group_membership_and_subgroup_answers() {
    let (code, _) = json_report(&["grp-member", "--input", &data("member_yes.json")]);
    assert_eq!(code, 0);
    let (code, _) = json_report(&["sub-universal", "--input", &data("subgroup_su3.json")]);
    assert_eq!(code, 0);
}

#[test]
fn info_summarizes() {
    let (code, report) = json_report(&["info", "--input", &data("subgroup_su3.json")]);
    assert_eq!(code, 0);
    match report.certificate.unwrap() {
        Certificate::Info(s) => {
            assert_eq!(s.algebra_dim, 8);
            assert_eq!(s.generated_dim, Some(3));
            assert_eq!(s.gate_labels.len(), 2);
        }
        c => panic!("unexpected certificate {c:?}"),
    }
}

#[test]
fn thread_cap_does_not_change_results() {
    let args = [
        "grp-universal",
        "--input",
        &data("hs.json")[..],
        "--output",
        "json",
    ];
    let strip = |s: &str| {
        let mut r: Report = serde_json::from_str(s).unwrap();
        r.timing_ms = 0.0;
        r
    };
    let one = Command::new(env!("CARGO_BIN_EXE_gateset"))
        .args(args)
        .env("GATESET_ORACLE_THREADS", "1")
        .output()
        .unwrap();
    let many = Command::new(env!("CARGO_BIN_EXE_gateset"))
        .args(args)
        .env("GATESET_ORACLE_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(one.status.code(), Some(1));
    assert_eq!(
        strip(std::str::from_utf8(&one.stdout).unwrap()),
        strip(std::str::from_utf8(&many.stdout).unwrap())
    );
}

#[test]
fn appendix_with_no_samples_passes() {
    let (code, report) = json_report(&["verify-appendix", "--samples", "0"]);
    assert_eq!(code, 0);
    match report.certificate.unwrap() {
        Certificate::Appendix(a) => {
            assert!(a.all_passed);
            assert!(a.tightness.is_none());
        }
        c => panic!("unexpected certificate {c:?}"),
    }
}
