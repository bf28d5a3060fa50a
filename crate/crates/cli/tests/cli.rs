use std::process::Command;

use serde_json::Value;

fn liecohom(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_liecohom")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, stdout, stderr) = liecohom(&full);
    assert_eq!(code, 0, "{args:?}: {stderr}");
    serde_json::from_str(&stdout).expect("valid json")
}

fn payload(args: &[&str]) -> Value {
    json(args)["payload"].clone()
}

#[test]
fn info_reports_dimension_and_center() {
    let p = payload(&["info", "schrodinger:3"]);
    assert_eq!((p["dim"].as_u64(), p["center_dim"].as_u64()), (Some(10), Some(1)));
    assert_eq!(p["center_basis"], serde_json::json!(["z"]));
    let p = payload(&["info", "abelian:4"]);
    assert_eq!((p["dim"].as_u64(), p["center_dim"].as_u64()), (Some(4), Some(4)));
}

#[test]
fn jacobi_violation_in_file_exits_two_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"name": "bad", "basis": ["e", "f", "h"], "brackets": [
            {"left": 0, "right": 1, "result": [[2, "1"]]},
            {"left": 0, "right": 2, "result": [[0, "-1"]]},
            {"left": 1, "right": 2, "result": [[1, "2"]]}]}"#,
    )
    .unwrap();
    let spec = format!("file:{}", path.display());
    let (code, stdout, stderr) = liecohom(&["info", &spec]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.contains("(e, f, h)"), "{stderr}");
    assert!(stderr.contains("basis indices 0, 1, 2"), "{stderr}");
}

#[test]
fn good_file_round_trips_through_info() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sl2.json");
    std::fs::write(&path, lie_cohomology::catalog::serialize(&lie_cohomology::catalog::sl2())).unwrap();
    let p = payload(&["info", &format!("file:{}", path.display())]);
    assert_eq!(p["dim"].as_u64(), Some(3));
    assert_eq!(p["center_dim"].as_u64(), Some(0));
}

#[test]
fn cohomology_examples() {
    let h = |args: &[&str]| payload(args)["dim_cohomology"].as_u64().unwrap();
    assert_eq!(h(&["cohomology", "schrodinger:2", "--coeff", "trivial", "--degree", "2"]), 2);
    assert_eq!(h(&["cohomology", "schrodinger:4", "--coeff", "trivial", "--degree", "2"]), 9);
    assert_eq!(h(&["cohomology", "sl2", "--coeff", "adjoint", "--degree", "1"]), 0);
    assert_eq!(h(&["cohomology", "sl2", "--degree", "7"]), 0);
    let p = payload(&["cohomology", "heisenberg:1", "--degree", "2", "--representatives"]);
    assert_eq!(p["representatives"].as_array().unwrap().len(), 2);
}

#[test]
fn derivation_counts() {
    let p = payload(&["derivations", "schrodinger:3"]);
    assert_eq!((p["total"].as_u64(), p["inner"].as_u64(), p["outer"].as_u64()), (Some(13), Some(9), Some(4)));
}

#[test]
fn invariant_cohomology_example() {
    let p = payload(&[
        "invariant-cohomology",
        "--ambient",
        "schrodinger:2",
        "--levi",
        "sl2",
        "--radical",
        "heisenberg",
        "--coeff",
        "adjoint",
        "--degree",
        "2",
    ]);
    assert_eq!(p["dim_cohomology"].as_u64(), Some(1));
    assert_eq!(p["dim_invariant_cocycles"].as_u64(), Some(4));
    assert_eq!(p["dim_invariant_coboundaries"].as_u64(), Some(3));
}

#[test]
fn hs_check_example() {
    let p = payload(&["hs-check", "--ambient", "schrodinger-quotient:3", "--degree", "2"]);
    assert_eq!(p["agree"], Value::Bool(true));
    assert_eq!((p["direct"].as_u64(), p["factorized"].as_u64()), (Some(0), Some(0)));
}

#[test]
fn extension_from_cocycle_file() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("omega.json");
    // [x1, y1] picks up a central term: heisenberg from abelian
    std::fs::write(&good, r#"[[[0, 1], 0, "1"]]"#).unwrap();
    let p = payload(&["extend", "abelian:2", "--cocycle", good.to_str().unwrap()]);
    assert_eq!(p["extension_dim"].as_u64(), Some(3));
    assert_eq!(p["extension_center_dim"].as_u64(), Some(1));

    let bad = dir.path().join("bad.json");
    // φ(h, x1) = 1 on sch_1 is not closed
    std::fs::write(&bad, r#"[[[2, 3], 0, "1"]]"#).unwrap();
    let (code, _, stderr) = liecohom(&["extend", "schrodinger:1", "--cocycle", bad.to_str().unwrap()]);
    assert_eq!(code, 2, "{stderr}");
    assert!(stderr.contains("not a 2-cocycle"));

    let p = payload(&["extend", "schrodinger:2", "--representative", "0"]);
    assert_eq!(p["extension_dim"].as_u64(), Some(9));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(liecohom(&["cohomology", "sl2"]).0, 1);
    assert_eq!(liecohom(&["frobnicate"]).0, 1);
    assert_eq!(liecohom(&["verify-paper", "--n-max", "1"]).0, 1);
    assert_eq!(liecohom(&["invariant-cohomology", "--ambient", "schrodinger:2", "--levi", "q", "--degree", "1"]).0, 1);
    assert_eq!(liecohom(&["extend", "schrodinger:2", "--representative", "5"]).0, 1);
    assert_eq!(liecohom(&["--help"]).0, 0);
}

#[test]
fn unknown_algebras_exit_two() {
    assert_eq!(liecohom(&["info", "so3"]).0, 2);
    assert_eq!(liecohom(&["info", "heisenberg:0"]).0, 2);
    assert_eq!(liecohom(&["info", "file:/definitely/not/here.json"]).0, 2);
}

fn strip_elapsed(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("elapsed_seconds");
    v
}

#[test]
fn json_output_is_deterministic() {
    for args in [
        &["cohomology", "schrodinger:3", "--coeff", "adjoint", "--degree", "1", "--representatives"][..],
        &["verify-paper", "--n-max", "3"][..],
        &["property-check", "--seed", "11", "--trials", "20"][..],
    ] {
        let (a, b) = (json(args), json(args));
        assert_eq!(strip_elapsed(a), strip_elapsed(b));
    }
}

#[test]
fn table_and_json_carry_the_same_numbers() {
    let args = ["cohomology", "schrodinger:3", "--coeff", "trivial", "--degree", "2"];
    let p = payload(&args);
    let (_, table, _) = liecohom(&args);
    for (k, v) in p.as_object().unwrap() {
        let rendered = match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        assert!(
            table.lines().any(|l| l.starts_with(k.as_str()) && l.trim_end().ends_with(&rendered)),
            "{k} = {rendered} missing from\n{table}"
        );
    }
}

#[test]
fn verify_paper_flags_the_conflicting_value() {
    let (code, _, _) = liecohom(&["verify-paper", "--n-max", "2"]);
    assert_eq!(code, 0);
    let p = payload(&["verify-paper", "--n-max", "2"]);
    let rows = p["rows"].as_array().unwrap();
    let row = rows.iter().find(|r| r["claim"] == "dim H²(sch_2, sch_2)").unwrap();
    assert_eq!(row["status"], "DISCREPANCY");
    assert_eq!(row["computed"], "1");
    assert_eq!(row["expected"], "1 / 2");
    assert!(row["note"].as_str().unwrap().contains("supports the proposition"));
    assert_eq!(p["oracle_mismatches"].as_u64(), Some(0));
}

#[test]
fn property_check_passes() {
    let (code, stdout, _) = liecohom(&["property-check", "--seed", "3", "--trials", "30"]);
    assert_eq!(code, 0, "{stdout}");
}
