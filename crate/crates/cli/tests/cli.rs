use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn hgx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hgx")).args(args).output().expect("run hgx")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json_report(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = hgx(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("bad JSON from {args:?}: {e}"));
    (code(&out), v)
}

fn scratch(name: &str, contents: &Value) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hgx-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, serde_json::to_string(contents).unwrap()).unwrap();
    path
}

#[test]
fn sweedler_passes() {
    let (c, v) = json_report(&["verify-hopf", "--preset", "sweedler"]);
    assert_eq!(c, 0);
    assert_eq!(v["details"]["antipode_order"], 4);
    assert_eq!(v["details"]["unimodular"], false);
}

#[test]
fn fiber_at_zero_is_not_galois() {
    let (c, v) = json_report(&["galois", "--preset", "qzn", "--n", "2", "--at", "fiber@0"]);
    assert_eq!(c, 1);
    assert_eq!(v["details"]["not_in_image"], "1⊗t");
    assert_eq!(v["checks"][0]["witness"], "1⊗t is not in the image");
}

#[test]
fn non_normal_cubic_has_one_structure() {
    let (c, v) = json_report(&["gp", "--group", "S3", "--subgroup", "(12)"]);
    assert_eq!(c, 0);
    assert_eq!(v["details"]["count"], 1);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(code(&hgx(&["verify-hopf", "--preset", "nonsense"])), 2);
    assert_eq!(code(&hgx(&["gp", "--group", "S3", "--subgroup", "(1234)"])), 2);
    assert_eq!(code(&hgx(&["galois", "--preset", "quaternions", "--at", "fiber@1"])), 2);
    assert_eq!(code(&hgx(&["no-such-command"])), 2);
    let broken = scratch("broken.json", &serde_json::json!({"field": {"kind": "Q"}, "dim": 2}));
    assert_eq!(code(&hgx(&["verify-hopf", "--file", broken.to_str().unwrap()])), 2);
}

#[test]
fn hopf_json_round_trips() {
    for args in [["--preset", "sweedler", "--group", "Z2"], ["--preset", "dual-group", "--group", "S3"]] {
        let mut cmd = vec!["verify-hopf", "--dump"];
        cmd.extend(args);
        let (c, v) = json_report(&cmd);
        assert_eq!(c, 0);
        let path = scratch("hopf.json", &v["details"]["hopf"]);
        let (c2, v2) = json_report(&["verify-hopf", "--file", path.to_str().unwrap(), "--dump"]);
        assert_eq!(c2, 0);
        assert_eq!(v2["details"]["hopf"], v["details"]["hopf"]);
    }
}

#[test]
fn comodule_json_round_trips_over_laurent_polynomials() {
    let (c, v) = json_report(&["verify-comodule", "--preset", "qzn", "--n", "3", "--dump"]);
    assert_eq!(c, 0);
    let u = &v["details"]["comodule"];
    assert_eq!(u["ring"]["kind"], "laurent");
    assert!(u["algebra"]["mult"].to_string().contains("\"q\""));
    let path = scratch("qzn3.json", u);
    let file = path.to_str().unwrap();
    let (c, back) = json_report(&["verify-comodule", "--file", file, "--dump"]);
    assert_eq!(c, 0);
    assert_eq!(&back["details"]["comodule"], u);
    let (c, _) = json_report(&["galois", "--file", file]);
    assert_eq!(c, 0);
    let (c, _) = json_report(&["galois", "--file", file, "--at", "fiber@0"]);
    assert_eq!(c, 1);
}

#[test]
fn reports_are_deterministic() {
    let run = || {
        let (_, mut v) = json_report(&["trivialize", "--preset", "conjugated", "--seed", "7"]);
        v["timing_ms"] = Value::Null;
        v
    };
    assert_eq!(run(), run());
}

#[test]
fn obstructed_family_fails_with_a_witness() {
    let (c, v) = json_report(&["trivialize", "--preset", "obstructed"]);
    assert_eq!(c, 1);
    assert_eq!(v["details"]["obstruction_order"], 1);
}

#[test]
fn frobeniusized_trivial_connection() {
    let (c, v) = json_report(&["connections", "--preset", "qzn", "--n", "2"]);
    assert_eq!(c, 0);
    assert_eq!(v["details"]["frobeniusized"], serde_json::json!([["0", "0"], ["0", "1/2*q^-1"]]));
    let given = r#"[["0","0"],["0","1/2*q^-1"]]"#;
    let (c, v) = json_report(&["connections", "--preset", "qzn", "--n", "2", "--matrix", given]);
    assert_eq!(c, 0);
    assert_eq!(v["details"]["properties"]["multiplicative"], true);
}

#[test]
fn other_commands_pass_on_their_presets() {
    for args in [
        vec!["verify-comodule", "--preset", "quaternions"],
        vec!["twisted", "--preset", "qzn", "--n", "3"],
        vec!["twisted", "--preset", "trivial", "--group", "S3", "--convention", "standard"],
        vec!["cleft", "--preset", "qzn", "--n", "2", "--at", "fiber@2"],
        vec!["specialize", "--preset", "qzn", "--n", "2", "--at", "jet@1^3"],
        vec!["frobenius", "--preset", "sweedler"],
        vec!["mu", "--preset", "quaternions"],
        vec!["hh1", "--preset", "matrices"],
        vec!["trivialize", "--preset", "constant"],
        vec!["glue", "--preset", "product"],
        vec!["glue", "--preset", "jet"],
        vec!["gallery", "--criterion", "10"],
    ] {
        let out = hgx(&args);
        assert_eq!(code(&out), 0, "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    }
}
