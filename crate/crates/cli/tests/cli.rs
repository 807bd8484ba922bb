//! End-to-end tests of the `precy` binary: exit-code contract, report
//! determinism, and the conversion round trip at the file level.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::Arc;

use precy_core::io;
use precy_core::scalar::Scalar;
use precy_core::{fixtures, DoubleBracket};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_precy")
}

fn fixture(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join("fixtures")
        .join(rel)
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_paths(args: &[&dyn AsRef<Path>], extra: &[&str]) -> Output {
    let mut cmd = Command::new(bin());
    for a in args {
        cmd.arg(a.as_ref());
    }
    cmd.args(extra);
    cmd.output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn check_algebra_passes_on_bundled_fixture() {
    let alg = fixture("algebras/dual_numbers.json");
    let out = run_paths(&[&"check-algebra", &alg], &[]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn check_algebra_fails_with_witness_on_mutation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    // u·u = x, x·x = x: not associative
    std::fs::write(
        &path,
        r#"{
  "schema_version": 1,
  "name": "mutant",
  "dim": 2,
  "basis": ["u", "x"],
  "structure_constants": [[0, 0, 1, "1"], [1, 1, 1, "1"]]
}
"#,
    )
    .unwrap();
    let out = run_paths(&[&"check-algebra", &path], &[]);
    assert_eq!(code(&out), 1);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("associativity"));
    assert!(text.contains("FAIL"));
}

#[test]
fn malformed_json_is_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{ not json").unwrap();
    let out = run_paths(&[&"check-algebra", &path], &[]);
    assert_eq!(code(&out), 2);
}

#[test]
fn missing_schema_version_is_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("unversioned.json");
    std::fs::write(
        &path,
        r#"{"name": "x", "dim": 1, "basis": ["1"], "structure_constants": []}"#,
    )
    .unwrap();
    let out = run_paths(&[&"check-algebra", &path], &[]);
    assert_eq!(code(&out), 2);
}

#[test]
fn check_bracket_exit_codes() {
    let alg = fixture("algebras/dual_numbers.json");
    for (bracket, expect) in [
        ("brackets/dual_numbers_nontrivial.json", 0),
        ("brackets/dual_numbers_zero.json", 0),
    ] {
        let out = run_paths(&[&"check-bracket", &alg, &fixture(bracket)], &[]);
        assert_eq!(code(&out), expect, "{bracket}");
    }
}

#[test]
fn jacobi_mutated_bracket_fails_naming_the_identity() {
    let dir = tempfile::tempdir().unwrap();
    let alg_path = dir.path().join("alg.json");
    let bracket_path = dir.path().join("bracket.json");
    let alg = Arc::new(fixtures::truncated_poly3());
    io::save_algebra(&alg_path, &alg).unwrap();
    let d = fixtures::truncated_poly3_bracket(&alg, 0, 1, 0);
    io::save_bracket(&bracket_path, &d).unwrap();
    let out = run_paths(&[&"check-bracket", &alg_path, &bracket_path], &[]);
    assert_eq!(code(&out), 1);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("double-jacobi"), "{text}");
    assert!(text.contains("FAIL"));
}

#[test]
fn conversion_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let alg = fixture("algebras/dual_numbers.json");
    let bracket = fixture("brackets/dual_numbers_nontrivial.json");
    let m3 = dir.path().join("m3.json");
    let back = dir.path().join("back.json");

    let out = run_paths(&[&"to-precy", &alg, &bracket, &m3], &[]);
    assert_eq!(code(&out), 0);
    let out = run_paths(&[&"from-precy", &alg, &m3, &back], &[]);
    assert_eq!(code(&out), 0);

    let original = std::fs::read(&bracket).unwrap();
    let restored = std::fs::read(&back).unwrap();
    assert_eq!(original, restored);
}

#[test]
fn to_precy_of_zero_bracket_has_no_components() {
    let dir = tempfile::tempdir().unwrap();
    let alg = fixture("algebras/dual_numbers.json");
    let bracket = fixture("brackets/dual_numbers_zero.json");
    let m3 = dir.path().join("zero_m3.json");
    let out = run_paths(&[&"to-precy", &alg, &bracket, &m3], &[]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(&m3).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed["components"].as_array().unwrap().len(), 0);
}

#[test]
fn from_precy_rejects_type_a_components() {
    let dir = tempfile::tempdir().unwrap();
    let alg = fixture("algebras/dual_numbers.json");
    let m3 = dir.path().join("type_a.json");
    std::fs::write(
        &m3,
        r#"{
  "schema_version": 1,
  "dim": 2,
  "components": [
    {
      "inputs": ["A", "A", "A*"],
      "output": "A",
      "entries": [[0, 0, 0, 0, "1"]]
    }
  ]
}
"#,
    )
    .unwrap();
    let out = run_paths(
        &[&"from-precy", &alg, &m3, &dir.path().join("out.json")],
        &[],
    );
    assert_eq!(code(&out), 1);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("A, A, A*"), "{err}");
}

#[test]
fn check_precy_on_zero_and_converted_operations() {
    let dir = tempfile::tempdir().unwrap();
    let alg = fixture("algebras/upper_triangular2.json");
    let m3 = dir.path().join("zero.json");
    std::fs::write(
        &m3,
        "{\n  \"schema_version\": 1,\n  \"dim\": 3,\n  \"components\": []\n}\n",
    )
    .unwrap();
    let out = run_paths(&[&"check-precy", &alg, &m3], &[]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));

    let alg = fixture("algebras/dual_numbers.json");
    let bracket = fixture("brackets/dual_numbers_nontrivial.json");
    let converted = dir.path().join("m3.json");
    run_paths(&[&"to-precy", &alg, &bracket, &converted], &[]);
    let out = run_paths(&[&"check-precy", &alg, &converted], &[]);
    assert_eq!(code(&out), 0);
}

#[test]
fn check_precy_flags_leibniz_mutation_at_arity_4_only() {
    // bracket coupling the unit: [[1, x]] = 1⊗1, [[x, 1]] = −1⊗1 is
    // antisymmetric and Jacobi-clean but breaks the Leibniz rule, so the
    // converted operation must fail exactly in arity 4
    let dir = tempfile::tempdir().unwrap();
    let alg = Arc::new(fixtures::dual_numbers());
    let mut entries = std::collections::BTreeMap::new();
    entries.insert([0, 1, 0, 0], Scalar::one());
    entries.insert([1, 0, 0, 0], -Scalar::one());
    let d = DoubleBracket::new(Arc::clone(&alg), entries).unwrap();
    assert!(d.check_antisymmetry().pass);
    assert!(!d.check_leibniz_outer().pass);
    assert!(d.check_double_jacobi().pass);

    let alg_path = dir.path().join("alg.json");
    let bracket_path = dir.path().join("bracket.json");
    let m3_path = dir.path().join("m3.json");
    io::save_algebra(&alg_path, &alg).unwrap();
    io::save_bracket(&bracket_path, &d).unwrap();
    let out = run_paths(&[&"to-precy", &alg_path, &bracket_path, &m3_path], &[]);
    assert_eq!(code(&out), 0);

    let out = run_paths(
        &[&"--format", &"json", &"check-precy", &alg_path, &m3_path],
        &[],
    );
    assert_eq!(code(&out), 1);
    let report: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("json report parses");
    assert_eq!(report["cyclicity"]["pass"], true);
    assert_eq!(report["maurer_cartan"]["arity3"]["pass"], true);
    assert_eq!(report["maurer_cartan"]["arity4"]["pass"], false);
    assert_eq!(report["maurer_cartan"]["arity5"]["pass"], true);
}

#[test]
fn correspondence_reports_consistent_failure_with_exit_0() {
    let dir = tempfile::tempdir().unwrap();
    let alg = Arc::new(fixtures::truncated_poly3());
    let alg_path = dir.path().join("alg.json");
    let bracket_path = dir.path().join("bracket.json");
    io::save_algebra(&alg_path, &alg).unwrap();
    io::save_bracket(
        &bracket_path,
        &fixtures::truncated_poly3_bracket(&alg, 1, 0, 2),
    )
    .unwrap();
    let out = run_paths(&[&"correspondence", &alg_path, &bracket_path], &[]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("both sides fail consistently"), "{text}");
}

#[test]
fn correspondence_passes_on_fixture() {
    let out = run_paths(
        &[
            &"correspondence",
            &fixture("algebras/dual_numbers.json"),
            &fixture("brackets/dual_numbers_nontrivial.json"),
        ],
        &[],
    );
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("both sides pass"));
}

#[test]
fn rep_command_passes_on_dual_numbers() {
    let out = run_paths(
        &[
            &"rep",
            &fixture("algebras/dual_numbers.json"),
            &fixture("brackets/dual_numbers_nontrivial.json"),
            &fixture("seeds/dual_numbers_seeds.json"),
        ],
        &["--n", "2", "--samples", "30"],
    );
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn rep_rejects_unfillable_size() {
    let dir = tempfile::tempdir().unwrap();
    // seeds of size 2 only cannot fill size 3
    let alg = Arc::new(fixtures::dual_numbers());
    let seeds_path = dir.path().join("seeds.json");
    std::fs::write(
        &seeds_path,
        r#"{
  "schema_version": 1,
  "seeds": [
    {
      "n": 2,
      "matrices": {
        "1": [["1", "0"], ["0", "1"]],
        "x": [["0", "1"], ["0", "0"]]
      }
    }
  ]
}
"#,
    )
    .unwrap();
    let _ = alg;
    let out = run_paths(
        &[
            &"rep",
            &fixture("algebras/dual_numbers.json"),
            &fixture("brackets/dual_numbers_nontrivial.json"),
            &seeds_path,
        ],
        &["--n", "3", "--samples", "2"],
    );
    assert_eq!(code(&out), 2);
}

#[test]
fn mc_terms_marks_exactly_the_two_alternating_rows() {
    let out = run(&["--format", "json", "mc-terms", "--arity", "5"]);
    assert_eq!(code(&out), 0);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let equations = report["equations"].as_array().unwrap();
    assert_eq!(equations.len(), 32);
    let pure: Vec<String> = equations
        .iter()
        .filter(|e| e["class"] == "PureXX")
        .map(|e| {
            e["row"]
                .as_array()
                .unwrap()
                .iter()
                .map(|s| s.as_str().unwrap().to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    assert_eq!(pure, vec!["A,A*,A,A*,A", "A*,A,A*,A,A*"]);
}

#[test]
fn algebra_bracket_mismatch_is_exit_2() {
    let out = run_paths(
        &[
            &"check-bracket",
            &fixture("algebras/k_times_k.json"),
            &fixture("brackets/dual_numbers_nontrivial.json"),
        ],
        &[],
    );
    assert_eq!(code(&out), 2);
}

#[test]
fn json_reports_are_byte_identical_across_runs() {
    let args: Vec<&str> = vec!["--format", "json", "--seed", "11"];
    let rep_args = ["rep", "--n", "2", "--samples", "15"];
    let mut runs = Vec::new();
    for _ in 0..3 {
        let mut cmd = Command::new(bin());
        cmd.args(&args);
        cmd.arg(rep_args[0]);
        cmd.arg(fixture("algebras/dual_numbers.json"));
        cmd.arg(fixture("brackets/dual_numbers_nontrivial.json"));
        cmd.arg(fixture("seeds/dual_numbers_seeds.json"));
        cmd.args(&rep_args[1..]);
        let out = cmd.output().unwrap();
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        runs.push(out.stdout);
    }
    assert_eq!(runs[0], runs[1]);
    assert_eq!(runs[1], runs[2]);

    // and a different seed changes the sampled points but not validity
    let mut cmd = Command::new(bin());
    cmd.args(["--format", "json", "--seed", "12", "rep"]);
    cmd.arg(fixture("algebras/dual_numbers.json"));
    cmd.arg(fixture("brackets/dual_numbers_nontrivial.json"));
    cmd.arg(fixture("seeds/dual_numbers_seeds.json"));
    cmd.args(["--n", "2", "--samples", "15"]);
    let out = cmd.output().unwrap();
    assert_eq!(code(&out), 0);
}

#[test]
fn jobs_flag_does_not_change_output() {
    let make = |jobs: &str| {
        let mut cmd = Command::new(bin());
        cmd.args(["--format", "json", "--jobs", jobs, "check-precy"]);
        cmd.arg(fixture("algebras/dual_numbers.json"));
        let dir = tempfile::tempdir().unwrap();
        let m3 = dir.path().join("m3.json");
        let conv = Command::new(bin())
            .arg("to-precy")
            .arg(fixture("algebras/dual_numbers.json"))
            .arg(fixture("brackets/dual_numbers_nontrivial.json"))
            .arg(&m3)
            .output()
            .unwrap();
        assert!(conv.status.success());
        cmd.arg(&m3);
        cmd.output().unwrap().stdout
    };
    assert_eq!(make("1"), make("4"));
}
