use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_biliaison"));
    c.env_remove("BILIAISON_SEED");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

#[test]
fn formulas_table() {
    let o = run(&["formulas", "--m", "2", "--n", "3", "--t", "2", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let f = &v["formulas"];
    assert_eq!(f["expected_codim"], 2);
    assert_eq!(f["minor_count"], "3");
    assert_eq!(f["ladder_minor_count"], "1");
    assert_eq!(f["cm_type"], "2");
    assert_eq!(f["gorenstein"], false);
    assert_eq!(f["ci_full_minors"], "not-ci");
    assert_eq!(f["ci_ladder"], "complete-intersection");

    let o = run(&["formulas", "--m", "4", "--n", "4", "--t", "4"]);
    assert!(stdout(&o).contains("CompleteIntersection"));
    assert_eq!(code(&run(&["formulas", "--m", "3", "--n", "2", "--t", "2"])), 4);
}

#[test]
fn verify_ladder_exits_zero() {
    let o = run(&["verify", "ladder", "--m", "3", "--n", "3", "--t", "2", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["reports"][0]["computed_height"], 3);
    assert_eq!(v["reports"][0]["predicted_height"], 3);
    assert_eq!(v["reports"][0]["verdict"], "match");
    assert_eq!(v["config"]["seed"], 0);
}

#[test]
fn every_statement_runs_on_small_generic_matrices() {
    for s in ["codim", "gooddet", "del", "ci", "ladder", "laddcanc", "herzog-trung", "detgci"] {
        let o = run(&["verify", s, "--generic", "2", "3", "--t", "2"]);
        assert_eq!(code(&o), 0, "{s}: {}", stdout(&o));
    }
    let o = run(&["verify", "ci", "--m", "3", "--n", "3", "--t", "2", "--all-positions", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["reports"].as_array().unwrap().len(), 9);
}

#[test]
fn chain_writes_reproducible_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = run(&["chain", "--generic", "3", "3", "--t", "2", "--seed", "7", "--json-out", p.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
    }
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let v: Value = serde_json::from_slice(&ta).unwrap();
    assert_eq!(v["steps"].as_array().unwrap().len(), 1);
    assert_eq!(v["steps"][0]["shift_a"], 1);
    assert_eq!(v["steps"][0]["ratio_all_zero"], true);
    assert_eq!(v["terminal"]["is_ci"], true);
    assert_eq!(v["status"]["state"], "certified");
    assert_eq!(v["params"]["master_seed"], 7);
}

#[test]
fn env_seed_is_used_and_flag_wins() {
    let o = bin()
        .env("BILIAISON_SEED", "42")
        .args(["verify", "del", "--generic", "2", "3", "--t", "2", "--json"])
        .output()
        .unwrap();
    assert_eq!(json(&o)["config"]["seed"], 42);
    let o = bin()
        .env("BILIAISON_SEED", "42")
        .args(["verify", "del", "--generic", "2", "3", "--t", "2", "--json", "--seed", "5"])
        .output()
        .unwrap();
    assert_eq!(json(&o)["config"]["seed"], 5);
}

#[test]
fn generate_round_trips_through_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    let o = run(&["generate", "generic", "2", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("field: F 32003\nvars: 6\ndims: 2 3\nx0, x1, x2\n"));
    let o = run(&["check", "--matrix", path.to_str().unwrap(), "--t", "2"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));

    let o = run(&["generate", "hyper", "x0", "3"]);
    assert_eq!(stdout(&o), "field: F 32003\nvars: 1\ndims: 3 3\nx0, 0, 0\n0, x0, 0\n0, 0, x0\n");

    let args = ["generate", "random", "--row-degrees", "1,1", "--col-degrees", "1,1", "--vars", "3", "--seed", "9"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn matrix_file_field_wins() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.txt");
    std::fs::write(&path, "field: Q\nvars: 4\ndims: 2 2\nx0, x1\nx2, x3\n").unwrap();
    let o = run(&["check", "--matrix", path.to_str().unwrap(), "--t", "2", "--field", "Fp:101", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["config"]["field"], "Q");
    assert!(v["field_note"].as_str().unwrap().contains("Fp:101"));
}

#[test]
fn exit_code_contract() {
    let dir = tempfile::tempdir().unwrap();

    // 2: mismatch (identical columns give a zero 2-minor ideal)
    let flat = dir.path().join("flat.txt");
    std::fs::write(&flat, "field: Q\nvars: 1\ndims: 2 2\nx0, x0\nx0, x0\n").unwrap();
    let o = run(&["check", "--matrix", flat.to_str().unwrap(), "--t", "2", "--json"]);
    assert_eq!(code(&o), 2);
    assert_eq!(json(&o)["reports"][0]["verdict"], "mismatch");
    assert_eq!(code(&run(&["verify", "gooddet", "--matrix", flat.to_str().unwrap(), "--t", "2"])), 2);

    // 3: budget
    let o = run(&["verify", "codim", "--m", "3", "--n", "3", "--t", "2", "--budget", "1"]);
    assert_eq!(code(&o), 3);
    assert_eq!(code(&run(&["chain", "--m", "3", "--n", "3", "--t", "2", "--budget", "1"])), 3);

    // 4: input errors, with the counterexample minor reported
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "field: Q\nvars: 3\ndims: 2 2\nx0, x1\nx2, x0^2\n").unwrap();
    let o = run(&["check", "--matrix", bad.to_str().unwrap(), "--t", "2"]);
    assert_eq!(code(&o), 4);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("2x2 minor on rows [1, 2], columns [1, 2]"), "{err}");
    assert_eq!(code(&run(&["check", "--matrix", "/nonexistent", "--t", "1"])), 4);
    assert_eq!(code(&run(&["verify", "codim", "--t", "2"])), 4);
    assert_eq!(code(&run(&["verify", "codim", "--generic", "5", "5", "--t", "2"])), 4);
    assert_eq!(code(&run(&["verify", "codim", "--m", "2", "--n", "3", "--t", "2", "--field", "Fp:4"])), 4);
    assert_eq!(code(&run(&["nonsense"])), 4);
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn force_lifts_guardrail() {
    let o = run(&["formulas", "--m", "5", "--n", "5", "--t", "5"]);
    assert_eq!(code(&o), 0);
    // the determinant of a generic 5x5 matrix is a single generator; cheap
    let o = run(&["verify", "codim", "--generic", "5", "5", "--t", "5", "--force"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}
