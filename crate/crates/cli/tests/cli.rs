use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn polyschwarz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyschwarz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_owned()
}

fn json_lines(file: &str) -> Vec<Value> {
    std::fs::read_to_string(file)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn random_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (path(dir.path(), "a.json"), path(dir.path(), "b.json"));
    for out in [&a, &b] {
        let o = polyschwarz(&[
            "random", "--n", "2", "--degree", "5", "--seed", "7", "--out", out,
        ]);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let c = path(dir.path(), "c.json");
    polyschwarz(&[
        "random", "--n", "2", "--degree", "5", "--seed", "8", "--out", &c,
    ]);
    assert_ne!(std::fs::read(&a).unwrap(), std::fs::read(&c).unwrap());
}

#[test]
fn extremal_coefficient_is_four_over_pi() {
    let dir = tempfile::tempdir().unwrap();
    let e = path(dir.path(), "e.json");
    let r = path(dir.path(), "r.jsonl");
    let o = polyschwarz(&[
        "extremal", "--gamma", "1", "--a", "0", "--lambda", "1", "--degree", "32", "--out", &e,
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let o = polyschwarz(&["coeffs", "--map", &e, "--max-degree", "1", "--out", &r]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let reports = json_lines(&r);
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["check_id"], "coefficient");
    assert_eq!(reports[0]["params"]["k"], serde_json::json!([1]));
    let lhs = reports[0]["lhs"].as_f64().unwrap();
    assert!((lhs - 4.0 / std::f64::consts::PI).abs() < 1e-8, "{lhs}");
    assert_eq!(reports[0]["pass"], true);
}

#[test]
fn lemma_prints_four() {
    let o = polyschwarz(&[
        "lemma", "--m", "3", "--gamma", "0.7", "--nodes", "4096", "--json",
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!((v["value"].as_f64().unwrap() - 4.0).abs() < 1e-5);

    let o = polyschwarz(&["lemma", "--m", "3", "--gamma", "0.7", "--nodes", "4096"]);
    assert!(stdout(&o).contains("value = 4.0000"), "{}", stdout(&o));
}

#[test]
fn verify_refuses_maps_outside_the_disk() {
    let dir = tempfile::tempdir().unwrap();
    let f = path(dir.path(), "big.json");
    std::fs::write(
        &f,
        r#"{"n": 1, "N": 1, "terms": [{"k": [1], "a": [[0.7, 0.0]], "b": [[0.5, 0.0]]}]}"#,
    )
    .unwrap();
    let r = path(dir.path(), "r.jsonl");
    let o = polyschwarz(&[
        "verify", "--map", &f, "--alpha", "1", "--grid", "3", "--out", &r,
    ]);
    assert_eq!(code(&o), 2);
    assert!(
        stderr(&o).contains("hypothesis: map not certified into the unit disk"),
        "{}",
        stderr(&o)
    );
    assert!(!Path::new(&r).exists());
}

#[test]
fn verify_grid_writes_one_line_per_point_and_alpha() {
    let dir = tempfile::tempdir().unwrap();
    let m = path(dir.path(), "m.json");
    let r = path(dir.path(), "r.jsonl");
    polyschwarz(&[
        "random", "--n", "2", "--degree", "4", "--seed", "1", "--out", &m,
    ]);
    let o = polyschwarz(&[
        "verify", "--map", &m, "--alpha", "1,1", "--alpha", "2,1", "--grid", "5", "--out", &r,
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let reports = json_lines(&r);
    assert_eq!(reports.len(), 25 * 2);
    assert!(reports
        .iter()
        .all(|v| v["check_id"] == "derivative_polydisk" && v["pass"] == true));
    assert_eq!(reports[0]["params"]["alpha"], serde_json::json!([1, 1]));
    assert_eq!(reports[1]["params"]["alpha"], serde_json::json!([2, 1]));
}

#[test]
fn verify_alpha_with_zero_is_a_usage_error() {
    let o = polyschwarz(&["verify", "--map", "m.json", "--alpha", "1,0"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("positive"), "{}", stderr(&o));
}

#[test]
fn unknown_command_prints_usage() {
    let o = polyschwarz(&["frobnicate"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("Usage"), "{}", stderr(&o));
}

#[test]
fn failing_reports_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let m = path(dir.path(), "m.json");
    polyschwarz(&[
        "random", "--n", "1", "--degree", "3", "--seed", "2", "--out", &m,
    ]);
    let o = polyschwarz(&[
        "verify",
        "--map",
        &m,
        "--alpha",
        "1",
        "--z",
        "0.5,0",
        "--tol=-10",
    ]);
    assert_eq!(code(&o), 1, "{}", stderr(&o));
    let line: Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert_eq!(line["pass"], false);
}

#[test]
fn malformed_map_names_the_term() {
    let dir = tempfile::tempdir().unwrap();
    let f = path(dir.path(), "bad.json");
    std::fs::write(
        &f,
        r#"{"n": 1, "N": 1, "terms": [{"k": [1], "a": [[0.1, 0.0]]}, {"k": [2, 1], "a": [[0.1, 0.0]]}]}"#,
    )
    .unwrap();
    let o = polyschwarz(&["verify", "--map", &f, "--alpha", "1"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("term 1"), "{}", stderr(&o));
}

#[test]
fn sharpness_reaches_the_bound() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "s.json");
    let o = polyschwarz(&[
        "sharpness",
        "--n",
        "1",
        "--alpha",
        "1",
        "--budget",
        "2000",
        "--seed",
        "42",
        "--out",
        &out,
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let line = stdout(&o);
    let ratio: f64 = line
        .split_whitespace()
        .nth(2)
        .and_then(|s| s.parse().ok())
        .unwrap_or_else(|| panic!("{line}"));
    assert!(ratio >= 0.999, "{line}");
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["family_params"]["family"], "colonna_tensor");
    assert_eq!(v["evaluations"], 2000);
}

#[test]
fn growth_and_gradient_write_csv() {
    let dir = tempfile::tempdir().unwrap();
    let m = path(dir.path(), "m.json");
    std::fs::write(
        &m,
        r#"{"n": 2, "N": 2, "terms": [{"k": [1, 0], "a": [[0.3, 0.0], [0.0, 0.2]]}, {"k": [0, 2], "b": [[0.1, 0.1], [0.0, -0.2]]}]}"#,
    )
    .unwrap();
    for cmd in ["growth", "gradient"] {
        let csv = path(dir.path(), &format!("{cmd}.csv"));
        let o = polyschwarz(&[cmd, "--map", &m, "--grid", "3", "--csv", "--out", &csv]);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
        let text = std::fs::read_to_string(&csv).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "z1_re,z1_im,z2_re,z2_im,check_id,lhs,rhs,margin,pass"
        );
        assert_eq!(lines.count(), 9);
    }
}

#[test]
fn growth_refuses_maps_not_vanishing_at_origin() {
    let dir = tempfile::tempdir().unwrap();
    let m = path(dir.path(), "m.json");
    std::fs::write(
        &m,
        r#"{"n": 1, "N": 1, "terms": [{"k": [0], "a": [[0.5, 0.0]]}]}"#,
    )
    .unwrap();
    let o = polyschwarz(&["growth", "--map", &m, "--z", "0.5,0"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("hypothesis"), "{}", stderr(&o));
}

#[test]
fn saved_config_replays_identically() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = path(dir.path(), "run.json");
    let (a, b) = (path(dir.path(), "a.json"), path(dir.path(), "b.json"));
    let o = polyschwarz(&[
        "random",
        "--n",
        "3",
        "--N",
        "2",
        "--degree",
        "3",
        "--seed",
        "11",
        "--out",
        &a,
        "--save-config",
        &cfg,
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let mut config: Value = serde_json::from_str(&std::fs::read_to_string(&cfg).unwrap()).unwrap();
    assert_eq!(config["command"], "random");
    assert_eq!(config["seed"], 11);
    config["out"] = Value::String(b.clone());
    std::fs::write(&cfg, config.to_string()).unwrap();
    let o = polyschwarz(&["replay", &cfg]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}
