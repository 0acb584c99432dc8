use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const MINIMAL: &str = r#"
[model]
lambda1 = [1.0, 0.0]
lambda2 = [0.01, 0.0]
eta = 0.202
epsilon = 0.01
nbar = 5.0
phi = 0.0

[measure]
name = "i_concurrence"
side_a = ["ion1"]
side_b = ["ion2", "field"]

[grid]
theta = [0.0]
time = [0.0, 0.5, 1.0]
"#;

fn ionpair(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ionpair")).args(args).current_dir(dir).output().expect("binary runs")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) {
    std::fs::write(dir.join(name), text).unwrap();
}

fn csv_rows(path: &Path) -> Vec<Vec<String>> {
    let text = std::fs::read_to_string(path).unwrap();
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("theta,gamma,nbar,scaled_time,measure,value"));
    lines.map(|l| l.split(',').map(str::to_owned).collect()).collect()
}

#[test]
fn version_flag() {
    let dir = tempfile::tempdir().unwrap();
    let out = ionpair(&["--version"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("ionpair "));
}

#[test]
fn minimal_config_writes_three_rows() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "run.toml", MINIMAL);
    let out = ionpair(&["simulate", "--config", "run.toml", "--out", "minimal"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let rows = csv_rows(&dir.path().join("minimal.csv"));
    assert_eq!(rows.len(), 3);
    assert!(rows[0][5].parse::<f64>().unwrap().abs() <= 1e-10);
    assert!(rows.iter().all(|r| r[4] == "i_concurrence"));

    let sidecar: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("minimal.json")).unwrap()).unwrap();
    assert_eq!(sidecar["rows"], 3);
    assert_eq!(sidecar["config"]["model"]["lambda2"][0], 0.01);
    assert_eq!(sidecar["config"]["model"]["phi"], 0.0);
    assert_eq!(sidecar["events"]["threshold"], 1e-3);
    assert!(sidecar["truncation"]["norm_deficit"].as_f64().unwrap() <= 1e-10);
    assert_eq!(sidecar["separable_starts"].as_array().unwrap().len(), 1);
}

#[test]
fn row_count_is_grid_product() {
    let dir = tempfile::tempdir().unwrap();
    let text = MINIMAL
        .replace("name = \"i_concurrence\"", "name = \"negativity\"")
        .replace("side_b = [\"ion2\", \"field\"]", "side_b = [\"ion2\"]")
        .replace("theta = [0.0]", "theta = { start = 0.0, stop = 1.5, points = 4 }\ngamma = [0.0, 0.02]");
    write(dir.path(), "run.toml", &text);
    let out = ionpair(&["simulate", "--config", "run.toml", "--out", "grid", "--workers", "3"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let rows = csv_rows(&dir.path().join("grid.csv"));
    assert_eq!(rows.len(), 4 * 2 * 3);
    let keys: Vec<(f64, f64, f64)> =
        rows.iter().map(|r| (r[0].parse().unwrap(), r[1].parse().unwrap(), r[3].parse().unwrap())).collect();
    let mut sorted = keys.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    assert_eq!(keys, sorted);
}

#[test]
fn sidecar_feeds_back_as_config() {
    let dir = tempfile::tempdir().unwrap();
    let text = MINIMAL
        .replace("theta = [0.0]", "theta = [0.3, 0.9]")
        .replace("time = [0.0, 0.5, 1.0]", "time = { start = 0.0, stop = 4.0, points = 9 }");
    write(dir.path(), "run.toml", &text);
    assert_eq!(ionpair(&["simulate", "--config", "run.toml", "--out", "first"], dir.path()).status.code(), Some(0));
    let out = ionpair(&["simulate", "--config", "first.json", "--out", "second"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let a = std::fs::read(dir.path().join("first.csv")).unwrap();
    let b = std::fs::read(dir.path().join("second.csv")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn decoherence_with_sech_is_infeasible() {
    let dir = tempfile::tempdir().unwrap();
    let text = MINIMAL
        .replace("name = \"i_concurrence\"", "name = \"relative_entropy\"")
        .replace("side_b = [\"ion2\", \"field\"]", "side_b = [\"ion2\"]")
        .replace("theta = [0.0]", "theta = [0.0]\ngamma = [0.05]")
        + "\n[modulation]\nkind = \"sech\"\ntau = 5.0\n";
    write(dir.path(), "run.toml", &text);
    let out = ionpair(&["simulate", "--config", "run.toml"], dir.path());
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("time-independent"), "{}", stderr(&out));
}

#[test]
fn config_errors_exit_two_with_location() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "typo.toml", &MINIMAL.replace("eta = 0.202", "eta = 0.202\netta = 0.1"));
    let out = ionpair(&["simulate", "--config", "typo.toml"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line") && stderr(&out).contains("etta"), "{}", stderr(&out));

    write(dir.path(), "range.toml", &MINIMAL.replace("nbar = 5.0", "nbar = 5.0\nfock_cutoff = 1"));
    let out = ionpair(&["simulate", "--config", "range.toml"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("model.fock_cutoff"), "{}", stderr(&out));

    let out = ionpair(&["simulate", "--config", "missing.toml"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(ionpair(&["figure", "fig9"], dir.path()).status.code(), Some(2));
}

#[test]
fn fig4_needs_tau_and_reports_births() {
    let dir = tempfile::tempdir().unwrap();
    let out = ionpair(&["figure", "fig4"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--tau"));

    let out = ionpair(&["figure", "fig4", "--tau", "5", "--out", "f4"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let sidecar: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("f4.json")).unwrap()).unwrap();
    assert_eq!(sidecar["preset"], "fig4");
    assert_eq!(sidecar["config"]["modulation"]["tau"], 5.0);
    let series = sidecar["series"].as_array().unwrap();
    assert_eq!(series.len(), 121);
    assert!(series.iter().all(|s| s.get("first_birth").is_some()));
    assert_eq!(csv_rows(&dir.path().join("f4.csv")).len(), 121 * 601);
}

#[test]
fn selftest_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = ionpair(&["selftest"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    for name in ["mode_strength_frozen", "block_vs_dense", "kraus_vs_closed_form", "initial_concurrence", "sech_area"] {
        assert!(text.lines().any(|l| l.starts_with("PASS") && l.contains(name) && l.contains("max_dev=")), "{text}");
    }
}

#[test]
fn corrupted_mode_function_fails_selftest() {
    if !cfg!(debug_assertions) {
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_ionpair"))
        .arg("selftest")
        .env("IONPAIR_CORRUPT_MODE_STRENGTH", "1")
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("FAIL") && l.contains("mode_strength_frozen")), "{text}");
    assert!(text.lines().any(|l| l.starts_with("FAIL") && l.contains("block_vs_dense")), "{text}");
}
