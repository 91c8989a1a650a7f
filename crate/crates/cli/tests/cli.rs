use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_vdw-sphere");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("VDW_SPHERE_OUT_DIR").output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Header and data rows of a CSV document, skipping metadata comments.
fn csv(text: &str) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect();
    (header, rows)
}

#[test]
fn potential_sweep_has_expected_shape_and_signs() {
    let out = run(&["potential", "--model", "quantum", "--radius", "0.5", "--a-min", "0.1", "--a-max", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let (header, rows) = csv(&text);
    assert_eq!(header.join(","), "a,U_total,U_dipole,U_plus,U_minus");
    assert_eq!(rows.len(), 200);
    assert!((rows[0][0] - 0.1).abs() < 1e-15 && (rows[199][0] - 3.0).abs() < 1e-15);
    for row in &rows {
        assert!(row[1] < 0.0);
        assert!(row[4] > 0.0);
        assert!((row[2] + row[3] + row[4] - row[1]).abs() <= 1e-12 * row[1].abs());
    }
}

#[test]
fn json_output_uses_column_names() {
    let out = run(&["potential", "--points", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = value.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    let keys: Vec<&str> = rows[0].as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["a", "U_total", "U_dipole", "U_plus", "U_minus"]);
}

#[test]
fn limits_reports_plane_convergence() {
    let out = run(&["limits", "--radius-ratio", "1e4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let (header, rows) = csv(&text);
    let col = header.iter().position(|h| h == "rel_err_plane").unwrap();
    assert_eq!(rows.len(), 1);
    assert!(rows[0][col] < 1e-3);
}

#[test]
fn frequency_and_work_path_run() {
    assert_eq!(run(&["frequency", "--alpha", "0.1", "--points", "5"]).status.code(), Some(0));
    let out = run(&["work-path"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().last().unwrap().ends_with(",true"));
}

#[test]
fn verify_passes() {
    let out = run(&["verify", "--tol", "1e-8"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(!stdout(&out).contains("false"));
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(run(&["potential", "--radius", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["potential", "--length-scale", "1e-10"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["potential", "--model", "semiclassical", "--dx2", "1"]).status.code(), Some(2));
}

#[test]
fn failed_check_exits_one() {
    // an impossible tolerance makes the half-factor checks fail
    let out = run(&["verify", "--tol", "1e-30", "--samples", "1"]);
    assert_eq!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn si_mode_runs() {
    let out = run(&[
        "--units", "si", "potential", "--radius", "5e-10", "--a-min", "1e-10", "--a-max", "3e-10",
        "--alpha", "1.6e-41", "--omega", "1e16", "--points", "4",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let (_, rows) = csv(&stdout(&out));
    assert!(rows.iter().all(|r| r[1] < 0.0 && r[0] < 1e-9));
}

#[test]
fn output_dir_override_relocates_relative_paths() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(BIN)
        .args(["potential", "--points", "4", "-o", "sweep.csv"])
        .env("VDW_SPHERE_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(dir.path().join("sweep.csv")).unwrap();
    assert_eq!(csv(&text).1.len(), 4);
}
