//! End-to-end behavior of the `capillary-lab` binary: exit statuses, strict
//! config parsing, quadrature-order precedence, report round-trips, CSV
//! shape, and byte-level determinism of repeated runs.

use std::f64::consts::PI;
use std::path::Path;
use std::process::{Command, Output};

use capillary_lab::report::Report;
use serde_json::Value;
use tempfile::tempdir;

const HEMISPHERE: &str = r#"{"command": "cap-stability",
    "surface": {"kind": "cap_halfspace", "R": 1.0, "theta": 1.5707963267948966}}"#;

const UNIT_CUBE: &str = r#"{"command": "convex-check", "body": {"kind": "cube", "side": 1.0}}"#;

const BRIDGE_SWEEP: &str = r#"{"command": "sweep",
    "surface": {"kind": "bridge_wedge", "R": 1.0, "alpha": 0.5236, "theta": [2.1, 3.0], "steps": 10},
    "seed": 7}"#;

/// Write `config` into `dir`, then run the binary on it with `extra` flags
/// and `env` additions. The inherited CAPILLARY_LAB_ORDER is always cleared
/// so tests stay hermetic.
fn run_lab_env(dir: &Path, config: &str, extra: &[&str], env: &[(&str, &str)]) -> Output {
    let path = dir.join("config.json");
    std::fs::write(&path, config).unwrap();
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_capillary-lab"));
    cmd.env_remove("CAPILLARY_LAB_ORDER");
    for (key, value) in env {
        cmd.env(key, value);
    }
    cmd.arg("run").arg(&path).args(extra);
    cmd.output().expect("binary should spawn")
}

fn run_lab(dir: &Path, config: &str, extra: &[&str]) -> Output {
    run_lab_env(dir, config, extra, &[])
}

fn report_from(output: &Output) -> Report {
    assert!(
        output.status.success(),
        "run failed: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout should be a JSON report")
}

/// Pull a `{value, tolerance}` pair out of the results object.
fn measured(results: &Value, key: &str) -> (f64, f64) {
    let entry = &results[key];
    (
        entry["value"].as_f64().unwrap_or_else(|| panic!("{key} has no value")),
        entry["tolerance"].as_f64().unwrap_or_else(|| panic!("{key} has no tolerance")),
    )
}

#[test]
fn hemisphere_cap_reports_sphere_stable() {
    let dir = tempdir().unwrap();
    let output = run_lab(dir.path(), HEMISPHERE, &[]);
    let report = report_from(&output);
    assert_eq!(report.verdict, "sphere_stable");
    assert_eq!(report.command, "cap-stability");
    assert_eq!(report.quadrature_order, 32);
    let (indicator, tolerance) = measured(&report.results, "indicator");
    assert_eq!(tolerance, 1e-6);
    assert!(indicator.abs() <= tolerance, "indicator {indicator}");
}

#[test]
fn cube_convex_check_matches_closed_forms() {
    let dir = tempdir().unwrap();
    let report = report_from(&run_lab(dir.path(), UNIT_CUBE, &[]));
    assert_eq!(report.verdict, "all_slacks_nonnegative");
    let quermass: Vec<f64> = report.results["quermass"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_f64().unwrap())
        .collect();
    let expected = [1.0, 2.0, PI, 4.0 * PI / 3.0];
    for (got, want) in quermass.iter().zip(expected) {
        assert!((got - want).abs() <= 1e-12, "quermass {got} vs {want}");
    }
    let (min_slack, _) = measured(&report.results, "min_slack");
    assert!((min_slack - (4.0 - PI)).abs() <= 1e-12, "min slack {min_slack}");
}

#[test]
fn acute_cap_exits_with_the_hypothesis_status() {
    let dir = tempdir().unwrap();
    let config = r#"{"command": "cap-stability",
        "surface": {"kind": "cap_halfspace", "R": 1.0, "theta": 1.2}}"#;
    let output = run_lab(dir.path(), config, &[]);
    assert_eq!(output.status.code(), Some(2));
    // The report is still produced: status 2 means "computed fine, but the
    // theorem hypotheses do not hold".
    let report: Report = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(report.verdict, "hypotheses_not_met");
}

#[test]
fn unknown_config_fields_are_rejected() {
    let dir = tempdir().unwrap();
    let config = r#"{"command": "convex-check",
        "body": {"kind": "cube", "side": 1.0, "extra": 3}}"#;
    let output = run_lab(dir.path(), config, &[]);
    assert_eq!(output.status.code(), Some(1));
    assert!(output.stdout.is_empty(), "no report on a parse error");
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("unknown field `extra`"), "stderr: {stderr}");
}

#[test]
fn missing_or_mismatched_subjects_are_rejected() {
    let dir = tempdir().unwrap();
    let output = run_lab(dir.path(), r#"{"command": "cap-stability"}"#, &[]);
    assert_eq!(output.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("needs a \"surface\" entry"), "stderr: {stderr}");

    let smooth = r#"{"command": "steiner", "body": {"kind": "ellipse", "a": 2.0, "b": 1.0}}"#;
    let output = run_lab(dir.path(), smooth, &[]);
    assert_eq!(output.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("needs a polytopal body"), "stderr: {stderr}");
}

#[test]
fn csv_flag_requires_a_tabular_command() {
    let dir = tempdir().unwrap();
    let csv = dir.path().join("table.csv");
    let output = run_lab(dir.path(), HEMISPHERE, &["--csv", csv.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("no tabular section"), "stderr: {stderr}");
    assert!(!csv.exists());
}

#[test]
fn sweep_runs_are_deterministic() {
    let first = tempdir().unwrap();
    let second = tempdir().unwrap();
    let mut outputs = Vec::new();
    for dir in [&first, &second] {
        let out = dir.path().join("report.json");
        let csv = dir.path().join("table.csv");
        let output = run_lab(
            dir.path(),
            BRIDGE_SWEEP,
            &["--out", out.to_str().unwrap(), "--csv", csv.to_str().unwrap()],
        );
        let report = report_from(&output);
        // The written report matches stdout byte for byte.
        assert_eq!(std::fs::read(&out).unwrap(), output.stdout);
        outputs.push((report, std::fs::read(&csv).unwrap()));
    }
    let (mut r1, csv1) = outputs.remove(0);
    let (mut r2, csv2) = outputs.remove(0);
    assert_eq!(csv1, csv2, "CSV bytes differ between identical runs");
    // Wall-clock time is the one field allowed to differ.
    r1.wall_clock_ms = 0.0;
    r2.wall_clock_ms = 0.0;
    assert_eq!(r1, r2, "reports differ beyond the timestamp");
}

#[test]
fn sweep_csv_has_a_header_and_one_row_per_grid_point() {
    let dir = tempdir().unwrap();
    let csv = dir.path().join("table.csv");
    let output = run_lab(dir.path(), BRIDGE_SWEEP, &["--csv", csv.to_str().unwrap()]);
    let report = report_from(&output);
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.ends_with('\n') && !text.contains('\r'));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 11, "header plus ten grid points");
    let table = report.table.expect("sweep reports carry a table");
    assert_eq!(lines[0], table.columns.join(","));
    for line in &lines[1..] {
        for cell in line.split(',') {
            let value: f64 = cell.parse().expect("cells parse as f64");
            assert!(value.is_finite());
            assert!(cell.contains('e'), "cell {cell} is not in scientific form");
        }
    }
}

#[test]
fn quadrature_order_precedence_is_flag_config_env_default() {
    let dir = tempdir().unwrap();
    let square = r#"{"command": "convex-check", "body": {"kind": "square", "side": 1.0}}"#;
    let square_with_order =
        r#"{"command": "convex-check", "body": {"kind": "square", "side": 1.0}, "quadrature_order": 48}"#;
    let env = [("CAPILLARY_LAB_ORDER", "24")];

    let report = report_from(&run_lab(dir.path(), square, &[]));
    assert_eq!(report.quadrature_order, 32, "default applies");
    let report = report_from(&run_lab_env(dir.path(), square, &[], &env));
    assert_eq!(report.quadrature_order, 24, "environment beats the default");
    let report = report_from(&run_lab_env(dir.path(), square_with_order, &[], &env));
    assert_eq!(report.quadrature_order, 48, "config beats the environment");
    let report = report_from(&run_lab_env(dir.path(), square_with_order, &["--order", "16"], &env));
    assert_eq!(report.quadrature_order, 16, "flag beats everything");

    let output = run_lab_env(dir.path(), square, &[], &[("CAPILLARY_LAB_ORDER", "banana")]);
    assert_eq!(output.status.code(), Some(1), "unparseable env order is an error");
}

#[test]
fn reports_round_trip_through_serde() {
    let dir = tempdir().unwrap();
    let output = run_lab(dir.path(), UNIT_CUBE, &[]);
    let report = report_from(&output);
    let reparsed: Report = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(report, reparsed);
    // Typed and untyped views agree, so deserialization drops no fields.
    let direct: Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(serde_json::to_value(&report).unwrap(), direct);
}

#[test]
fn config_output_path_is_used_unless_the_flag_overrides() {
    let dir = tempdir().unwrap();
    let configured = dir.path().join("from_config.json");
    let config = serde_json::json!({
        "command": "convex-check",
        "body": {"kind": "square", "side": 1.0},
        "output_path": configured.to_str().unwrap(),
    })
    .to_string();

    report_from(&run_lab(dir.path(), &config, &[]));
    let written: Report =
        serde_json::from_str(&std::fs::read_to_string(&configured).unwrap()).unwrap();
    assert_eq!(written.verdict, "all_slacks_nonnegative");

    std::fs::remove_file(&configured).unwrap();
    let flagged = dir.path().join("from_flag.json");
    report_from(&run_lab(dir.path(), &config, &["--out", flagged.to_str().unwrap()]));
    assert!(flagged.exists(), "--out target written");
    assert!(!configured.exists(), "--out replaces the configured path");
}
