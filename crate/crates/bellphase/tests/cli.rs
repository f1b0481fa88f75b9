//! End-to-end tests of the `bellphase` binary: output formats, exit codes,
//! and the documented defaults.

use std::process::{Command, Output};

fn bellphase(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bellphase")).args(args).output().expect("spawn bellphase")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn csv_field<'a>(text: &'a str, column: &str) -> &'a str {
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().expect("header").split(',').collect();
    let row: Vec<&str> = lines.next().expect("data row").split(',').collect();
    let idx = header.iter().position(|h| *h == column).unwrap_or_else(|| {
        panic!("no column {column} in {header:?}");
    });
    row[idx]
}

#[test]
fn chsh_analytic_paper_defaults() {
    let out = bellphase(&["chsh", "--analytic"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(csv_field(&text, "s"), "2.82842712");
    assert_eq!(csv_field(&text, "phi1_deg"), "0");
    assert_eq!(csv_field(&text, "phi2p_deg"), "67.5000000");
    assert_eq!(csv_field(&text, "std_err"), "0");
}

#[test]
fn chsh_analytic_degenerate_settings() {
    let out = bellphase(&[
        "chsh", "--analytic", "--phi1", "0", "--phi1p", "0", "--phi2", "0", "--phi2p", "0",
    ]);
    assert!(out.status.success());
    assert_eq!(csv_field(&stdout(&out), "s"), "2.00000000");
}

#[test]
fn chsh_bell_det_monte_carlo() {
    let out = bellphase(&[
        "chsh", "--model", "bell-det", "--trials", "200000", "--seed", "1", "--partitions", "4",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let s: f64 = csv_field(&text, "s").parse().unwrap();
    let std_err: f64 = csv_field(&text, "std_err").parse().unwrap();
    assert!((s - 2.0).abs() <= 5.0 * std_err, "s = {s} +/- {std_err}");
}

#[test]
fn single_analytic_correlation() {
    let out = bellphase(&["single", "--analytic", "--phi1", "0", "--phi2", "22.5"]);
    assert!(out.status.success());
    assert_eq!(csv_field(&stdout(&out), "e"), "0.707106781");
}

#[test]
fn single_analytic_equal_settings() {
    let out = bellphase(&["single", "--analytic", "--phi1", "10", "--phi2", "10", "--delta", "0"]);
    assert!(out.status.success());
    assert_eq!(csv_field(&stdout(&out), "e"), "1.00000000");
}

#[test]
fn single_monte_carlo_perfect_correlation() {
    // Zero mass in the anticorrelated channels at equal settings.
    let out = bellphase(&[
        "single", "--model", "phase", "--phi1", "0", "--phi2", "0", "--trials", "1000", "--seed",
        "7",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(csv_field(&text, "e"), "1.00000000");
    assert_eq!(csv_field(&text, "p_pm"), "0");
    assert_eq!(csv_field(&text, "p_mp"), "0");
}

#[test]
fn sweep_analytic_quarter_turns() {
    let out = bellphase(&["sweep", "--analytic", "--start", "0", "--stop", "90", "--step", "22.5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "angle_deg,e_analytic");
    let expected = ["1.00000000", "0.707106781", "0", "-0.707106781", "-1.00000000"];
    assert_eq!(lines.len(), expected.len() + 1);
    for (line, e) in lines[1..].iter().zip(expected) {
        assert_eq!(line.split(',').nth(1).unwrap(), e);
    }
    // monotone angle column
    let angles: Vec<f64> =
        lines[1..].iter().map(|l| l.split(',').next().unwrap().parse().unwrap()).collect();
    assert!(angles.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn sweep_step_beyond_range_single_row() {
    let out = bellphase(&["sweep", "--analytic", "--start", "10", "--stop", "20", "--step", "50"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 2);
}

#[test]
fn sweep_monte_carlo_tracks_analytic_curve() {
    let out = bellphase(&[
        "sweep", "--model", "phase", "--start", "0", "--stop", "90", "--step", "22.5", "--trials",
        "100000", "--seed", "3", "--partitions", "2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    for line in text.lines().skip(1) {
        let cols: Vec<f64> = line.split(',').map(|v| v.parse().unwrap()).collect();
        let (e_analytic, e_hat, std_err) = (cols[1], cols[2], cols[3]);
        assert!(
            (e_hat - e_analytic).abs() <= 5.0 * std_err.max(1e-4),
            "row {line} out of band"
        );
    }
}

#[test]
fn scan_analytic_phase_finds_tsirelson() {
    let out = bellphase(&["scan", "--analytic", "--step", "22.5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(csv_field(&text, "max_abs_s"), "2.82842712");
    // argmax settings are 22.5 degrees apart in the CHSH pattern
    let best: Vec<f64> = ["best_phi1_deg", "best_phi1p_deg", "best_phi2_deg", "best_phi2p_deg"]
        .iter()
        .map(|c| csv_field(&text, c).parse().unwrap())
        .collect();
    for angle in best {
        assert_eq!(angle % 22.5, 0.0);
    }
}

#[test]
fn scan_analytic_bell_det_stays_classical() {
    let out = bellphase(&["scan", "--analytic", "--model", "bell-det", "--step", "22.5"]);
    assert!(out.status.success());
    assert_eq!(csv_field(&stdout(&out), "max_abs_s"), "2.00000000");
}

#[test]
fn scan_coarse_grid() {
    let out = bellphase(&["scan", "--analytic", "--step", "90"]);
    assert!(out.status.success());
    assert_eq!(csv_field(&stdout(&out), "max_abs_s"), "2.00000000");
}

#[test]
fn scan_monte_carlo_phase() {
    let out = bellphase(&[
        "scan", "--model", "phase", "--step", "45", "--trials", "20000", "--seed", "11",
        "--partitions", "2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let max_s: f64 = csv_field(&text, "max_abs_s").parse().unwrap();
    let std_err: f64 = csv_field(&text, "std_err").parse().unwrap();
    // best on a 45-degree grid is |S| = 2 for the cos-2theta correlation
    assert!((max_s - 2.0).abs() <= 5.0 * std_err, "max_abs_s = {max_s}");
}

#[test]
fn verify_passes_and_exits_zero() {
    let out = bellphase(&["verify"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("check,passed,detail\n"));
    assert_eq!(text.lines().count(), 8);
    for line in text.lines().skip(1) {
        assert_eq!(line.split(',').nth(1).unwrap(), "true", "{line}");
    }
}

#[test]
fn json_report_carries_resolved_config() {
    let out = bellphase(&[
        "chsh", "--model", "phase", "--trials", "5000", "--partitions", "2", "--format", "json",
    ]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let config = &report["config"];
    assert_eq!(config["seed"], 42);
    assert_eq!(config["trials"], 5000);
    assert_eq!(config["model"], "phase");
    assert_eq!(config["phi2p_deg"], 67.5);
    assert_eq!(config["source"]["delta_deg"], 0.0);
    assert!(report["results"]["s"].is_f64());
    assert!(report["checks"].is_array());
}

#[test]
fn verify_json_has_check_entries() {
    let out = bellphase(&["verify", "--format", "json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["results"]["passed"], true);
    assert_eq!(report["checks"].as_array().unwrap().len(), 7);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("bellphase-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("chsh.csv");
    let out = bellphase(&["chsh", "--analytic", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(csv_field(&text, "s"), "2.82842712");
    std::fs::remove_file(&path).ok();
}

#[test]
fn usage_errors_exit_two() {
    // no backend chosen
    let out = bellphase(&["single", "--phi1", "10"]);
    assert_eq!(out.status.code(), Some(2));
    // bad step
    let out = bellphase(&["sweep", "--analytic", "--step", "0"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown model
    let out = bellphase(&["single", "--model", "quantum"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown flag
    let out = bellphase(&["chsh", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    // zero trials on a Monte Carlo backend
    let out = bellphase(&["single", "--model", "phase", "--trials", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    let out = bellphase(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}
