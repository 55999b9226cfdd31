//! End-to-end tests of the command-line binary.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_squeezed-otto"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

#[test]
fn eval_engine_point_json() {
    let out = run(&["eval", "--r", "1.0", "--xi", "0.2"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert!((v["q_cold"].as_f64().unwrap() - (-0.092038)).abs() < 1e-6);
    assert!((v["q_hot"].as_f64().unwrap() - 0.156303).abs() < 1e-5);
    assert!((v["w_net"].as_f64().unwrap() - (-0.064264)).abs() < 1e-5);
    assert!((v["eta"].as_f64().unwrap() - 0.411154).abs() < 1e-6);
    assert!(v["cop"].is_null());
    assert_eq!(v["regime"], "engine");
    assert_eq!(v["units"], "hw_c");
}

#[test]
fn eval_rejects_out_of_domain_xi() {
    let out = run(&["eval", "--r", "1.0", "--xi", "0.9"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("xi"));
    assert!(stderr.contains("0.5"));
}

#[test]
fn eval_pev_units_scale_energies() {
    let out = run(&["eval", "--r", "1.0", "--xi", "0.2", "--units", "peV"]);
    let v = stdout_json(&out);
    assert_eq!(v["units"], "peV");
    assert!((v["q_hot"].as_f64().unwrap() - 0.156303 * 4.135667697).abs() < 1e-4);
}

#[test]
fn classify_refrigerator_point() {
    let out = run(&["classify", "--r", "0.1", "--xi", "0.2"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["regime"], "refrigerator");
}

#[test]
fn boundaries_at_xi_point_two() {
    let out = run(&["boundaries", "--xi", "0.2"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let list = v["boundaries"].as_array().unwrap();
    assert_eq!(list.len(), 3);
    for (entry, expected) in list.iter().zip([0.2899, 0.6452, 0.7742]) {
        assert!((entry["value"].as_f64().unwrap() - expected).abs() < 1e-3);
    }
    assert_eq!(list[0]["below"], "refrigerator");
    assert_eq!(list[2]["above"], "engine");
}

#[test]
fn sweep_streams_csv_to_stdout() {
    let out = run(&["sweep", "--xi", "0.2", "--steps", "5"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "r,xi,q_cold,q_hot,w_net,eta,cop,regime");
    assert_eq!(lines.len(), 6);
}

#[test]
fn figures_runs_are_byte_identical() {
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    let out_a = run(&["figures", "--out-dir", dir_a.path().to_str().unwrap()]);
    let out_b = run(&["figures", "--out-dir", dir_b.path().to_str().unwrap()]);
    assert!(out_a.status.success() && out_b.status.success());
    assert_eq!(out_a.stdout, out_b.stdout);
    for name in ["fig2a.csv", "fig2b.csv", "fig3.csv", "fig4.csv"] {
        let a = std::fs::read(dir_a.path().join(name)).unwrap();
        let b = std::fs::read(dir_b.path().join(name)).unwrap();
        assert_eq!(a, b);
    }
    // manifest lists name, row count, byte count
    let manifest = String::from_utf8(out_a.stdout).unwrap();
    let first: Vec<&str> = manifest.lines().next().unwrap().split(' ').collect();
    assert_eq!(first[0], "fig2a.csv");
    assert_eq!(first[1], "301");
}

#[test]
fn verify_small_grid_passes() {
    let out = run(&["verify", "--grid-r", "6", "--grid-xi", "4"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("verification passed"));
}

#[test]
fn verify_unachievable_tolerance_fails() {
    let out = run(&["verify", "--grid-r", "4", "--grid-xi", "3", "--tol", "1e-18"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn single_point_verify_grid() {
    let out = run(&["verify", "--grid-r", "1", "--grid-xi", "1"]);
    assert!(out.status.success());
}
