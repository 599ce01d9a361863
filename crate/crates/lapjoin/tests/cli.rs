//! CLI smoke tests: exit-code contract and JSON report schema.

use std::process::Command;

fn lapjoin(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_lapjoin"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn spectrum_both_methods_agrees() {
    let out = lapjoin(&["spectrum", "S", "K3", "P2", "P3"]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["status"], "ok");
    assert_eq!(report["command"], "spectrum");
    let closed = report["spectrum_closed_form"].as_array().unwrap();
    let oracle = report["spectrum_oracle"].as_array().unwrap();
    assert_eq!(closed.len(), 11);
    assert_eq!(oracle.len(), 11);
    assert!(report["max_abs_difference"].as_f64().unwrap() <= 1e-8);
}

#[test]
fn spectrum_precondition_failure_exits_1() {
    // P3 is not regular, so the closed form must refuse it as a base graph
    let out = lapjoin(&["spectrum", "S", "P3", "P2", "P2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn construct_round_trips_through_edge_list() {
    let out = lapjoin(&["construct", "S", "K3", "P2", "P3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let g = lapjoin::Graph::from_edge_list(&text).unwrap();
    assert_eq!(g.vertex_count(), 11);
    assert_eq!(g.edge_count(), 24);
}

#[test]
fn verify_reduced_suite_passes() {
    let out = lapjoin(&["verify", "--suite", "reduced"]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.trim_end().ends_with("PASS 8/8"), "output: {text}");
}

#[test]
fn analyze_reports_exact_tree_count() {
    let out = lapjoin(&["analyze", "--join", "S", "K3", "P2", "P3"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["analytics"]["spanning_trees"].to_string(), "259920");

    let out = lapjoin(&["analyze", "K3"]);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["analytics"]["spanning_trees"].to_string(), "3");
    assert!((report["analytics"]["kirchhoff_index"].as_f64().unwrap() - 2.0).abs() < 1e-12);
}

#[test]
fn unknown_family_exits_1() {
    let out = lapjoin(&["analyze", "K999z"]);
    assert_eq!(out.status.code(), Some(1));
}
