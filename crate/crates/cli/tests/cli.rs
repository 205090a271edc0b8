use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_chi-certify");

fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .env_remove("CHI_CERTIFY_BUDGET_MS")
        .output()
        .expect("spawn")
}

fn json_lines(out: &Output) -> Vec<serde_json::Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("json line"))
        .collect()
}

#[test]
fn analyze_standard_graphs() {
    let out = run(&["analyze", "--generate", "cycle:5", "--generate", "petersen"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = json_lines(&out);
    assert_eq!(rows.len(), 2);
    let triple = |r: &serde_json::Value| (r["chi"].clone(), r["omega"].clone(), r["kappa"].clone());
    assert_eq!(triple(&rows[0]), (3.into(), 2.into(), 2.into()));
    assert_eq!(triple(&rows[1]), (3.into(), 2.into(), 3.into()));
}

#[test]
fn analyze_csv_and_flags() {
    let out = run(&["analyze", "--generate", "cycle:6", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("id,graph6,n,m,chi,omega,kappa"));
    let out = run(&["analyze", "--generate", "cycle:6", "--p", "5", "--d", "2", "--t", "2"]);
    let row = &json_lines(&out)[0];
    assert_eq!(row["induced_path"]["present"], true);
    assert_eq!(row["kdt_subgraph"]["present"], false);
}

#[test]
fn bad_input_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.g6");
    std::fs::write(&empty, "").unwrap();
    assert_eq!(run(&["analyze", "--input", empty.to_str().unwrap()]).status.code(), Some(2));
    let bad = dir.path().join("bad.g6");
    std::fs::write(&bad, "not a graph\n").unwrap();
    assert_eq!(run(&["analyze", "--input", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "--generate", "gnp:10:0.5"]).status.code(), Some(2));
    let out = Command::new(BIN)
        .args(["analyze", "--generate", "cycle:5"])
        .env("CHI_CERTIFY_BUDGET_MS", "soon")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn node_limit_exhaustion() {
    let out = run(&["analyze", "--generate", "petersen", "--node-limit", "1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn certify_outcomes() {
    let cases = [
        ("cycle:9", &["--pipeline", "path", "--p", "5", "--d", "2", "--t", "2"], "induced_copy"),
        (
            "complete_multipartite:3:2",
            &["--pipeline", "path", "--p", "4", "--d", "3", "--t", "2"],
            "kdt_copy",
        ),
        ("complete:3", &["--pipeline", "path", "--p", "4", "--d", "2", "--t", "2"], "bounded_coloring"),
    ];
    for (spec, params, kind) in cases {
        let mut args = vec!["certify", "--generate", spec];
        args.extend_from_slice(params);
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{spec}");
        let rec = &json_lines(&out)[0];
        assert_eq!(rec["certificate"]["kind"], kind, "{spec}");
        assert_eq!(rec["valid"], true);
    }
}

#[test]
fn verify_exit_codes() {
    let out = run(&["verify", "--suite", "bounds_identities"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report.is_array());
    let out = run(&["verify", "--suite", "thm3_1", "--node-limit", "1"]);
    assert_eq!(out.status.code(), Some(4));
    let out = run(&["verify", "--suite", "sec4_statements", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.contains("FAIL")));
    assert_eq!(run(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
}

#[test]
fn sweep_rows() {
    let out = run(&["sweep", "--generate", "complete:14", "--t", "1,2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("graph_id,n,chi,omega,bound_name,bound_value,slack,certificate_kind"));
    assert!(lines[1].ends_with(",biclique"));
}
