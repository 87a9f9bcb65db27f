use std::io::Write;
use std::process::{Command, Output};

use qwedge::report::{Report, Status};
use serde_json::Value;

fn qwedge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qwedge")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn check_builtins() {
    let o = qwedge(&["check", "--braiding", "jimbo-a:3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("braid relation: ok"), "{text}");
    assert!(text.contains("invertible: ok"));
    assert!(text.contains("hecke: yes"));

    // exit status depends on braid_ok and invertibility only
    let o = qwedge(&["check", "--braiding", "type-c"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("hecke: no"));
}

#[test]
fn check_json_is_a_report() {
    let o = qwedge(&["check", "--braiding", "jimbo-a:2", "--format", "json"]);
    let r: Report = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.params["hecke"], Value::Bool(true));
}

#[test]
fn dims_table_and_progress_on_stderr() {
    let o = qwedge(&["dims", "--braiding", "jimbo-a:3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().filter(|l| l.chars().next().is_some_and(|c| c.is_ascii_digit())).collect();
    assert_eq!(rows, ["0\t1", "1\t3", "2\t3", "3\t1", "4\t0"]);
    assert!(text.contains("rank M = 3"));
    assert!(!text.contains("[dims]"));
    assert!(stderr(&o).contains("[dims] degree 1"));

    let o = qwedge(&["dims", "--braiding", "type-c", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dims"], serde_json::json!([1, 4, 6, 4, 1, 0]));
    assert_eq!(v["rank"], 4);

    let o = qwedge(&["dims", "--braiding", "cartan:A2", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rank"], Value::Null);
}

#[test]
fn det_and_minors() {
    let o = qwedge(&["det", "--braiding", "jimbo-a:2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "T1_1.T2_2 - q^-1 * T2_1.T1_2");

    let o = qwedge(&["minors", "--braiding", "jimbo-a:3", "-k", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v["minors"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r.as_array().unwrap().len() == 3));
    assert_eq!(rows[0][0], "T1_1.T2_2 - q^-1 * T2_1.T1_2");

    let o = qwedge(&["det", "--braiding", "cartan:A2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("rank not established"));
}

#[test]
fn resource_ceiling_exits_three() {
    let o = qwedge(&["det", "--braiding", "type-c"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("ceiling"));
}

#[test]
fn verify_all_round_trips() {
    let o = qwedge(&["verify", "all", "--braiding", "jimbo-a:2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let reports: Vec<Report> = serde_json::from_slice(&o.stdout).unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r.status == Status::Pass), "{reports:?}");
    for check in ["laplace", "multiplicative", "prop54", "prop47", "remark62"] {
        assert!(reports.iter().any(|r| r.check == check), "{check}");
    }
    let again: Vec<Report> = serde_json::from_str(&serde_json::to_string(&reports).unwrap()).unwrap();
    assert_eq!(again, reports);
    // schema keys
    let raw: Value = serde_json::from_slice(&o.stdout).unwrap();
    for r in raw.as_array().unwrap() {
        let keys: Vec<&str> = r.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys.len(), 6);
        for k in ["check", "braiding", "params", "status", "witness", "elapsed_ms"] {
            assert!(keys.contains(&k), "{k}");
        }
    }
}

#[test]
fn verify_laplace_pair() {
    let o = qwedge(&["verify", "laplace", "--braiding", "jimbo-a:3", "-m", "1", "-n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS laplace [jimbo-a:3] m=1 n=2"));
}

#[test]
fn gated_laplace_is_skipped_with_reason() {
    let o = qwedge(&["verify", "laplace", "--braiding", "type-c", "-m", "2", "-n", "2", "--format", "json"]);
    let reports: Vec<Report> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0].status, Status::Skipped);
    assert!(reports[0].params["skip_reason"].as_str().unwrap().contains("--long-running"));
}

#[test]
fn failing_check_serializes_witness() {
    let o = qwedge(&["verify", "remark62", "--braiding", "type-c", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let reports: Vec<Report> = serde_json::from_slice(&o.stdout).unwrap();
    let failed: Vec<&Report> = reports.iter().filter(|r| r.status == Status::Fail).collect();
    assert_eq!(failed.len(), 2);
    assert!(failed[0].witness.as_deref().unwrap().contains("counit"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["dims", "--braiding", "nope"][..],
        &["dims", "--braiding", "jimbo-a:2", "--max-degree", "0"],
        &["frobnicate"],
        &["dims"],
        &["emit-spec", "jimbo-b:2"],
    ] {
        assert_eq!(qwedge(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn malformed_spec_files_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("syntax.json", "{ dimension: 2"),
        ("range.json", r#"{"dimension": 2, "entries": [{"from": [1, 3], "to": [1, 1], "coeff": "q"}]}"#),
        ("coeff.json", r#"{"dimension": 1, "entries": [{"from": [1, 1], "to": [1, 1], "coeff": "q^^2"}]}"#),
    ];
    for (name, body) in cases {
        let path = dir.path().join(name);
        std::fs::File::create(&path).unwrap().write_all(body.as_bytes()).unwrap();
        let o = qwedge(&["check", "--braiding", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(2), "{name}");
        assert!(stderr(&o).starts_with("error:"), "{name}: {}", stderr(&o));
    }
}

#[test]
fn emitted_spec_loads_back() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["jimbo-a:3", "type-c"] {
        let o = qwedge(&["emit-spec", name]);
        assert_eq!(o.status.code(), Some(0));
        let path = dir.path().join("spec.json");
        std::fs::write(&path, &o.stdout).unwrap();
        let from_file = qwedge(&["dims", "--braiding", path.to_str().unwrap(), "--format", "json"]);
        let builtin = qwedge(&["dims", "--braiding", name, "--format", "json"]);
        let a: Value = serde_json::from_slice(&from_file.stdout).unwrap();
        let b: Value = serde_json::from_slice(&builtin.stdout).unwrap();
        assert_eq!(a["dims"], b["dims"], "{name}");
        assert_eq!(a["rank"], b["rank"], "{name}");
    }
}
