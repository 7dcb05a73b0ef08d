use std::process::{Command, Output};

use serde_json::Value;

fn ipoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ipoly"))
        .args(args)
        .env_remove("IPOLY_ENVELOPE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

fn member_names(v: &Value) -> Vec<String> {
    let mut names: Vec<String> = v["members"]
        .as_array()
        .expect("members")
        .iter()
        .map(|m| m["name"].as_str().unwrap_or("-").to_string())
        .collect();
    names.sort();
    names
}

#[test]
fn compute_human_and_json() {
    let o = ipoly(&["compute", "P:4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("1 + 4x + 3x^2"));

    let o = ipoly(&["--format", "json", "compute", "C:5"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["polynomial"], serde_json::json!([1, 5, 5]));
}

#[test]
fn compute_accepts_graph6() {
    // K3 in graph6
    let o = ipoly(&["compute", "Bw"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("1 + 3x"));
}

#[test]
fn class_of_c6() {
    let o = ipoly(&["class", "C:6"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["complete"], true);
    assert_eq!(v["members"].as_array().unwrap().len(), 3);
    let names = member_names(&v);
    assert!(names.contains(&"C:6".to_string()));
    assert!(names.contains(&"D:6".to_string()));
}

#[test]
fn class_from_coefficient_list() {
    let a = json(&ipoly(&["class", "[1,6,9,2]"]));
    let b = json(&ipoly(&["class", "C:6"]));
    assert_eq!(a["members"], b["members"]);
}

#[test]
fn class_jobs_do_not_change_output() {
    let a = ipoly(&["class", "P:8"]);
    let b = ipoly(&["class", "P:8", "--jobs", "4"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn envelope_refusal_and_verification() {
    let o = ipoly(&["class", "C:15"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--verify-against"));

    let o = ipoly(&["class", "C:15", "--verify-against", "specials-c15"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["complete"], false);
    assert_eq!(v["members"].as_array().unwrap().len(), 5);

    let o = ipoly(&["class", "C:9", "--verify-against", "C:9,D:9,P:9"]);
    let v = json(&o);
    assert_eq!(member_names(&v), ["C:9", "D:9"]);
}

#[test]
fn enumerate_lists_sorted_codes() {
    let o = ipoly(&["enumerate", "-n", "4", "-m", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "CF\nCJ\nCL\n");

    let a = ipoly(&["enumerate", "-n", "7", "-m", "9"]);
    let b = ipoly(&["enumerate", "-n", "7", "-m", "9", "--jobs", "3"]);
    assert_eq!(a.stdout, b.stdout);
    let lines: Vec<&str> = std::str::from_utf8(&a.stdout).unwrap().lines().collect();
    assert!(lines.windows(2).all(|w| w[0] < w[1]));

    let o = ipoly(&["enumerate", "-n", "6", "-m", "6", "--max-degree", "2"]);
    // C6, C3+C3
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn factor_and_roots() {
    let o = ipoly(&["factor", "C:9"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("[1,3] * [1,6,9,3]"));

    let o = ipoly(&["roots", "C:20"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("all roots pass"));
}

#[test]
fn audit_suites() {
    let o = ipoly(&["verify-paper", "--suite", "algebra"]);
    assert!(o.status.success());
    let o = ipoly(&["--format", "json", "verify-paper", "--suite", "paths"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["pass"], true);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["compute", "Q:3"][..],
        &["enumerate", "-n", "2", "-m", "3"],
        &["roots", "P:4"],
        &["verify-paper", "--suite", "nope"],
        &["class", "[1,-2]"],
    ] {
        let o = ipoly(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}
