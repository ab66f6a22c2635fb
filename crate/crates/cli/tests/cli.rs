use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sigma-posets"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn count_decreasing_toric_c() {
    let out = run(&["count-decreasing", "--n", "2", "--m", "2", "--type", "C"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "3");
}

#[test]
fn verify_el_pass_and_fail() {
    let pass = run(&["verify-el", "--n", "2", "--m", "2", "--type", "D"]);
    assert_eq!(pass.status.code(), Some(0));
    let cert: serde_json::Value = serde_json::from_str(&stdout(&pass)).unwrap();
    assert_eq!(cert["verdict"], "pass");

    let fail = run(&["verify-el", "--n", "1", "--m", "2", "--type", "B"]);
    assert_eq!(fail.status.code(), Some(1));
    let cert: serde_json::Value = serde_json::from_str(&stdout(&fail)).unwrap();
    assert_eq!(cert["witness"]["reason"], "no_increasing_chain");
}

#[test]
fn usage_errors_are_json() {
    let out = run(&["verify-el", "--n", "1", "--m", "1", "--type", "D"]);
    assert_eq!(out.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_slice(out.stderr.trim_ascii()).unwrap();
    assert_eq!(err["error"], "usage");

    let out = run(&["formula", "--n", "2", "--variant", "e"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn element_budget() {
    let out = run(&[
        "build",
        "--n",
        "3",
        "--m",
        "4",
        "--type",
        "Full",
        "--max-elements",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_slice(out.stderr.trim_ascii()).unwrap();
    assert_eq!(err["error"], "budget");
}

#[test]
fn betti_and_charpoly() {
    let out = run(&["betti", "--n", "2", "--m", "2", "--type", "C"]);
    let betti: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(betti["1"], 3);
    assert_eq!(betti["0"], 0);
    let out = run(&["charpoly", "--n", "2", "--m", "2", "--type", "C"]);
    assert_eq!(stdout(&out).trim(), "t^3 - 6t^2 + 8t - 3");
}

#[test]
fn sign_orders_agree() {
    let out = run(&[
        "count-decreasing",
        "--n",
        "2",
        "--m",
        "3",
        "--type",
        "C",
        "--all-orders",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let counts: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap())
        .collect();
    assert_eq!(counts.len(), 6);
    assert!(counts.iter().all(|c| *c == counts[0]));
}

#[test]
fn trees_and_formula() {
    let out = run(&["trees", "--family", "blooming", "--n", "2", "--param", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("15"));
    let out = run(&[
        "formula",
        "--n",
        "3",
        "--m",
        "2",
        "--variant",
        "c",
        "--check",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("15"));
}

#[test]
fn table_markdown() {
    let out = run(&[
        "table", "--case", "toric", "--rows", "C", "--n", "1..4", "--format", "markdown",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with('|'));
    assert_eq!(text.lines().count(), 6);
}
