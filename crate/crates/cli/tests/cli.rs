use std::process::{Command, Output};

fn circomp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_circomp"))
        .args(args)
        .output()
        .expect("run circomp")
}

fn stdout(args: &[&str]) -> String {
    let out = circomp(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    circomp(args).status.code().unwrap()
}

#[test]
fn count() {
    assert_eq!(stdout(&["count", "prime-compositions", "12"]), "2010\n");
    assert_eq!(stdout(&["count", "palindromes", "8"]), "16\n");
    assert_eq!(stdout(&["count", "aperiodic-palindromes", "8"]), "12\n");
    assert_eq!(stdout(&["count", "disconnected", "72"]), "34368124928\n");
    assert_eq!(
        stdout(&["count", "compositions", "100"]),
        "633825300114114700748351602688\n"
    );
}

#[test]
fn count_errors() {
    let out = circomp(&["count", "partitions", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(String::from_utf8_lossy(&out.stderr).lines().count(), 1);
    assert_eq!(exit_code(&["count", "aperiodic-palindromes", "1"]), 2);
    assert_eq!(exit_code(&["count", "compositions", "0"]), 2);
    assert_eq!(exit_code(&["count", "compositions", "-3"]), 2);
}

#[test]
fn list() {
    assert_eq!(
        stdout(&["list", "compositions", "5", "--limit", "3"]),
        "5\n1,4\n2,3\n…truncated\n"
    );
    assert_eq!(
        stdout(&["list", "aperiodic-palindromes", "4"]),
        "4\n1,2,1\n"
    );
    assert_eq!(stdout(&["list", "compositions", "1"]), "1\n");
    assert_eq!(stdout(&["list", "compositions", "5"]).lines().count(), 16);
    assert_eq!(
        stdout(&["list", "symmetric-connection-sets", "4"]),
        "4: 0\n4: 0,2\n4: 0,1,3\n4: 0,1,2,3\n"
    );
    // exactly `limit` items: no marker
    assert_eq!(
        stdout(&["list", "palindromes", "2", "--limit", "2"]),
        "2\n1,1\n"
    );
}

#[test]
fn list_json() {
    let text = stdout(&["list", "palindromes", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v, serde_json::json!([[4], [2, 2], [1, 2, 1], [1, 1, 1, 1]]));
    let out = circomp(&[
        "list",
        "compositions",
        "6",
        "--format",
        "json",
        "--limit",
        "2",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v, serde_json::json!([[6], [1, 5]]));
    assert!(String::from_utf8_lossy(&out.stderr).contains("truncated"));
}

#[test]
fn list_errors() {
    assert_eq!(exit_code(&["list", "palindromes", "1"]), 2);
    assert_eq!(exit_code(&["list", "compositions", "5", "--limit", "0"]), 2);
    assert_eq!(exit_code(&["list", "compositions", "65"]), 2);
    assert_eq!(exit_code(&["list", "disconnected", "5"]), 2);
}

#[test]
fn convert() {
    assert_eq!(stdout(&["convert", "to-set", "2,1,2"]), "5: 0,2,3\n");
    assert_eq!(stdout(&["convert", "tau", "2,4,2"]), "8: 0,1,3,4,5,7\n");
    assert_eq!(stdout(&["convert", "tau-inv", "8:", "0,1,7"]), "1,6,1\n");
    assert_eq!(stdout(&["convert", "tau-inv", "8: 0,1,7"]), "1,6,1\n");
    assert_eq!(
        stdout(&["convert", "to-composition", "5: 0,2,3"]),
        "2,1,2\n"
    );
    assert_eq!(stdout(&["convert", "to-set", "12"]), "12: 0\n");
}

#[test]
fn convert_text_round_trip() {
    for c in ["2,1,2", "1,1,1,1", "7", "3,10,3", "1,4"] {
        let set = stdout(&["convert", "to-set", c]);
        assert_eq!(stdout(&["convert", "to-composition", set.trim()]).trim(), c);
    }
}

#[test]
fn convert_errors() {
    let out = circomp(&["convert", "tau", "1,4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a palindrome"));
    assert_eq!(exit_code(&["convert", "tau", "4,4"]), 2);
    assert_eq!(exit_code(&["convert", "tau-inv", "8: 0,2,6"]), 2);
    assert_eq!(exit_code(&["convert", "to-set", "1,,2"]), 2);
    assert_eq!(exit_code(&["convert", "to-composition", "5: 1,2"]), 2);
    assert_eq!(exit_code(&["convert", "sideways", "1"]), 2);
}

#[test]
fn graph() {
    assert_eq!(
        stdout(&["graph", "5", "0,1", "--mode", "digraph", "--format", "edgelist"]),
        "0 1\n1 2\n2 3\n3 4\n4 0\n"
    );
    assert_eq!(
        stdout(&["graph", "8", "0,4", "--mode", "graph", "--format", "edgelist"]),
        "0 4\n1 5\n2 6\n3 7\n"
    );
    let dot = stdout(&["graph", "8", "0,1,-1", "--mode", "graph"]);
    assert!(dot.starts_with("graph {"));
    assert_eq!(dot.matches(" -- ").count(), 8);
    assert_eq!(
        dot,
        stdout(&["graph", "8", "0,1,7", "--mode", "graph", "--format", "dot"])
    );
}

#[test]
fn graph_errors() {
    assert_eq!(exit_code(&["graph", "5", "1,2"]), 2);
    assert_eq!(exit_code(&["graph", "5", "0,1", "--mode", "graph"]), 2);
    assert_eq!(exit_code(&["graph", "0", "0"]), 2);
}

#[test]
fn table() {
    let text = stdout(&["table", "40"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 41);
    let row = |n: usize| -> Vec<&str> { lines[n].split_whitespace().collect() };
    assert_eq!(row(15)[2..4], ["16365", "19"]);
    assert_eq!(row(1)[2..4], ["1", "0"]);
    assert_eq!(row(24)[2], "8386440");

    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["table", "64", "--format", "json"])).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 64);
    assert!(rows[0]["aperiodic_palindromes"].is_null());
    assert_eq!(rows[7]["aperiodic_palindromes"], "12");
    for r in rows {
        let n = r["n"].as_u64().unwrap() as u32;
        let p: u128 = r["prime_compositions"].as_str().unwrap().parse().unwrap();
        let d: u128 = r["disconnected"].as_str().unwrap().parse().unwrap();
        assert_eq!(p + d, 1u128 << (n - 1));
    }
    assert_eq!(exit_code(&["table", "0"]), 2);
}

#[test]
fn deterministic_output() {
    let args = ["list", "prime-compositions", "9"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn verify() {
    let out = stdout(&["verify", "--workers", "2"]);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 9);
    assert!(out.ends_with("all 9 suites passed\n"));
    assert!(out.contains("connectivity-oracle        n <= 12"));
    assert!(stdout(&["verify", "--max-n", "2"]).ends_with("all 9 suites passed\n"));
}

#[test]
fn verify_catches_literal_gcd() {
    let out = circomp(&["verify", "--max-n", "8", "--inject-fault", "literal-gcd"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    let fail: Vec<&str> = text.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(fail.len(), 1);
    assert!(fail[0].contains("connectivity-oracle"));
    assert!(fail[0].contains("n = 1: {0}"));
}

#[test]
fn verify_errors() {
    assert_eq!(exit_code(&["verify", "--max-n", "1"]), 2);
    assert_eq!(exit_code(&["verify", "--workers", "0"]), 2);
}
