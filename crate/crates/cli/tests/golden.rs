use std::process::{Command, Output};

use borel_cli::dot::validate_dot;

fn borel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_borel")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = borel(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn same(got: &str, want: &str) {
    let trim = |s: &str| s.lines().map(str::trim_end).collect::<Vec<_>>().join("\n").trim_end().to_string();
    assert_eq!(trim(got), trim(want));
}

#[test]
fn gotzmann_golden() {
    same(&stdout(&["gotzmann", "-p", "6z-3"]), "r = 12");
    same(&stdout(&["gotzmann", "-p", "2/3z^3+2z^2-11/3z+10"]), "r = 6");
    same(
        &stdout(&["gotzmann", "-p", "3z+1", "--json"]),
        r#"{"polynomial":"3z+1","gotzmann":4,"decomposition":[1,1,1,0],"macaulay":[4,3]}"#,
    );
}

#[test]
fn classify_golden() {
    same(
        &stdout(&["classify", "x2^2, x1*x2", "-n", "2", "--order", "revlex"]),
        "order = revlex
segment = false
hilb = true
reg = true
gen = true
gotzmann = 2
regularity = 2
witness = degree 3: x0*x2^2 inside, x1^3 outside",
    );
    same(
        &stdout(&["classify", "x2^2, x1*x2, x1^4", "--order", "w:4,2,1", "--json"]),
        r#"{"order":"w:4,2,1","segment":true,"hilb":true,"reg":true,"gen":true,"gotzmann":5,"regularity":4,"witness":null}"#,
    );
}

#[test]
fn enumerate_golden() {
    same(
        &stdout(&["enumerate", "-n", "2", "-p", "5"]),
        "p = 5, n = 2, r = 5, count = 3
(x2, x1^5)
(x2^2, x1*x2, x1^4)
(x2^2, x1^2*x2, x1^3)",
    );
    same(
        &stdout(&["enumerate", "-n", "2", "-p", "3", "--format", "json"]),
        r#"{"polynomial":"3","n":2,"gotzmann":3,"count":2,"ideals":[{"n":2,"generators":[[0,0,1],[0,3,0]]},{"n":2,"generators":[[0,0,2],[0,1,1],[0,2,0]]}]}"#,
    );
    let one = stdout(&["enumerate", "-n", "3", "-p", "2z+2", "--jobs", "1"]);
    let four = stdout(&["enumerate", "-n", "3", "-p", "2z+2", "--jobs", "4"]);
    assert_eq!(one, four);
}

#[test]
fn hilbert_and_witness_golden() {
    same(
        &stdout(&["hilbert", "x2^2, x1^3*x2, x1^4"]),
        "H = 1, 3, 5, 7, 7, 7, 7
p = 7
r = 7
reg = 4",
    );
    same(
        &stdout(&["witness", "x2^3, x1^3*x2^2, x1^5*x2, x1^6", "--from", "6", "--to", "6"]),
        "t = 6: x0^2*x1^2*x2^2 * x0*x1^4*x2 = x0^3*x2^3 * x1^6",
    );
    same(&stdout(&["witness", "x2, x1^4"]), "none in degrees 1..=4");
}

#[test]
fn stratum_golden() {
    let seven = "x3^2, x2*x3, x2^2, x1^2*x3, x1^2*x2, x1^3";
    let text = stdout(&["stratum", seven, "--order", "revlex", "--truncate", "auto", "--ed-only"]);
    assert!(text.lines().any(|l| l == "ed = 27"), "{text}");
    assert!(text.contains("certificate = 6 * 3 = 18 vs nd = 21: inconclusive"));
    assert!(text.lines().any(|l| l == "singular = true"));
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["stratum", "x2", "-n", "2", "--order", "revlex", "--json"])).unwrap();
    assert_eq!(v["ed"], 2);
    assert_eq!(v["vars"].as_array().unwrap().len(), 2);
    assert_eq!(v["vars"][0]["beta"], "x1");
}

#[test]
fn graph_output_is_valid_dot() {
    let dot = stdout(&["graph", "x3^2, x2*x3, x2^3", "-t", "3"]);
    validate_dot(&dot).unwrap();
    assert_eq!(dot.lines().filter(|l| l.contains("shape=box")).count(), 8);
    same(&stdout(&["graph", "", "-n", "2", "-t", "0"]), "digraph \"T_0\" {\n  rankdir=TB;\n  \"1\";\n}");
}

#[test]
fn exit_codes() {
    assert_eq!(borel(&["gotzmann", "-p", "z^2"]).status.code(), Some(1));
    assert_eq!(borel(&["enumerate", "-n", "1", "-p", "z^2+1"]).status.code(), Some(1));
    assert_eq!(borel(&["classify", "x1*x2, x2^2, x0*x2"]).status.code(), Some(1));
    assert_eq!(borel(&["gotzmann", "-p", "z^^2"]).status.code(), Some(2));
    assert_eq!(borel(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(borel(&["classify", "x2", "--order", "w:1,2,4"]).status.code(), Some(2));
    assert_eq!(borel(&["--help"]).status.code(), Some(0));
}
