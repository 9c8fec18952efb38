//! End-to-end runs of the `polyalg` binary: output shape, exit codes and
//! determinism.

use std::process::{Command, Output};

use serde_json::{json, Value};

fn polyalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyalg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn eta_on_a_cube_flat() {
    let out = polyalg(&["eta", "--type", "C", "--d", "3", "--flat", "X_{1,3}"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["flat"], "X_{1,3}");
    assert_eq!(v["values"]["mobius_formula"], json!([0, 0, 1, 0]));
    assert_eq!(v["agree"], true);
}

#[test]
fn eta_table_for_a4_has_every_flat() {
    let out = polyalg(&["eta", "--type", "A", "--d", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["table"].as_array().unwrap().len(), 15);
    let bottom = v["table"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["flat"] == "{1234}")
        .unwrap();
    // Four-cycles with one, two and three excedances.
    assert_eq!(bottom["permutation_count"], json!([0, 1, 4, 1, 0]));
}

#[test]
fn verify_thm_a_reports_every_flat() {
    let out = polyalg(&["verify", "thm-a", "--d", "4"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let v = json_of(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["table"].as_array().unwrap().len(), 15);
}

#[test]
fn verify_all_quick_passes_and_is_deterministic() {
    let a = polyalg(&["verify", "all", "--quick", "--seed", "7"]);
    let b = polyalg(&["verify", "all", "--quick", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json_of(&a);
    assert!(v["suites"]
        .as_array()
        .unwrap()
        .iter()
        .all(|s| s["pass"] == true));
}

#[test]
fn decompose_reads_a_polytope_file() {
    let dir = std::env::temp_dir().join(format!("polyalg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pi_b2.json");
    let square_octagon = json!({
        "arrangement": "B", "d": 2,
        "points": [["1","2"],["2","1"],["-1","2"],["-2","1"],["1","-2"],["2","-1"],["-1","-2"],["-2","-1"]]
    });
    std::fs::write(&path, square_octagon.to_string()).unwrap();
    let out = polyalg(&[
        "decompose",
        "--type",
        "B",
        "--input",
        path.to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json_of(&out);
    assert_eq!(v["reconstructed"], true);
    assert!(!v["coefficients"].as_object().unwrap().is_empty());
    let out = polyalg(&[
        "decompose",
        "--type",
        "A",
        "--input",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn stats_match_eulerian_numbers() {
    let out = polyalg(&["stats", "--group", "S", "--d", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["excedances"], json!([1, 26, 66, 26, 1, 0]));
    assert_eq!(v["order"], 120);
    let out = polyalg(&["stats", "--group", "B", "--d", "3", "--format", "csv"]);
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("k,excedances,descents,eulerian\n0,1,1,1\n1,23,23,23\n"));
}

#[test]
fn bad_input_exits_with_code_two() {
    assert_eq!(
        polyalg(&["eta", "--type", "D", "--d", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        polyalg(&["eta", "--type", "A", "--d", "3", "--flat", "{12,4}"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        polyalg(&["verify", "thm-b", "--d", "9"]).status.code(),
        Some(2)
    );
    assert_eq!(polyalg(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(polyalg(&["--help"]).status.code(), Some(0));
}
