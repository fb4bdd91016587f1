//! End-to-end checks of the command-line surface: deterministic output,
//! exit codes, and the documented JSON shapes.

use std::process::Command;

fn vinberg(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_vinberg"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn list_cases_is_stable() {
    let (out, _, code) = vinberg(&["list-cases"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 10);
    assert_eq!(lines[0], "E6.1");
    assert_eq!(lines[9], "G2.2");
}

#[test]
fn grade_json_matches_the_documented_shape() {
    let (out, _, code) = vinberg(&["grade", "E6.2", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["case"], "E6.2");
    assert_eq!(v["dims"]["0"], 36);
    assert_eq!(v["dims"]["1"], 20);
    assert_eq!(v["dims"]["2"], 1);
}

#[test]
fn orbits_json_lists_types_and_dims() {
    let (out, _, code) = vinberg(&["orbits", "F4.4", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let orbits = v["orbits"].as_array().unwrap();
    assert_eq!(orbits.len(), 3);
    assert_eq!(orbits[1]["type"], "~A1");
    assert_eq!(orbits[1]["dim"], 7);
    assert_eq!(orbits[1]["rep"][0], serde_json::json!([0, 0, 0, 1]));
}

#[test]
fn hilbert_json_round_trips_a_table_row() {
    let (out, _, code) = vinberg(&["hilbert", "F4.1", "2", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["numerator"], serde_json::json!([1, 4, 10, 6]));
    assert_eq!(v["degree"], 21);
}

#[test]
fn dot_output_is_deterministic() {
    let dir = std::env::temp_dir().join("vinberg-dot-test");
    std::fs::create_dir_all(&dir).unwrap();
    let p1 = dir.join("a.dot");
    let p2 = dir.join("b.dot");
    let (_, _, c1) = vinberg(&["hasse", "G2.2", "--dot", p1.to_str().unwrap()]);
    let (_, _, c2) = vinberg(&["hasse", "G2.2", "--dot", p2.to_str().unwrap()]);
    assert_eq!((c1, c2), (0, 0));
    let a = std::fs::read_to_string(&p1).unwrap();
    let b = std::fs::read_to_string(&p2).unwrap();
    assert_eq!(a, b);
    assert!(a.contains("O1 -> O2"));
    assert!(a.contains("dim 3"));
}

#[test]
fn bad_input_exits_with_computational_failure() {
    let (_, err, code) = vinberg(&["orbits", "E6.9"]);
    assert_eq!(code, 3);
    assert!(err.contains("out of range"));
}

#[test]
fn bott_subcommand_matches_the_rule() {
    let (out, _, code) = vinberg(&["bott", "--space", "grass:1,2", "--weight", "-2;0"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["cohomological_degree"], 1);
    assert_eq!(v["dim"], "1");
    let (out, _, _) = vinberg(&["bott", "--space", "grass:1,2", "--weight", "-1;0"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["zero"], true);
}

#[test]
fn verify_paper_strict_passes_on_a_clean_family() {
    let (out, _, code) = vinberg(&["verify-paper", "G2", "--strict"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("0 fail"));
}
