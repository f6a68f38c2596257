use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn eqhom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqhom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

fn write_temp(dir: &tempfile::TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn groups(report: &Value, key: &str) -> Vec<String> {
    report["degrees"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| {
            let g = &row[key];
            format!("{}:{}", g["free_rank"], g["torsion"])
        })
        .collect()
}

#[test]
fn point_follows_group_cohomology() {
    let out = eqhom(&[
        "compute",
        "--builtin",
        "point",
        "--coeff",
        "Z",
        "--range",
        "-3..0",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let report = json(&out);
    assert_eq!(groups(&report, "homology"), ["0:[]", "0:[2]", "0:[]", "1:[]"]);
}

#[test]
fn circle_reflection_mod_two_dimensions() {
    let out = eqhom(&[
        "compute",
        "--builtin",
        "circle-reflection",
        "--coeff",
        "Z2",
        "--range",
        "-2..1",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let dims: Vec<usize> = json(&out)["degrees"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| row["homology"]["torsion"].as_array().unwrap().len())
        .collect();
    assert_eq!(dims, [2, 2, 2, 1]);
}

#[test]
fn text_output_has_one_line_per_degree() {
    let out = eqhom(&["compute", "--builtin", "circle-antipodal", "--range", "-1..1", "--text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let degree_lines = text
        .lines()
        .filter(|l| l.trim_start().starts_with(['-', '0', '1']))
        .count();
    assert_eq!(degree_lines, 3, "{text}");
}

#[test]
fn malformed_complexes_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let broken = write_temp(&dir, "broken.json", r#"{"vertices": 2, "simplices": [[0, 1]"#);
    let out = eqhom(&["compute", "--complex", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("malformed JSON"));

    let typo = write_temp(
        &dir,
        "typo.json",
        r#"{"vertices": 2, "simplices": [[0, 1]], "involutoin": [1, 0]}"#,
    );
    let out = eqhom(&["compute", "--complex", typo.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("involutoin"), "{}", stderr(&out));

    let out = eqhom(&["compute", "--builtin", "no-such-space"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn setwise_fixed_edges_are_subdivided() {
    let dir = tempfile::tempdir().unwrap();
    let flip = write_temp(
        &dir,
        "flip.json",
        r#"{"vertices": 2, "simplices": [[0, 1]], "involution": [1, 0]}"#,
    );
    let out = eqhom(&[
        "compute",
        "--complex",
        flip.to_str().unwrap(),
        "--range",
        "0..0",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stderr(&out).contains("subdivided"));
}

#[test]
fn classify_a_type_file() {
    let dir = tempfile::tempdir().unwrap();
    let t = write_temp(
        &dir,
        "type.json",
        r#"{"half1": [{"orientable": false, "genus": 3}], "half2": [{"orientable": true, "genus": 0}]}"#,
    );
    let out = eqhom(&["classify", t.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &json(&out)["types"][0]["result"];
    assert_eq!(r["dim_h1"], 3);
    assert_eq!(r["dim_h1_alg"], 2);
    assert_eq!(r["is_gm"], true);
    assert_eq!(r["is_zgm"], true);
    assert_eq!(r["brauer"]["free_rank"], 0);
    assert_eq!(r["brauer"]["torsion"], serde_json::json!([2, 2, 2]));
}

#[test]
fn classify_rejects_genus_twelve() {
    let dir = tempfile::tempdir().unwrap();
    let t = write_temp(&dir, "type.json", r#"{"half1": [{"orientable": false, "genus": 12}]}"#);
    let out = eqhom(&["classify", t.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("half1[0]"));
}

#[test]
fn enumeration_is_keyed_and_repeatable() {
    let a = eqhom(&["classify", "--enumerate", "2", "--json"]);
    let b = eqhom(&["classify", "--enumerate", "2", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let rows = json(&a)["types"].as_array().unwrap().clone();
    assert_eq!(rows.len(), 1 + 13 + 182);
    assert_eq!(rows[0]["type"], "- | -");
    assert_eq!(eqhom(&["classify", "--enumerate", "9"]).status.code(), Some(2));
}

#[test]
fn verify_reports_counts_and_exit_status() {
    let out = eqhom(&["verify", "duality", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["failed"], 0);
    assert!(r["cases"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["module"].is_string() && c["input"].is_string()));
    assert_eq!(eqhom(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn e2_page_renders() {
    let out = eqhom(&["e2", "--builtin", "circle-reflection", "--coeff", "Z", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let page = &json(&out)["page"];
    assert_eq!(page["coeff"], "Z");
    assert!(!page["entries"].as_array().unwrap().is_empty());
}
