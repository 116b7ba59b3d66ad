use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use eqcodes::document::CodeDocument;
use serde_json::Value;

fn eqcodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqcodes")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn construct(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.join(format!("{name}.json"));
    let mut all = vec!["construct"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--out", path.to_str().unwrap()]);
    let o = eqcodes(&all);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    path
}

fn verify(path: &Path, expect: &[&str]) -> Output {
    let mut all = vec!["verify", path.to_str().unwrap()];
    all.extend_from_slice(expect);
    eqcodes(&all)
}

#[test]
fn constructions_pass_their_own_expectations() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[(&str, &[&str], &[&str])] = &[
        ("spread", &["spread", "--q", "2", "--n", "4", "--k", "2"], &["--expect-t", "0", "--expect-size", "5"]),
        (
            "plucker",
            &["plucker", "--q", "2", "--n", "4"],
            &["--expect-t", "1", "--expect-size", "15", "--expect-d", "4"],
        ),
        ("recursive", &["recursive", "--q", "3", "--n", "4"], &["--expect-t", "1", "--expect-size", "40"]),
        (
            "ball",
            &["ball", "--q", "2", "--n", "6", "--k", "3"],
            &["--expect-t", "2", "--expect-size", "15", "--expect-sunflower", "false"],
        ),
        (
            "sunflower",
            &["sunflower", "--q", "2", "--n", "5", "--k", "3", "--t", "1"],
            &["--expect-t", "1", "--expect-size", "5", "--expect-sunflower", "true"],
        ),
        ("g263", &["example-g263"], &["--expect-t", "1", "--expect-size", "16", "--expect-sunflower", "false"]),
        ("mixed", &["mixed-projective", "--n", "7"], &["--expect-d", "4", "--expect-size", "12"]),
    ];
    for (name, args, expect) in cases {
        let path = construct(dir.path(), name, args);
        let o = verify(&path, expect);
        assert!(o.status.success(), "{name}: {}", stdout(&o));
        assert!(stdout(&o).contains("verification passed"));
    }
}

#[test]
fn derived_constructions_read_their_input() {
    let dir = tempfile::tempdir().unwrap();
    let spread = construct(dir.path(), "spread", &["spread", "--q", "2", "--n", "4", "--k", "2"]);
    let ext = construct(dir.path(), "ext", &["extend", "--input", spread.to_str().unwrap(), "--l", "2"]);
    assert!(verify(&ext, &["--expect-t", "2", "--expect-size", "5", "--expect-sunflower", "true"]).status.success());
    let orth = construct(dir.path(), "orth", &["orthogonal", "--input", ext.to_str().unwrap()]);
    // t' = n - 2k + t = 6 - 8 + 2
    assert!(verify(&orth, &["--expect-t", "0", "--expect-size", "5"]).status.success());
    let doc = CodeDocument::from_json(&std::fs::read_to_string(&orth).unwrap()).unwrap();
    assert!(doc.provenance.unwrap().starts_with("orthogonal of (extend l=2 of (spread"));
}

#[test]
fn documents_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "plucker", &["plucker", "--q", "3", "--n", "3"]);
    let text = std::fs::read_to_string(&path).unwrap();
    let doc = CodeDocument::from_json(&text).unwrap();
    let code = doc.to_code().unwrap();
    assert_eq!(code.len(), 13);
    let again = CodeDocument::from_code(&code, true, doc.provenance.clone()).unwrap();
    assert_eq!(again, doc);
}

#[test]
fn tampered_document_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "g263", &["example-g263"]);
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    // a 3-subspace disjoint from span{α^0, α^1, α^2}
    doc["words"][3]["basis"] = serde_json::json!([[0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]]);
    std::fs::write(&path, doc.to_string()).unwrap();
    let o = verify(&path, &["--expect-t", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let out = stdout(&o);
    assert!(out.contains("[FAIL] equidistant"), "{out}");
    assert!(out.contains("[FAIL] embedded profile"), "{out}");

    // without the embedded profile only the expectation catches it
    doc.as_object_mut().unwrap().remove("profile");
    std::fs::write(&path, doc.to_string()).unwrap();
    assert_eq!(verify(&path, &["--expect-t", "1"]).status.code(), Some(2));
    assert_eq!(verify(&path, &[]).status.code(), Some(0));
}

#[test]
fn verify_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "spread", &["spread", "--q", "3", "--n", "4", "--k", "2"]);
    let o = eqcodes(&["verify", path.to_str().unwrap(), "--expect-size", "10", "--json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["ok"], true);
    assert_eq!(v["profile"]["t"], 0);
}

#[test]
fn bounds_table() {
    let out = stdout(&eqcodes(&["bounds", "--q", "2", "--n", "8", "--k", "3"]));
    assert!(out.contains("exact 34"), "{out}");
    let out = stdout(&eqcodes(&["bounds", "--q", "2", "--k", "3", "--t", "1"]));
    assert!(out.contains("43"), "{out}");
    let o = eqcodes(&["bounds", "--q", "2", "--n", "6", "--k", "3", "--t", "1", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["fw_bound"], "155");
    assert_eq!(v["sunflower_bound"], "43");
    assert_eq!(eqcodes(&["bounds", "--q", "6", "--n", "4", "--k", "2"]).status.code(), Some(1));
}

#[test]
fn rankcode_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = eqcodes(&["rankcode", "--q", "2", "--n", "3", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("7 matrices of shape 3x3, rank 2, distance 2"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["words"].as_array().unwrap().len(), 7);
}

#[test]
fn searches_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.json");
    let out = out.to_str().unwrap();
    let o = eqcodes(&["search", "spread", "--q", "2", "--n", "5", "--k", "2", "--node-limit", "10^7", "--out", out]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("size 9, certified optimal"));

    let o = eqcodes(&["search", "clique", "--q", "2", "--n", "4", "--k", "3", "--t", "2", "--out", out, "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["size"].as_u64(), v["certified_optimal"].as_bool()), (Some(15), Some(true)));

    let o = eqcodes(&["search", "spread", "--q", "2", "--n", "5", "--k", "2", "--node-limit", "1e1", "--out", out]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("NOT certified"));
}

#[test]
fn usage_and_parse_errors_exit_1() {
    assert_eq!(eqcodes(&["construct", "nonsense"]).status.code(), Some(1));
    assert_eq!(eqcodes(&["construct", "spread", "--q", "2", "--n", "5", "--k", "2"]).status.code(), Some(1));
    assert_eq!(eqcodes(&["construct", "plucker", "--q", "2"]).status.code(), Some(1));
    assert_eq!(
        eqcodes(&["search", "spread", "--q", "2", "--n", "4", "--k", "2", "--node-limit", "ten"]).status.code(),
        Some(1)
    );
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"format_version\": \"1\"").unwrap();
    assert_eq!(verify(&bad, &[]).status.code(), Some(1));
    assert_eq!(eqcodes(&["--help"]).status.code(), Some(0));
}

#[test]
fn document_on_stdout_without_out_flag() {
    let o = eqcodes(&["construct", "spread", "--q", "2", "--n", "4", "--k", "2"]);
    let doc = CodeDocument::from_json(&stdout(&o)).unwrap();
    assert_eq!(doc.words.len(), 5);
    assert_eq!(doc.profile.unwrap().t, Some(0));
}
