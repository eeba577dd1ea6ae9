//! End-to-end tests of the `loewy` binary: output shapes, exit codes, and
//! byte-for-byte determinism.

use std::process::{Command, Output};

fn loewy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loewy"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn analyze_reports_the_cubic() {
    let out = loewy(&["analyze", "--field", "2", "--f", "x*y*(x+y)", "--exact", "--max-g", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["index"], 3);
    assert_eq!(doc["order"], 3);
    assert_eq!(doc["gll"]["lower"], 4);
    assert_eq!(doc["gll"]["upper"], 4);
    assert_eq!(doc["gll"]["exact"], true);
    assert_eq!(doc["linear_zerodivisors"].as_array().unwrap().len(), 3);
    assert_eq!(doc["gr_regular_form_found"]["degree"], 2);
}

#[test]
fn analyze_linear_witness_family_over_gf5() {
    let out = loewy(&["analyze", "--field", "5", "--f", "x*y*(x^3+y^3)"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["index"], 5);
    assert_eq!(doc["gll"]["lower"], 5);
    assert_eq!(doc["gll"]["upper"], 5);
    assert_eq!(doc["gll"]["exact"], true);
    assert_eq!(doc["gr_regular_form_found"]["degree"], 1);
}

#[test]
fn analyze_regular_ring() {
    let out = loewy(&["analyze", "--field", "2", "--f", "x"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["index"], 1);
    assert_eq!(doc["gll"]["lower"], 1);
    assert_eq!(doc["gll"]["upper"], 1);
}

#[test]
fn analyze_comprehension_over_gf3() {
    let out = loewy(&["analyze", "--field", "3", "--f", "y*prod(alpha in k, x+alpha*y)", "--max-t", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["index"], 4);
    assert_eq!(doc["gll"]["lower"], 5);
    assert_eq!(doc["gll"]["upper"], 5);
    assert_eq!(doc["gll"]["exact"], true);
}

#[test]
fn analyze_extension_field() {
    let out = loewy(&["analyze", "--field", "2^2", "--f", "y*prod(a in k, x+a*y)", "--max-t", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["field"]["q"], 4);
    assert_eq!(doc["field"]["modulus"], serde_json::json!([1, 1, 1]));
    assert_eq!(doc["index"], 5);
    assert_eq!(doc["gll"]["exact"], true);
    assert_eq!(doc["gll"]["upper"], 6);
}

#[test]
fn analyze_rejects_bad_input() {
    // parse error in the expression
    let out = loewy(&["analyze", "--field", "2", "--f", "x*((y"]);
    assert_eq!(out.status.code(), Some(1));
    // composite characteristic
    let out = loewy(&["analyze", "--field", "6", "--f", "x"]);
    assert_eq!(out.status.code(), Some(1));
    // unknown flag (usage error)
    let out = loewy(&["analyze", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(1));
    // --exact without --max-g
    let out = loewy(&["analyze", "--field", "2", "--f", "x*y*(x+y)", "--exact"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn analyze_budget_exhaustion_exits_2() {
    let out = loewy(&[
        "analyze", "--field", "2", "--f", "x*y*(x+y)", "--exact", "--max-g", "4", "--budget", "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn semigroup_reports_pair() {
    let out = loewy(&["semigroup", "--gens", "3,5", "--oracle"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["conductor"], 8);
    assert_eq!(doc["gaps"], serde_json::json!([1, 2, 4, 7]));
    assert_eq!(doc["apery"]["set"], serde_json::json!([0, 5, 10]));
    assert_eq!(doc["ggl"]["value"], 11);
    assert_eq!(doc["ggl"]["oracle_agrees"], true);
    assert_eq!(doc["ggl_witnesses"], serde_json::json!([3]));
    assert_eq!(doc["gll_graded"]["value"], 3);
    assert_eq!(doc["prop43_ok"], true);
}

#[test]
fn semigroup_rejects_bad_generators() {
    let out = loewy(&["semigroup", "--gens", "4,6"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn scan_single_class_for_linear_forms() {
    let out = loewy(&["scan", "--field", "2", "--order", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("f,index,gll_lower,gll_upper,gll_exact,gap,witness"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 1);
    assert!(rows[0].starts_with("x,1,1,1,true,0"));
}

#[test]
fn scan_cubics_over_gf2() {
    let out = loewy(&["scan", "--field", "2", "--order", "3", "--max-g", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("x^2*y + x*y^2,3,4,4,true,1"));
}

#[test]
fn verify_paper_all_match_and_deterministic() {
    let a = loewy(&["verify-paper"]);
    assert_eq!(a.status.code(), Some(0));
    let b = loewy(&["verify-paper"]);
    assert_eq!(b.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout, "identical bytes across runs");
    let text = stdout(&a);
    assert!(text.contains("c1-exhaustive"));
    assert!(text.contains("0 other"));
}

#[test]
fn verify_paper_subset_and_injection() {
    let out = loewy(&["verify-paper", "--only", "prop312"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("prop312[p=5,m=2,n=0]"));
    assert!(!text.contains("c5-pairs"));
    assert!(text.contains("5 rows: 5 match"));

    let out = loewy(&["verify-paper", "--only", "c6", "--inject-mismatch"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("injected-mismatch"));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("loewy-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("scan.csv");
    let out = loewy(&["scan", "--field", "2", "--order", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let content = std::fs::read_to_string(&path).unwrap();
    assert!(content.starts_with("f,index"));
    std::fs::remove_dir_all(&dir).unwrap();
}
