//! End-to-end checks of the command-line surface: schemas, formats,
//! and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finitop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("finitop-test-{}-{}", std::process::id(), name));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn quotient_condenses_unclosed_input() {
    let input = write_temp(
        "quotient.json",
        r#"{"n": 3, "pairs": [[0,1],[1,0],[0,2]], "closed": false}"#,
    );
    let out = run(&["quotient", "--input", input.to_str().unwrap()]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["quotient"]["n"], 2);
    assert_eq!(doc["class_of"], serde_json::json!([0, 0, 1]));
    assert_eq!(doc["classes"], serde_json::json!([[0, 1], [2]]));
}

#[test]
fn ideals_on_chain3() {
    let input = write_temp("chain3.json", r#"{"n": 3, "pairs": [[0,1],[1,2]]}"#);
    let out = run(&["ideals", "--input", input.to_str().unwrap()]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        doc["ideals"],
        serde_json::json!([[], [0], [0, 1], [0, 1, 2]])
    );

    let counted = run(&["ideals", "--count-only", "--input", input.to_str().unwrap()]);
    let doc: serde_json::Value = serde_json::from_slice(&counted.stdout).unwrap();
    assert_eq!(doc["count"], 4);
}

#[test]
fn ideals_dot_output_is_a_lattice_diagram() {
    let input = write_temp("v.json", r#"{"n": 3, "pairs": [[0,1],[0,2]]}"#);
    let out = run(&["ideals", "--format", "dot", "--input", input.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("digraph ideals"));
    assert!(text.contains("label=\"{0,1,2}\""));
}

#[test]
fn quotient_dot_is_a_hasse_diagram() {
    let input = write_temp("pre.json", r#"{"n": 4, "pairs": [[0,1],[1,0],[0,2],[2,3]]}"#);
    let out = run(&["quotient", "--format", "dot", "--input", input.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("digraph hasse"));
    // Condensed to a 3-chain: {0,1} < {2} < {3}, reduced edges only.
    assert!(text.contains("p0 -> p1;"));
    assert!(text.contains("p1 -> p2;"));
    assert!(!text.contains("p0 -> p2;"));
}

#[test]
fn product_emits_pinned_schema() {
    let input = write_temp(
        "product.json",
        r#"{"x": 2,
            "f": {"m": 2, "pairs": [[0,0],[0,1],[1,1]]},
            "q": {"n": 2, "pairs": [[0,1]]}}"#,
    );
    let out = run(&["product", "--input", input.to_str().unwrap()]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["X"], 2);
    assert_eq!(doc["elements"], serde_json::json!([[0, 0], [1, 0], [1, 1]]));
}

#[test]
fn topology_and_check_pots_round_trip() {
    let input = write_temp("chain2.json", r#"{"n": 2, "pairs": [[0,1]]}"#);
    let out = run(&["topology", "--input", input.to_str().unwrap()]);
    assert!(out.status.success());
    let space: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(space["opens"], serde_json::json!([[], [0], [1], [0, 1]]));

    let ordered = write_temp(
        "ordered.json",
        &format!(
            r#"{{"space": {}, "order": {{"n": 2, "pairs": [[0,1]]}}}}"#,
            String::from_utf8(out.stdout).unwrap().trim()
        ),
    );
    let report = run(&["check-pots", "--input", ordered.to_str().unwrap()]);
    assert!(report.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&report.stdout).unwrap();
    assert_eq!(doc["continuous"], true);
    assert_eq!(doc["agree"], true);
}

#[test]
fn check_relation_reports_the_four_axioms() {
    // γ on a discrete two-point space.
    let bare = write_temp("gamma.json", r#"{"m": 2, "pairs": [[0,0],[0,1],[1,1]]}"#);
    let out = run(&["check-relation", "--input", bare.to_str().unwrap()]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["closed"], true);
    assert_eq!(doc["idempotent"], true);
    assert_eq!(doc["surjective"], true);
    assert_eq!(doc["serial"], true);
    assert_eq!(doc["v_relation"], true);

    // The identity on an explicit non-discrete space: its graph is not
    // closed in the square.
    let with_space = write_temp(
        "iota-sierpinski.json",
        r#"{"f": {"m": 2, "pairs": [[0,0],[1,1]]},
            "space": {"k": 2, "opens": [[], [0], [0,1]]}}"#,
    );
    let out = run(&["check-relation", "--input", with_space.to_str().unwrap()]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["closed"], false);
    assert_eq!(doc["v_relation"], false);
}

#[test]
fn separation_report_has_the_pinned_keys() {
    let indiscrete = write_temp("indiscrete.json", r#"{"k": 2, "opens": [[], [0,1]]}"#);
    let out = run(&["separation", "--input", indiscrete.to_str().unwrap()]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["t1"], false);
    assert_eq!(doc["hausdorff"], false);
    assert_eq!(doc["witness"], serde_json::json!([0, 1]));
}

#[test]
fn count_tabulates_the_catalog_as_csv() {
    let out = run(&["count"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("name,n,ideals\n"));
    assert!(text.contains("chain4,4,5"));
    assert!(text.contains("antichain4,4,16"));
    assert!(text.contains("diamond,4,6"));
}

#[test]
fn count_accepts_a_batch_file() {
    let input = write_temp(
        "batch.json",
        r#"[{"n": 2, "pairs": []}, {"n": 3, "pairs": [[0,1],[1,2]]}]"#,
    );
    let out = run(&["count", "--input", input.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("poset0,2,4"));
    assert!(text.contains("poset1,3,4"));
}

#[test]
fn exit_codes_are_documented_ones() {
    // Input error: malformed JSON.
    let bad = write_temp("bad.json", "{nope");
    let out = run(&["ideals", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("error(input):"));
    assert_eq!(err.lines().count(), 1);

    // Input error: missing input file argument.
    let out = run(&["ideals"]);
    assert_eq!(out.status.code(), Some(2));

    // Input error: a preorder that is not a poset where one is needed.
    let cyclic = write_temp("cyclic.json", r#"{"n": 2, "pairs": [[0,1],[1,0]]}"#);
    let out = run(&["ideals", "--input", cyclic.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // Capacity guard: too many ideals.
    let anti = write_temp("anti12.json", r#"{"n": 12, "pairs": []}"#);
    let out = run(&["ideals", "--max-ideals", "100", "--input", anti.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("error(capacity):"));

    // Verification failure: the bundled suite has one honest red row.
    let out = run(&["verify", "--seed", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS ideal-counts"));
    assert!(text.contains("FAIL example8-truncations"));
}

#[test]
fn output_flag_writes_the_file() {
    let input = write_temp("chain2b.json", r#"{"n": 2, "pairs": [[0,1]]}"#);
    let outfile = std::env::temp_dir().join(format!("finitop-out-{}.json", std::process::id()));
    let out = run(&[
        "ideals",
        "--input",
        input.to_str().unwrap(),
        "--output",
        outfile.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&outfile).unwrap();
    assert!(text.contains("\"ideals\""));
}

#[test]
fn unsupported_format_is_an_input_error() {
    let input = write_temp("chain2c.json", r#"{"n": 2, "pairs": [[0,1]]}"#);
    let out = run(&["product", "--format", "csv", "--input", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}
