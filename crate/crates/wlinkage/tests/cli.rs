//! End-to-end tests of the `wlinkage` binary: exit codes, schema-valid
//! JSON, DOT structure, environment defaults, and byte-level determinism
//! across processes.

use std::process::{Command, Output};

fn wlinkage(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wlinkage"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn block_schema() -> serde_json::Value {
    let path = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../schema/block-report.schema.json"
    );
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn assert_matches_schema(instance: &serde_json::Value) {
    let validator = jsonschema::validator_for(&block_schema()).expect("schema compiles");
    let errors: Vec<String> = validator
        .iter_errors(instance)
        .map(|e| e.to_string())
        .collect();
    assert!(errors.is_empty(), "schema violations: {errors:#?}");
}

#[test]
fn block_reports_validate_against_the_shipped_schema() {
    for args in [
        vec![
            "block",
            "--type",
            "A",
            "--rank",
            "1",
            "--level",
            "-3",
            "--weight",
            "0",
            "--max-len",
            "5",
        ],
        vec![
            "block",
            "--type",
            "A",
            "--rank",
            "2",
            "--level",
            "-4",
            "--weight",
            "0,0",
            "--max-len",
            "5",
        ],
        vec![
            "block",
            "--type",
            "A",
            "--rank",
            "1",
            "--level",
            "-5/2",
            "--weight",
            "-1/2",
            "--max-len",
            "4",
        ],
        vec![
            "block",
            "--type",
            "B",
            "--rank",
            "2",
            "--level",
            "generic-neg",
            "--weight",
            "0,0",
            "--max-len",
            "4",
        ],
    ] {
        let out = wlinkage(&args);
        let v = stdout_json(&out);
        assert_matches_schema(&v);
    }
}

#[test]
fn chain_block_has_frozen_shape() {
    let out = wlinkage(&[
        "block",
        "--type",
        "A",
        "--rank",
        "1",
        "--level",
        "-3",
        "--weight",
        "0",
        "--max-len",
        "5",
    ]);
    let v = stdout_json(&out);
    let words: Vec<Vec<u64>> = v["cosets"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            c["word"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_u64().unwrap())
                .collect()
        })
        .collect();
    assert_eq!(words, vec![vec![], vec![0, 1], vec![0, 1, 0, 1]]);
    assert_eq!(v["hasse_edges"], serde_json::json!([[0, 1], [1, 2]]));
    assert_eq!(
        v["hom_matrix"],
        serde_json::json!([[1, 1, 1], [0, 1, 1], [0, 0, 1]])
    );
    assert_eq!(v["flip"]["dual_weight_class"], serde_json::json!(["-2"]));
}

#[test]
fn dot_output_is_an_acyclic_digraph() {
    let out = wlinkage(&[
        "block",
        "--type",
        "A",
        "--rank",
        "2",
        "--level",
        "-4",
        "--weight",
        "0,0",
        "--max-len",
        "5",
        "--format",
        "dot",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("digraph block {"));
    assert!(text.trim_end().ends_with('}'));

    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if let Some(rest) = line.strip_prefix('n') {
            if line.contains("->") {
                let (a, b) = rest.split_once("->").unwrap();
                let a: usize = a.trim().parse().unwrap();
                let b: usize = b
                    .trim()
                    .trim_start_matches('n')
                    .trim_end_matches(';')
                    .trim()
                    .parse()
                    .unwrap();
                edges.push((a, b));
            } else if line.contains("[label=") {
                let id: usize = rest.split_whitespace().next().unwrap().parse().unwrap();
                nodes.push(id);
            }
        }
    }
    assert!(!nodes.is_empty());
    assert!(!edges.is_empty());
    for &(a, b) in &edges {
        assert!(
            nodes.contains(&a) && nodes.contains(&b),
            "edge endpoints declared"
        );
        // Edges always point from shorter to longer representative, so the
        // index order witnesses acyclicity.
        assert!(a < b);
    }
}

#[test]
fn exit_codes_by_failure_class() {
    // Fine input: 0.
    let out = wlinkage(&["virasoro", "-k", "-3", "-v", "0"]);
    assert_eq!(out.status.code(), Some(0));

    // Critical level: 2.
    let out = wlinkage(&[
        "block", "--type", "A", "--rank", "1", "--level", "-2", "--weight", "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("critical"));

    // Malformed flags: 2.
    let out = wlinkage(&[
        "block", "--type", "A", "--rank", "one", "--level", "-3", "--weight", "0",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // Insufficient certification bound: 3.
    let out = wlinkage(&[
        "block",
        "--type",
        "A",
        "--rank",
        "1",
        "--level",
        "-3",
        "--weight",
        "0",
        "--search-bound",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("inconclusive"));
}

#[test]
fn identical_invocations_are_byte_identical_across_processes() {
    let args = [
        "block",
        "--type",
        "A",
        "--rank",
        "2",
        "--level",
        "-4",
        "--weight",
        "0,0",
        "--max-len",
        "6",
    ];
    let a = wlinkage(&args);
    let b = wlinkage(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let args_dot = [
        "block",
        "--type",
        "A",
        "--rank",
        "2",
        "--level",
        "-4",
        "--weight",
        "0,0",
        "--max-len",
        "6",
        "--format",
        "dot",
    ];
    let a = wlinkage(&args_dot);
    let b = wlinkage(&args_dot);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn env_var_sets_default_truncation_and_flag_overrides_it() {
    let run_with_env = |extra: &[&str]| {
        let mut args = vec![
            "block", "--type", "A", "--rank", "1", "--level", "-3", "--weight", "0",
        ];
        args.extend_from_slice(extra);
        Command::new(env!("CARGO_BIN_EXE_wlinkage"))
            .args(&args)
            .env("LINKAGE_MAX_LEN", "2")
            .output()
            .unwrap()
    };

    let v = stdout_json(&run_with_env(&[]));
    assert_eq!(v["truncation_length"], 2);
    assert_eq!(v["cosets"].as_array().unwrap().len(), 2);

    let v = stdout_json(&run_with_env(&["--max-len", "5"]));
    assert_eq!(v["truncation_length"], 5);
    assert_eq!(v["cosets"].as_array().unwrap().len(), 3);
}

#[test]
fn virasoro_and_flip_values() {
    let v = stdout_json(&wlinkage(&["virasoro", "-k", "-3", "-v", "0"]));
    assert_eq!(v["c"], "25");
    assert_eq!(v["delta"], "3/4");
    assert_eq!(v["dual_c"], "1");
    assert_eq!(v["dual_delta"], "1/4");

    let v = stdout_json(&wlinkage(&[
        "flip", "--type", "A", "--rank", "1", "--level", "-3", "--weight", "0",
    ]));
    assert_eq!(v["dual_level"], "-1");
    assert_eq!(v["shift"], 1);

    let v = stdout_json(&wlinkage(&[
        "homs",
        "--type",
        "A",
        "--rank",
        "1",
        "--level",
        "generic-neg",
        "--weight",
        "0",
    ]));
    assert_eq!(v["hom_matrix"], serde_json::json!([[1]]));
}
