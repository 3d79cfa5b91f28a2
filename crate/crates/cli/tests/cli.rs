//! End-to-end tests of the binary: exact output strings for the known
//! reductions, JSON schemas, exit codes, and determinism.

use std::process::{Command, Output};

fn nilops(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilops"))
        .args(args)
        .env_remove("NILOPS_FORMAT")
        .output()
        .expect("run nilops")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 output")
}

#[test]
fn reduce_known_words() {
    let out = nilops(&["reduce", "UUL", "--variety", "nil4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "-LU^2 + 2UL^3 - 2L^3U - 8L^5");

    let out = nilops(&["reduce", "L^10", "--variety", "nil4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0");

    let out = nilops(&["reduce", "L", "--variety", "nil4"]);
    assert_eq!(stdout(&out).trim(), "L");

    // Beyond the cap the vanishing closure applies.
    let out = nilops(&["reduce", "L^13", "--variety", "nil4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0");
}

#[test]
fn reduce_reports_parse_errors() {
    let out = nilops(&["reduce", "UQ", "--variety", "nil4"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("error"), "stderr: {stderr}");
}

#[test]
fn linearize_examples() {
    let out = nilops(&["linearize", "x^2(x(y))", "--arg", "y"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "2(x(y))(x(y)) + (x^2)(y^2)");

    let out = nilops(&["linearize", "x^2", "--arg", "x^2", "--arg", "y"]);
    assert_eq!(stdout(&out).trim(), "2y(x^2)");

    let out = nilops(&[
        "linearize",
        "x^2",
        "--arg",
        "y",
        "--arg",
        "x(y^2)",
        "--arg",
        "x",
    ]);
    assert_eq!(stdout(&out).trim(), "0");

    let out = nilops(&["linearize", "x^2 x^2", "--arg", "y"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn derive_degree_five_table_json() {
    let out = nilops(&[
        "derive",
        "--variety",
        "nil4",
        "--max-degree",
        "5",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let tables: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let tables = tables.as_array().unwrap();
    assert_eq!(tables.len(), 5);
    for table in &tables[..4] {
        assert_eq!(table["rules"].as_array().unwrap().len(), 0);
    }
    let deg5 = &tables[4];
    assert_eq!(deg5["variety"], "nil4");
    assert_eq!(deg5["degree"], 5);
    assert_eq!(deg5["rules"].as_array().unwrap().len(), 1);
    assert_eq!(deg5["rules"][0]["pivot"], "U^2L");
    let tail: Vec<(String, String)> = deg5["rules"][0]["tail"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            (
                t["word"].as_str().unwrap().to_string(),
                t["coeff"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    assert_eq!(
        tail,
        vec![
            ("LU^2".into(), "-1".into()),
            ("UL^3".into(), "2".into()),
            ("L^3U".into(), "-2".into()),
            ("L^5".into(), "-8".into()),
        ]
    );
}

#[test]
fn derive_subvariety_tables_match_known_rows() {
    let out = nilops(&[
        "derive",
        "--variety",
        "nil4-b5",
        "--max-degree",
        "6",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let tables: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let deg5 = &tables.as_array().unwrap()[4];
    let pivots: Vec<&str> = deg5["rules"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["pivot"].as_str().unwrap())
        .collect();
    assert_eq!(pivots, vec!["U^2L", "LU^2", "UL^3", "L^2UL"]);
    // U^2L rewrites to 2LUL^2.
    assert_eq!(deg5["rules"][0]["tail"][0]["word"], "LUL^2");
    assert_eq!(deg5["rules"][0]["tail"][0]["coeff"], "2");
}

#[test]
fn derive_elements_schema() {
    let out = nilops(&[
        "derive",
        "--variety",
        "nil4",
        "--max-degree",
        "6",
        "--elements",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let entries: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let found = entries.as_array().unwrap().iter().any(|e| {
        e["degree"] == 5
            && e["monomial"] == "(x^2)(x^3)"
            && e["normal_form"][0]["basis"] == "b5"
            && e["normal_form"][0]["coeff"] == "-1"
    });
    assert!(found, "missing the degree-5 rewrite entry");
}

#[test]
fn derive_rejects_degrees_above_the_cap() {
    let out = nilops(&["derive", "--variety", "nil4", "--max-degree", "13"]);
    assert_eq!(out.status.code(), Some(2));
    let out = nilops(&["derive", "--variety", "nil4-b5", "--max-degree", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dims_subvariety_profile() {
    let out = nilops(&[
        "dims",
        "--variety",
        "nil4-b5",
        "--max-degree",
        "7",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["variety"], "nil4-b5");
    assert_eq!(
        v["dims"].as_array().unwrap(),
        &vec![1, 2, 3, 4, 4, 3, 0]
            .into_iter()
            .map(serde_json::Value::from)
            .collect::<Vec<_>>()
    );
}

#[test]
fn verify_theorem_two_passes_and_is_deterministic() {
    let first = nilops(&["verify", "2", "--format", "json"]);
    assert_eq!(first.status.code(), Some(0));
    let second = nilops(&["verify", "2", "--format", "json"]);
    assert_eq!(first.stdout, second.stdout, "reports differ between runs");

    let report: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(report["variety"], "nil4-b5");
    assert!(report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["status"] == "pass"));
    assert_eq!(
        report["dims"].as_array().unwrap(),
        &vec![1, 2, 3, 4, 4, 3, 0, 0]
            .into_iter()
            .map(serde_json::Value::from)
            .collect::<Vec<_>>()
    );
}

#[test]
fn verify_all_emits_three_passing_reports() {
    let out = nilops(&["verify", "all", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 3);
    let varieties: Vec<&str> = reports
        .iter()
        .map(|r| r["variety"].as_str().unwrap())
        .collect();
    assert_eq!(varieties, vec!["nil4", "nil4-b5", "nil4-b6"]);
    for report in reports {
        assert!(report["checks"]
            .as_array()
            .unwrap()
            .iter()
            .all(|c| c["status"] == "pass"));
    }
}

#[test]
fn verify_text_report_lists_checks() {
    let out = nilops(&["verify", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("variety nil4-b5"));
    assert!(text.contains("PASS"));
    assert!(!text.contains("FAIL"));
    assert!(text.contains("dims by degree: 1 2 3 4 4 3 0 0"));
}

#[test]
fn format_env_variable_sets_the_default() {
    let out = Command::new(env!("CARGO_BIN_EXE_nilops"))
        .args(["reduce", "UUL"])
        .env("NILOPS_FORMAT", "json")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"], "-LU^2 + 2UL^3 - 2L^3U - 8L^5");
}

#[test]
fn out_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("nilops-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("reduction.json");
    let out = nilops(&[
        "reduce",
        "UUL",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let contents = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&contents).unwrap();
    assert_eq!(v["input"], "UUL");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn unknown_variety_is_a_usage_error() {
    let out = nilops(&["reduce", "UUL", "--variety", "nil5"]);
    assert_eq!(out.status.code(), Some(2));
}
