use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn lscat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lscat")).args(args).current_dir(crate_dir()).output().expect("binary runs")
}

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn schema_validator(name: &str) -> jsonschema::Validator {
    let text = std::fs::read_to_string(crate_dir().join("schema").join(name)).unwrap();
    let schema: Value = serde_json::from_str(&text).unwrap();
    jsonschema::draft202012::new(&schema).expect("schema compiles")
}

fn assert_valid(validator: &jsonschema::Validator, doc: &Value, what: &str) {
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    assert!(errors.is_empty(), "{what} violates the schema:\n{}", errors.join("\n"));
}

#[test]
fn report_json_for_spin9() {
    let o = lscat(&["report", "spin9", "--truncate", "7,8,9", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_valid(&schema_validator("report.schema.json"), &doc, "spin9 report");
    assert_eq!(doc["cuplen"]["value"], 6);
    assert_eq!(doc["wgt"]["value"], 6);
    assert_eq!(doc["mwgt_lower"]["value"], 8);
    assert_eq!(doc["bracket"]["lower"], 8);
    assert_eq!(doc["bracket"]["upper"], 8);
    let pm: Vec<(u64, u64, u64, u64)> = doc["pm_reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| {
            let n = |k: &str| p[k].as_u64().unwrap();
            (n("m"), n("a_m"), n("partial_products"), n("s_m_candidates"))
        })
        .collect();
    assert_eq!(pm, vec![(7, 32, 5, 8), (8, 32, 1, 10), (9, 32, 0, 8)]);
}

#[test]
fn every_builtin_report_matches_the_schema() {
    let validator = schema_validator("report.schema.json");
    for name in lscat::fixtures::BUILTINS {
        let o = lscat(&["report", name, "--truncate", "0,3", "--format", "json", "--timings"]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_valid(&validator, &doc, name);
        assert!(doc["timings"]["total_ms"].is_u64());
    }
}

#[test]
fn report_output_is_deterministic() {
    let args = ["report", "spin9", "--truncate", "7,8,9", "--format", "json"];
    assert_eq!(stdout(&lscat(&args)), stdout(&lscat(&args)));
    let text = ["report", "spin9", "--truncate", "7"];
    assert_eq!(stdout(&lscat(&text)), stdout(&lscat(&text)));
}

#[test]
fn text_report_mentions_the_bracket() {
    let o = lscat(&["report", "spin9"]);
    let out = stdout(&o);
    assert!(out.contains("cat in               [8, 8]"), "{out}");
    assert!(out.contains("d3(x1_10) = x1_2^4"), "{out}");
}

#[test]
fn fixture_files_match_the_schema() {
    let validator = schema_validator("fixture.schema.json");
    for entry in std::fs::read_dir(crate_dir().join("fixtures")).unwrap() {
        let path = entry.unwrap().path();
        let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_valid(&validator, &doc, &path.display().to_string());
    }
}

#[test]
fn validate_exit_codes() {
    assert_eq!(lscat(&["validate", "fixtures/spin9.json"]).status.code(), Some(0));
    assert_eq!(lscat(&["validate", "spin9"]).status.code(), Some(0));
    for bad in ["fixtures/bad-loop-height.json", "fixtures/bad-sq-degree.json"] {
        let o = lscat(&["validate", bad]);
        assert_eq!(o.status.code(), Some(3), "{bad}");
        assert!(stdout(&o).contains("fail:"), "{bad}");
    }
    let o = lscat(&["validate", "fixtures/bad-sq-degree.json"]);
    assert!(stdout(&o).contains("value has degree 7, expected 5"));
}

#[test]
fn malformed_json_exits_with_three() {
    let dir = std::env::temp_dir().join(format!("lscat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.json");
    std::fs::write(&path, "{ \"name\": \"broken\", ").unwrap();
    assert_eq!(lscat(&["validate", path.to_str().unwrap()]).status.code(), Some(3));
    std::fs::write(&path, "{ \"name\": \"x\", \"surprise\": 1 }").unwrap();
    assert_eq!(lscat(&["report", path.to_str().unwrap()]).status.code(), Some(3));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn inconsistent_bounds_exit_with_two() {
    let o = lscat(&["report", "fixtures/inconsistent.json"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("cat <= 7"), "{err}");
}

#[test]
fn unknown_space_exits_nonzero() {
    let o = lscat(&["report", "no-such-space"]);
    assert_ne!(o.status.code(), Some(0));
}

#[test]
fn dump_page() {
    let o = lscat(&["dump-page", "spin9", "-r", "4", "--truncate", "9"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let page: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(page["r"], 4);
    assert_eq!(page["column_cap"], 9);
    let cells = page["cells"].as_array().unwrap();
    assert!(cells.iter().all(|c| c["s"].as_u64().unwrap() <= 9));
    let e2 = lscat(&["dump-page", "spin9", "-r", "2"]);
    let e2: Value = serde_json::from_str(&stdout(&e2)).unwrap();
    assert!(e2["differentials"].as_array().unwrap().is_empty());
    // r = 1 is not a page of this spectral sequence.
    assert_ne!(lscat(&["dump-page", "spin9", "-r", "1"]).status.code(), Some(0));
}
