mod common;

use std::path::Path;
use std::process::Command;

use common::{corpus, run, workspace_root};

#[test]
fn corpus_exit_codes() {
    let cases = corpus();
    assert!(cases.len() >= 20);
    let mut bad = Vec::new();
    for (file, args, code) in &cases {
        let (got, _, stderr) = run(args, file, &[]);
        if got != *code {
            bad.push(format!(
                "{} {:?}: expected {code}, got {got}\n{stderr}",
                file.display(),
                args
            ));
        }
    }
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}

#[test]
fn corpus_output_is_byte_deterministic() {
    for (file, args, _) in corpus() {
        let (_, a, _) = run(&args, &file, &[]);
        let (_, b, _) = run(&args, &file, &[]);
        let (_, c, _) = run(&args, &file, &["--jobs", "1"]);
        let (_, d, _) = run(&args, &file, &["--jobs", "4"]);
        assert_eq!(a, b, "{} {:?}", file.display(), args);
        assert_eq!(c, d, "{} {:?} jobs 1 vs 4", file.display(), args);
        assert_eq!(a, c, "{} {:?} default vs jobs 1", file.display(), args);
    }
}

#[test]
fn json_documents_validate_against_schema() {
    let schema: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(workspace_root().join("schema/certificate.v1.json")).unwrap())
            .unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let mut checked = 0;
    for (file, args, code) in corpus() {
        if code == 2 || args.iter().any(|a| a == "newton" || a == "faces") {
            continue;
        }
        let (_, stdout, _) = run(&args, &file, &[]);
        let doc: serde_json::Value = serde_json::from_slice(&stdout).unwrap();
        let errors: Vec<String> = validator.iter_errors(&doc).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{} {:?}: {errors:?}", file.display(), args);
        checked += 1;
    }
    assert!(checked >= 10);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("ndcert-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cert.json");
    let file = workspace_root().join("problems/brieskorn_pair.toml");
    let (code, stdout, _) = run(&["certify-pair".into()], &file, &["--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["certificate"]["conclusion"], "fibrations-isomorphic-pair");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn unknown_subcommand_is_input_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_ndcert"))
        .arg("frobnicate")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_file_is_input_error() {
    let (code, _, stderr) = run(&["nondeg".into()], Path::new("/nonexistent/p.toml"), &[]);
    assert_eq!(code, 2);
    assert!(stderr.contains("/nonexistent/p.toml"));
}

#[test]
fn run_cli_in_process() {
    let file = workspace_root().join("problems/square_line.toml");
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = ndcert::run_cli(["ndcert", "nondeg", file.to_str().unwrap()], &mut out, &mut err);
    assert_eq!(code, 1);
    let doc: serde_json::Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(
        doc["certificate"]["checks"][0]["witness_point"],
        serde_json::json!([1, -1])
    );
    assert!(String::from_utf8(err).unwrap().contains("degenerate"));
}

#[test]
fn schema_rejects_malformed_documents() {
    let schema: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(workspace_root().join("schema/certificate.v1.json")).unwrap())
            .unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let file = workspace_root().join("problems/square_line.toml");
    let (_, stdout, _) = run(&["nondeg".into()], &file, &[]);
    let doc: serde_json::Value = serde_json::from_slice(&stdout).unwrap();
    assert!(validator.is_valid(&doc));

    let mut no_subset = doc.clone();
    no_subset["certificate"]["checks"][0]
        .as_object_mut()
        .unwrap()
        .remove("failing_subset");
    assert!(!validator.is_valid(&no_subset));

    let mut bad_status = doc.clone();
    bad_status["certificate"]["status"] = "maybe".into();
    assert!(!validator.is_valid(&bad_status));

    let mut extra = doc;
    extra["certificate"]["radius"] = 0.5.into();
    assert!(!validator.is_valid(&extra));
}
