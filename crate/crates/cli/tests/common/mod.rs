#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub fn workspace_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

/// `(file, args, expected exit code)` from `# expect: <args...> <code>`.
pub fn corpus() -> Vec<(PathBuf, Vec<String>, i32)> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(workspace_root().join("problems"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "toml"))
        .collect();
    files.sort();
    let mut out = Vec::new();
    for f in files {
        let text = std::fs::read_to_string(&f).unwrap();
        for line in text.lines() {
            if let Some(rest) = line.strip_prefix("# expect:") {
                let mut words: Vec<String> = rest.split_whitespace().map(String::from).collect();
                let code = words.pop().unwrap().parse().unwrap();
                out.push((f.clone(), words, code));
            }
        }
    }
    out
}

pub fn run(args: &[String], file: &Path, extra: &[&str]) -> (i32, Vec<u8>, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ndcert"))
        .args(extra)
        .args(args)
        .arg(file)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        out.stdout,
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}
