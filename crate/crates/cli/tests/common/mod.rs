#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_twinllt"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

pub struct Case {
    pub name: String,
    pub exit: i32,
    pub stderr_contains: Option<String>,
    pub args: Vec<String>,
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn cases() -> Vec<Case> {
    let text = std::fs::read_to_string(golden_dir().join("cases.tsv")).expect("manifest");
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let cols: Vec<&str> = l.split('\t').collect();
            assert_eq!(cols.len(), 4, "bad manifest line {l:?}");
            Case {
                name: cols[0].to_string(),
                exit: cols[1].parse().expect("exit code"),
                stderr_contains: (cols[2] != "-").then(|| cols[2].to_string()),
                args: cols[3].split_whitespace().map(String::from).collect(),
            }
        })
        .collect()
}

/// Runs one golden case twice; returns a failure description or `None`.
pub fn check_case(case: &Case) -> Option<String> {
    let args: Vec<&str> = case.args.iter().map(String::as_str).collect();
    let first = run(&args);
    let second = run(&args);
    let path = golden_dir().join(format!("{}.out", case.name));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &first.stdout).expect("write golden");
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_default();
    if first.code != case.exit {
        return Some(format!("{}: exit {} (expected {})", case.name, first.code, case.exit));
    }
    if first.stdout != expected {
        return Some(format!("{}: stdout differs from {}", case.name, path.display()));
    }
    if first.stdout != second.stdout || second.code != first.code {
        return Some(format!("{}: two runs differ", case.name));
    }
    if let Some(s) = &case.stderr_contains {
        if !first.stderr.contains(s.as_str()) {
            return Some(format!("{}: stderr lacks {s:?}: {}", case.name, first.stderr));
        }
    }
    None
}
