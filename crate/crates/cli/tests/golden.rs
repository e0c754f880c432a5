//! Runs the binary on every case in `golden/cases.txt` and compares exit
//! code, stdout and stderr with `golden/<name>.out`. Set
//! `BRAIDQUOT_BLESS=1` to rewrite the expected files.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Splits a case line into arguments; double quotes group words and `""`
/// is an empty argument.
fn split_args(line: &str) -> Vec<String> {
    let mut args = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    let mut started = false;
    for ch in line.chars() {
        match ch {
            '"' => {
                quoted = !quoted;
                started = true;
            }
            ' ' if !quoted => {
                if started {
                    args.push(std::mem::take(&mut cur));
                    started = false;
                }
            }
            c => {
                cur.push(c);
                started = true;
            }
        }
    }
    if started {
        args.push(cur);
    }
    args
}

fn render(args: &[String]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_braidquot"))
        .args(args)
        .output()
        .expect("binary runs");
    format!(
        "exit: {}\n--- stdout\n{}--- stderr\n{}",
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    )
}

#[test]
fn golden_files() {
    let dir = golden_dir();
    let cases = fs::read_to_string(dir.join("cases.txt")).expect("cases file");
    let bless = std::env::var_os("BRAIDQUOT_BLESS").is_some();
    let mut failures = Vec::new();
    for line in cases
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
    {
        let (name, rest) = line.split_once(':').expect("case lines are `name: args`");
        let args = split_args(rest.trim());
        let actual = render(&args);
        let path = dir.join(format!("{}.out", name.trim()));
        if bless {
            fs::write(&path, &actual).unwrap();
            continue;
        }
        match fs::read_to_string(&path) {
            Ok(expected) if expected == actual => {}
            Ok(expected) => failures.push(format!(
                "{name}: output differs\n--- expected\n{expected}\n--- actual\n{actual}"
            )),
            Err(_) => failures.push(format!("{name}: missing {}", path.display())),
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n\n"));
}

#[test]
fn json_output_is_stable_across_runs() {
    let args = split_args(r#"conj --n 4 --json "s1 s2 s3 A1,2" "s3 s2 s1 A2,4^3""#);
    assert_eq!(render(&args), render(&args));
}

#[test]
fn every_subcommand_has_a_golden_case() {
    let cases = fs::read_to_string(golden_dir().join("cases.txt")).unwrap();
    for sub in [
        "eval",
        "mul",
        "inv",
        "pow",
        "perm",
        "coords",
        "nf",
        "conj",
        "order",
        "canon",
        "vc-zp",
        "vc-z3z3",
        "verify-tables",
    ] {
        assert!(
            cases.lines().any(|l| l
                .split_once(':')
                .is_some_and(|(_, a)| a.trim().starts_with(sub))),
            "no golden case for {sub}"
        );
    }
}
