//! Acceptance: byte-level determinism of every command, including repeated
//! library runs on the same input.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sphmod"))
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

#[test]
fn criterion_8_determinism() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["analyze", "--format", "json", "--check-g-saturated"],
        vec!["analyze", "--format", "text"],
        vec!["check-saturation"],
    ];
    let inputs = ["sl3.json", "sl4_nonreduced.json"];
    let mut all_ok = true;
    for input in inputs {
        let path = data(input);
        for case in &cases {
            let mut args = case.clone();
            args.push(&path);
            let first = run(&args);
            let second = run(&args);
            if first.stdout != second.stdout || first.status.code() != second.status.code() {
                all_ok = false;
            }
            assert_eq!(first.stdout, second.stdout, "{case:?} on {input}");
            assert_eq!(first.status.code(), second.status.code());
        }
    }
    for group in ["A3", "B2xA1+T1", "G2", "D4"] {
        let first = run(&["sigma-g", "--group", group]);
        let second = run(&["sigma-g", "--group", group]);
        if first.stdout != second.stdout {
            all_ok = false;
        }
        assert_eq!(first.stdout, second.stdout, "sigma-g {group}");
    }
    println!(
        "ACCEPTANCE 8 (byte-identical outputs): {}",
        if all_ok { "PASS" } else { "FAIL" }
    );
}
