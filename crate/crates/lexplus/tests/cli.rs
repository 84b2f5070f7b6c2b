use std::io::Write;
use std::process::Command;

use lexplus::run;
use lexplus_core::{parse_ideal, MonomialIdeal};
use serde_json::Value;

fn cli(args: &[&str]) -> lexplus::Outcome {
    run(std::iter::once("lexplus").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let out = cli(&full);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["version"], 1);
    v
}

#[test]
fn growth_example() {
    let out = cli(&["bound", "5", "5", "--degs", "3,3,4", "--n", "3"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "2\n"));
    assert_eq!(json(&["bound", "5", "5", "--degs", "3,3,4"])["growth"], 2);
    assert_eq!(cli(&["bound", "5", "5", "--n", "3"]).stdout, "5\n");
}

#[test]
fn cb_bound_example() {
    let out = cli(&["cb-bound", "3", "--degs", "3,3,3"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "21\n"));
    let v = json(&["cb-bound", "3", "--degs", "3,3,3"]);
    assert_eq!((v["b"].as_u64(), v["delta"].as_u64()), (Some(1), Some(2)));
}

#[test]
fn fvector_examples() {
    let out = cli(&["fvector", "check", "4", "5", "3"]);
    assert_eq!((out.code, out.stdout.as_str()), (1, "invalid at d=2\n"));
    assert_eq!(cli(&["fvector", "check", "4", "5", "2"]).code, 0);
    let built = cli(&["fvector", "build", "4", "5", "2"]);
    assert_eq!(built.stdout, "1 3 4\n2 3 4\n");
    assert_eq!(
        json(&["fvector", "build", "4", "5", "2"])["stanley_reisner"],
        "x1*x2"
    );

    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "{{1,3,4}}\n2 3 4\n").unwrap();
    let path = file.path().to_str().unwrap();
    assert_eq!(cli(&["fvector", "of", path]).stdout, "(4,5,2)\n");
    assert_eq!(
        json(&["fvector", "of", path])["fvector"],
        serde_json::json!([4, 5, 2])
    );
}

#[test]
fn ideal_commands() {
    assert_eq!(cli(&["hf", "x1^2, x1*x2, x2^3"]).stdout, "1, 2, 1, 0\n");
    assert_eq!(cli(&["hf", "x1", "--dmax", "3"]).stdout, "1, 0, 0, 0\n");
    assert_eq!(
        cli(&["link", "x1^2,x1*x2,x2^3", "--degs", "3,3"]).stdout,
        "x1^2, x1*x2^2, x2^3\n"
    );
    let table = json(&["link", "x1^2,x1*x2,x2^3", "--degs", "3,3", "--table"]);
    assert_eq!(table["table"].as_array().unwrap().len(), 5);
    let francisco = json(&["francisco", "3", "--degs", "3,3,3"]);
    assert_eq!(francisco["link"], "x1, x2^2, x3^3");
    assert_eq!(francisco["multiplicity"], 21);
    assert_eq!(
        cli(&["cl", "x1^2, x2*x3, x2^2, x3^2", "--degs", "2,2,2"]).stdout,
        "x1^2, x1*x2, x2^2, x3^2\n"
    );
    assert_eq!(
        cli(&["lpp", "x1^2, x2*x3, x2^2, x3^2", "--degs", "2,2,2"]).stdout,
        "x1^2, x1*x2, x2^2, x3^2\n"
    );
    assert_eq!(
        cli(&["stabilize", "x1^2, x2^2, x3^2", "--degs", "2,2,2"]).stdout,
        "x1^2, x2^2, x3^2\n"
    );
    let segment = cli(&[
        "sigma",
        "x1^2,x2^2,x3^2,x4^2,x1*x2,x1*x3,x2*x3",
        "--degs",
        "2,2,2,2",
    ]);
    assert_eq!(
        segment.stdout,
        "x1^2, x1*x2, x1*x3, x1*x4, x2^2, x3^2, x4^2\n"
    );
}

#[test]
fn emitted_ideals_reparse() {
    for args in [
        vec!["link", "x1^2,x1*x2,x2^3", "--degs", "3,3"],
        vec!["cl", "x1^2, x2*x3, x2^2, x3^2", "--degs", "2,2,2"],
        vec!["stabilize", "x1^2, x2*x3, x2^2, x3^2", "--degs", "2,2,2"],
    ] {
        let v = json(&args);
        let text = v["ideal"].as_str().unwrap();
        let gens: Vec<&str> = v["generators"]
            .as_array()
            .unwrap()
            .iter()
            .map(|g| g.as_str().unwrap())
            .collect();
        let from_text = parse_ideal(text, None).unwrap();
        let from_list: MonomialIdeal =
            parse_ideal(&gens.join("\n"), Some(from_text.nvars())).unwrap();
        assert_eq!(from_text, from_list);
        assert_eq!(from_text.to_string(), text);
    }
}

#[test]
fn file_input() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "x1^2\nx1*x2\nx2^3").unwrap();
    let out = cli(&["hf", "--file", file.path().to_str().unwrap()]);
    assert_eq!(out.stdout, "1, 2, 1, 0\n");
    assert_eq!(
        cli(&["hf", "x1", "--file", file.path().to_str().unwrap()]).code,
        2
    );
}

#[test]
fn exit_codes() {
    let parse = cli(&["hf", "x1*y2"]);
    assert_eq!(parse.code, 2);
    assert!(parse.stderr.contains("byte 3"), "{}", parse.stderr);
    assert!(parse.stdout.is_empty());
    let degs = cli(&["bound", "5", "5", "--degs", "3,0,4"]);
    assert_eq!(degs.code, 2);
    assert!(degs.stderr.contains("index 1"), "{}", degs.stderr);
    let domain = cli(&["cb-bound", "1", "--degs", "3,3,3"]);
    assert_eq!(domain.code, 1);
    assert!(domain.stdout.is_empty());
    assert_eq!(cli(&["link", "x1", "--degs", "3,3"]).code, 1);
    assert_eq!(cli(&["no-such-command"]).code, 2);
    let help = cli(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("egh-scan"));
}

#[test]
fn scans() {
    let v = json(&["egh-scan", "--degs", "2,2", "--maxgen", "3"]);
    assert_eq!(v["violations"], serde_json::json!([]));
    assert!(v["instances"].as_u64().unwrap() > 0);
    let three = json(&["egh-scan", "--degs", "2,2,2", "--maxgen", "2"]);
    assert_eq!(three["instances"], 19);
    let reduced = json(&["egh-scan", "--degs", "2,2,2", "--maxgen", "2", "--symmetry"]);
    assert!(reduced["instances"].as_u64() < three["instances"].as_u64());
    let refused = cli(&[
        "egh-scan", "--degs", "2,2", "--maxgen", "3", "--budget", "4",
    ]);
    assert_eq!(refused.code, 1);
    assert!(refused.stderr.contains("budget"), "{}", refused.stderr);
    let a = cli(&["egh-scan", "--degs", "2,3", "--maxgen", "3"]);
    let b = cli(&["egh-scan", "--degs", "2,3", "--maxgen", "3"]);
    assert_eq!(a, b);
}

#[test]
fn mu_check_reports_both_counts() {
    let v = json(&[
        "mu-check",
        "x1^2,x2^2,x3^2,x1*x2,x1*x3,x2*x3",
        "--degs",
        "2,2",
        "--n",
        "3",
    ]);
    assert_eq!(
        (v["mu"].as_u64(), v["mu_outside_powers"].as_u64()),
        (Some(6), Some(4))
    );
    assert_eq!(
        (v["holds"].as_bool(), v["holds_outside_powers"].as_bool()),
        (Some(false), Some(true))
    );
}

#[test]
fn budget_environment_variable() {
    let bin = env!("CARGO_BIN_EXE_lexplus");
    let refused = Command::new(bin)
        .args(["egh-scan", "--degs", "2,2", "--maxgen", "3"])
        .env("LEXPLUS_BUDGET", "4")
        .output()
        .unwrap();
    assert_eq!(refused.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&refused.stderr).contains("budget is 4"));
    let allowed = Command::new(bin)
        .args([
            "egh-scan", "--degs", "2,2", "--maxgen", "3", "--budget", "1000",
        ])
        .env("LEXPLUS_BUDGET", "4")
        .output()
        .unwrap();
    assert_eq!(allowed.status.code(), Some(0));
    let bad = Command::new(bin)
        .args(["egh-scan", "--degs", "2,2"])
        .env("LEXPLUS_BUDGET", "lots")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
