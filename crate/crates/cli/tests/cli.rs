use std::process::Command;

use embedcheck::run_args;
use embedcheck_core::EmbeddingKind;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String) {
    let o = run_args(std::iter::once("embedcheck").chain(args.iter().copied()));
    (o.status, o.output)
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut v: Vec<&str> = args.to_vec();
    v.push("--json");
    let (status, out) = run(&v);
    (status, serde_json::from_str(&out).expect("valid json"))
}

fn validator() -> jsonschema::Validator {
    let text = include_str!("../schema/report.schema.json");
    jsonschema::validator_for(&serde_json::from_str(text).unwrap()).unwrap()
}

fn assert_valid(v: &Value) {
    let errors: Vec<String> = validator().iter_errors(v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}\n{v:#}");
}

#[test]
fn weakly_tau_check_on_sym4_has_order_12_witness() {
    let (status, v) =
        run_json(&["check", "--group", "Sym(4)", "--subgroup", "(1 4)", "--property", "weakly-tau-embedded"]);
    assert_eq!(status, 0);
    assert_eq!(v["result"]["value"], "true");
    assert_eq!(v["result"]["witness_order"], 12);
    assert_valid(&v);
}

#[test]
fn example_e1_3_agrees() {
    let (status, v) = run_json(&["examples", "--id", "E1_3"]);
    assert_eq!(status, 0);
    assert_eq!(v["result"][0]["agrees"], true);
    assert_valid(&v);
}

#[test]
fn theorem_verify_over_corpus_is_consistent() {
    let (status, v) = run_json(&["verify", "--theorem", "T3_1", "--p", "2", "--n", "1", "--max-order", "60"]);
    assert_eq!(status, 0);
    assert_eq!(v["summary"]["inconsistent"], 0);
    assert_valid(&v);
}

#[test]
fn every_command_emits_schema_valid_reports() {
    let cases: [&[&str]; 5] = [
        &["analyze", "--group", "Dihedral(12)"],
        &["vector", "--group", "Alt(4)", "--subgroup", "(1 2)(3 4)"],
        &["verify", "--lemma", "L2_3", "--max-order", "12"],
        &["verify", "--implications", "--max-order", "12"],
        &["scan", "--max-order", "8", "--fast"],
    ];
    for args in cases {
        let (status, v) = run_json(args);
        assert_eq!(status, 0, "{args:?}");
        assert_valid(&v);
    }
}

#[test]
fn errors_carry_codes_and_exit_2() {
    let cases: [(&[&str], &str); 5] = [
        (&["check", "--group", "Sym(4)", "--subgroup", "(1 2)", "--property", "weakly-embedded"], "unknown-property"),
        (&["vector", "--group", "Sym(4)", "--subgroup", "(1 5)"], "point-out-of-range"),
        (&["vector", "--group", "Sym(4)", "--subgroup", "(1 2"], "cycle-syntax"),
        (&["analyze", "--group", "Sym(8)", "--caps", "elem=1000"], "cap-exceeded"),
        (&["analyze", "--group", "Sym(4)", "--caps", "depth=3"], "usage"),
    ];
    for (args, code) in cases {
        let (status, v) = run_json(args);
        assert_eq!(status, 2, "{args:?}");
        assert_eq!(v["error"]["code"], code, "{args:?}");
        assert_valid(&v);
    }
    let (status, v) = run_json(&["verify", "--max-order", "10"]);
    assert_eq!((status, v["error"]["code"].as_str()), (2, Some("usage")));
    let (status, _) = run(&["frobnicate"]);
    assert_eq!(status, 2);
}

#[test]
fn property_table_in_docs_matches_the_parser() {
    let doc = include_str!("../../../docs/properties.md");
    let rows: Vec<(String, String)> = doc
        .lines()
        .filter(|l| l.starts_with("| `"))
        .map(|l| {
            let cells: Vec<&str> = l.split('|').map(|c| c.trim().trim_matches('`')).collect();
            (cells[1].to_string(), cells[2].to_string())
        })
        .collect();
    assert_eq!(rows.len(), EmbeddingKind::ALL.len());
    for (kind, (cli, tag)) in EmbeddingKind::ALL.into_iter().zip(&rows) {
        assert_eq!(&kind.cli_name(), cli);
        assert_eq!(kind.tag(), tag);
        assert_eq!(cli.parse::<EmbeddingKind>().unwrap(), kind);
    }
}

#[test]
fn group_file_drives_the_cli() {
    let path = std::env::temp_dir().join(format!("embedcheck-cli-{}.txt", std::process::id()));
    std::fs::write(&path, "degree 4\ngen (1 2 3 4)\ngen (1 2)\n").unwrap();
    let expr = format!("FromFile({})", path.display());
    let (status, v) = run_json(&["analyze", "--group", &expr]);
    assert_eq!(status, 0);
    assert_eq!(v["result"]["order"], 24);

    std::fs::write(&path, "degree 4\ngen (1 5)\n").unwrap();
    let (status, v) = run_json(&["analyze", "--group", &expr]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(status, 2);
    assert!(v["error"]["message"].as_str().unwrap().contains('5'));
}

#[test]
fn caps_can_come_from_the_environment() {
    let bin = env!("CARGO_BIN_EXE_embedcheck");
    let out = Command::new(bin)
        .args(["analyze", "--group", "Sym(6)", "--json"])
        .env("EMBEDCHECK_CAPS", "elem=100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(v["error"]["code"], "cap-exceeded");

    let out = Command::new(bin)
        .args(["analyze", "--group", "Sym(6)", "--json", "--caps", "elem=1000"])
        .env("EMBEDCHECK_CAPS", "elem=100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn out_flag_writes_the_report_and_jobs_do_not_change_it() {
    let bin = env!("CARGO_BIN_EXE_embedcheck");
    let path = std::env::temp_dir().join(format!("embedcheck-out-{}.json", std::process::id()));
    let status = Command::new(bin)
        .args(["scan", "--max-order", "12", "--json", "--jobs", "1", "--out"])
        .arg(&path)
        .status()
        .unwrap();
    assert!(status.success());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    let (_, parallel) = run(&["scan", "--max-order", "12", "--json", "--jobs", "4"]);
    assert_eq!(written, parallel);
}

#[test]
fn text_mode_ends_with_the_verdict() {
    let (status, out) = run(&["examples"]);
    assert_eq!(status, 0);
    assert!(out.ends_with("ok\n"));
    assert_eq!(out.matches("agrees").count(), 4);
}
