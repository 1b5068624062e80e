use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fuzzy-lia")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn infer(system: &str, engine: &str, mode: &str, extra: &[&str]) -> Output {
    let sys = fixture(system);
    let mut args = vec!["infer", "--system", &sys, "--input", "x12,x23", "--engine", engine, "--mode", mode];
    args.extend_from_slice(extra);
    run(&args)
}

#[test]
fn infer_prints_six_decimals() {
    let cases = [
        ("bks_reference.json", "bks", "0.300000 0.300000 0.300000"),
        ("sbr_reference.json", "sbr", "0.200000 0.100000 0.200000"),
        ("tip_reference.json", "tip", "0.700000 0.600000 0.800000"),
    ];
    for (file, engine, expected) in cases {
        for mode in ["classical", "hierarchical"] {
            let o = infer(file, engine, mode, &[]);
            assert_eq!(o.status.code(), Some(0), "{engine} {mode}");
            assert_eq!(stdout(&o).trim(), expected, "{engine} {mode}");
        }
    }
}

#[test]
fn infer_accepts_file_and_json_inputs() {
    let sys = fixture("bks_reference.json");
    let at = format!("@{}", fixture("reference_input.json"));
    for input in [at.as_str(), r#"{"singleton": ["x12", "x23"]}"#, "x1=x12,x2=x23"] {
        let o = run(&["infer", "--system", &sys, "--input", input, "--engine", "bks"]);
        assert_eq!(o.status.code(), Some(0), "{input}");
        assert_eq!(stdout(&o).trim(), "0.300000 0.300000 0.300000");
    }
}

#[test]
fn count_table_ends_with_total() {
    let o = infer("bks_reference.json", "bks", "classical", &["--count"]);
    let text = stdout(&o);
    let last = text.lines().last().unwrap();
    assert!(last.starts_with("total") && last.ends_with("82"), "{text}");
}

#[test]
fn json_report_carries_counts() {
    let o = infer("bks_reference.json", "bks", "hierarchical", &["--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["counts"]["total"], 22);
    assert_eq!(v["engine"], "bks");
}

#[test]
fn exit_codes() {
    assert_eq!(infer("tip_reference.json", "tip", "classical", &[]).status.code(), Some(0));
    let unknown = run(&["infer", "--system", &fixture("bks_reference.json"), "--input", "x19,x23", "--engine", "bks"]);
    assert_eq!(unknown.status.code(), Some(2));
    let missing = run(&["infer", "--system", "/nonexistent.json", "--input", "a", "--engine", "bks"]);
    assert_eq!(missing.status.code(), Some(2));
    assert_eq!(run(&["no-such-verb"]).status.code(), Some(2));
    let refused = run(&[
        "infer", "--system", &fixture("bks_reference.json"), "--input", "x12,x23", "--engine", "tip", "--mode", "hierarchical",
    ]);
    assert_eq!(refused.status.code(), Some(3));
    assert!(!refused.stderr.is_empty());
    let failing = run(&["check-lia", "--implication", "goedel", "--aggregation", "product"]);
    assert_eq!(failing.status.code(), Some(1));
    assert!(stdout(&failing).starts_with("FAILS at ("));
}

#[test]
fn check_lia_holds_for_a_certified_pair() {
    let o = run(&["check-lia", "--implication", "lukasiewicz", "--aggregation", "lukasiewicz"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "HOLDS on a 41x41x41 grid, tol 1e-9");
}

#[test]
fn check_lia_reports_the_boundary_obstruction() {
    let o = run(&[
        "check-lia",
        "--implication",
        r#"{"family": "residual-operation", "params": {"aggregation": {"kind": "cutoff-mean", "params": {"cutoff": 0.5}}}}"#,
        "--aggregation",
        "min",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stdout(&o).contains("boundary obstruction at (1.000000, 1.000000, 0.800000): 0.600000 vs 0.500000"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn companion_json_names_the_partner() {
    let o = run(&["companion", "an-implication", "--disjunctor", "max", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["aggregation"]["kind"], "min");
    assert_eq!(v["uniqueness"], "unique");
}

#[test]
fn classify_reports_structure() {
    let o = run(&["classify", "--aggregation", "product"]);
    let text = stdout(&o);
    assert!(text.contains("conjunctor      true"));
    assert!(text.contains("associative     true"));
}

#[test]
fn bench_csv_has_a_header() {
    let o = run(&["bench", "--shape", "5x4->3", "--engine", "bks", "--csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("engine,mode,shape,total,peak_storage,peak_dims"), "{text}");
    assert!(text.contains("bks,classical,5x4->3,82"));
}

#[test]
fn verify_examples_reports_each_check() {
    let o = run(&["verify-examples"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 8);
    let passed = text.lines().filter(|l| l.starts_with("PASS")).count();
    assert_eq!(o.status.code(), Some(if passed == 8 { 0 } else { 1 }));
}
