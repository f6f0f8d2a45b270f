use std::path::Path;
use std::process::{Command, Output};

use climb_core::landscapes::{make_counting_symbol_instance, SymbolState};
use climb_core::VcspInstance;

fn climb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_climb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn summary_value(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}=")))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
        .to_string()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_boolean_counting_instance() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("cb.json");
    let o = climb(&["gen", "counting-boolean", "--n", "3", "-o", path_str(&file)]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert_eq!(summary_value(&s, "variables"), "12");
    assert_eq!(summary_value(&s, "max_arity"), "8");
    let inst = VcspInstance::from_document(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(inst.num_variables(), 12);
}

#[test]
fn gen_pairs_prints_counts() {
    let o = climb(&["gen", "pairs", "--n", "2", "--alpha", "2"]);
    assert!(o.status.success());
    let inst = VcspInstance::from_document(&stdout(&o)).unwrap();
    assert_eq!(inst.num_variables(), 2);
    assert_eq!(inst.constraints().len(), 1);
    let summary = String::from_utf8(o.stderr).unwrap();
    assert_eq!(summary_value(&summary, "alpha"), "2");
}

#[test]
fn generated_document_evaluates_like_the_generator() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("cs.json");
    assert!(climb(&["gen", "counting-symbol", "--n", "5", "-o", path_str(&file)]).status.success());
    let loaded = VcspInstance::from_document(&std::fs::read_to_string(&file).unwrap()).unwrap();
    let direct = make_counting_symbol_instance(5).unwrap();
    let s: SymbolState = "0 1 C iC0 0".parse().unwrap();
    assert_eq!(loaded.evaluate(&s.to_values()).unwrap(), direct.evaluate(&s.to_values()).unwrap());
}

#[test]
fn golden_counting_trace() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("trace.csv");
    let o = climb(&[
        "run",
        "--generator",
        "counting-symbol",
        "--n",
        "7",
        "--start",
        "0 0 0 1 1 1 1",
        "--max-steps",
        "20",
        "--trace",
        path_str(&trace),
    ]);
    // the ascent continues past the listed end, so the budget runs out
    assert_eq!(o.status.code(), Some(4));
    let golden = include_str!("golden/counting_n7_from_0001111.csv");
    assert_eq!(std::fs::read_to_string(&trace).unwrap(), golden);
    assert_eq!(summary_value(&stdout(&o), "final_state"), "0 0 1 0 0 0 0");
}

#[test]
fn winding_run_summary() {
    let o = climb(&["run", "--generator", "winding", "--n", "10", "--max-steps", "100000"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert_eq!(summary_value(&s, "steps"), "2046");
    assert_eq!(summary_value(&s, "terminal"), "local-optimum");
}

#[test]
fn start_at_local_optimum_takes_no_steps() {
    let o = climb(&["run", "--generator", "pairs", "--n", "4", "--start", "1111", "--max-steps", "10"]);
    assert!(o.status.success());
    assert_eq!(summary_value(&stdout(&o), "steps"), "0");
}

#[test]
fn tie_and_budget_exit_codes() {
    // from 1 0 1 0 both pairs gain alpha by completing to 1 1
    let tie = climb(&["run", "--generator", "pairs", "--n", "4", "--start", "1010", "--max-steps", "10"]);
    assert_eq!(tie.status.code(), Some(3));
    let budget = climb(&["run", "--generator", "winding", "--n", "3", "--max-steps", "5"]);
    assert_eq!(budget.status.code(), Some(4));
    let lowest = climb(&[
        "run",
        "--generator",
        "pairs",
        "--n",
        "4",
        "--start",
        "1010",
        "--max-steps",
        "10",
        "--policy",
        "steepest-lowest",
    ]);
    assert!(lowest.status.success());
}

#[test]
fn invalid_input_exit_code() {
    assert_eq!(climb(&["gen", "pairs", "--n", "3"]).status.code(), Some(2));
    let bad_state = climb(&["run", "--generator", "counting-symbol", "--n", "3", "--start", "0 Q 1", "--max-steps", "5"]);
    assert_eq!(bad_state.status.code(), Some(2));
    let no_seed = climb(&["run", "--generator", "winding", "--n", "2", "--max-steps", "5", "--policy", "first-improvement"]);
    assert_eq!(no_seed.status.code(), Some(2));
}

#[test]
fn seeded_runs_are_byte_identical() {
    let args = [
        "run",
        "--generator",
        "winding",
        "--n",
        "5",
        "--max-steps",
        "1000",
        "--policy",
        "first-improvement",
        "--seed",
        "7",
        "--trace",
        "-",
    ];
    let a = climb(&args);
    let b = climb(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_arithmetic_and_pathwidth_pass() {
    let a = climb(&["verify", "arithmetic"]);
    assert_eq!(a.status.code(), Some(0));
    assert!(stdout(&a).contains("PASS rule chain rules 3a/3b [a=0]: 22 < 23 < 24"));
    let p = climb(&["verify", "pathwidth", "--n", "5"]);
    assert_eq!(p.status.code(), Some(0));
    assert!(stdout(&p).contains("width 7"));
}

#[test]
fn verify_lockstep_reports_the_divergence() {
    let o = climb(&["verify", "lockstep", "--n", "8", "--budget", "4096", "--format", "json"]);
    assert_eq!(o.status.code(), Some(5));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], false);
    let first = &v["checks"][0];
    assert_eq!(first["passed"], false);
    assert!(first["detail"].as_str().unwrap().contains("after iX1 0 0 0 0 0 0 0"));
    // no tie fires
    assert_eq!(v["checks"][1]["passed"], true);
}

#[test]
fn analyze_scaling_rows() {
    let o = climb(&["analyze", "scaling", "--max-n", "14"]);
    assert!(o.status.success());
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    assert_eq!(rdr.headers().unwrap(), vec!["n", "steps", "predicted"]);
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 14);
    for (i, r) in rows.iter().enumerate() {
        let n = i + 1;
        assert_eq!(r[1].parse::<u64>().unwrap(), (1 << (n + 1)) - 2);
        assert_eq!(&r[1], &r[2]);
    }
}

#[test]
fn analyze_census_and_gradient() {
    let c = climb(&["analyze", "census", "--generator", "pairs", "--n", "4", "--alpha", "2"]);
    assert!(c.status.success());
    assert_eq!(summary_value(&stdout(&c), "local_maxima"), "4");

    let g = climb(&["analyze", "gradient", "--n", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&g)).unwrap();
    assert_eq!(v["matches_prediction"], "true");
    let grads: Vec<&str> = v["rows"].as_array().unwrap().iter().map(|r| r["gradient"].as_str().unwrap()).collect();
    assert_eq!(grads, vec!["2", "1", "1", "1", "1", "1"]);

    let capped = climb(&["analyze", "census", "--generator", "pairs", "--n", "10", "--max-states", "100"]);
    assert_eq!(capped.status.code(), Some(2));
}

#[test]
fn instance_file_round_trip_through_run() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("w.json");
    assert!(climb(&["gen", "winding", "--n", "4", "--schedule", "root2path", "-o", path_str(&file)]).status.success());
    let o = climb(&["run", "--instance", path_str(&file), "--max-steps", "100"]);
    assert!(o.status.success());
    assert_eq!(summary_value(&stdout(&o), "steps"), "30");
}
