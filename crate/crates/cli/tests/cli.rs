use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::Value;

use excellence::graph::io::{parse, Format};
use excellence::recognize::{recognize, verify_certificate};
use excellence::Oracle;
use excellence_cli::certificate::{verdict_from_json, verdict_to_json};
use excellence_cli::exit;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("{e}: {}", self.stdout))
    }
}

fn cli(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("excellence").chain(args.iter().copied()).map(Into::into);
    let code = excellence_cli::run(argv, &mut out, &mut err);
    Run { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn file(name: &str, text: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn on_file(cmd: &str, name: &str, text: &str, extra: &[&str]) -> Run {
    let path = file(name, text);
    let mut args = vec![cmd, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    cli(&args)
}

fn generated(family: &[&str]) -> String {
    let mut args = vec!["generate"];
    args.extend_from_slice(family);
    let r = cli(&args);
    assert_eq!(r.code, exit::OK, "{}", r.stderr);
    r.stdout
}

fn schema() -> jsonschema::Validator {
    let text = include_str!("../schema/report.schema.json");
    jsonschema::validator_for(&serde_json::from_str(text).unwrap()).unwrap()
}

fn assert_schema_valid(report: &Value) {
    let v = schema();
    let errors: Vec<String> = v.iter_errors(report).map(|e| format!("{e} at {}", e.instance_path())).collect();
    assert!(errors.is_empty(), "{errors:#?}\n{report:#}");
}

const P6: &str = "6 5\na b\nb c\nc d\nd e\ne f\n";

#[test]
fn analyze_path_on_six_vertices() {
    let r = on_file("analyze", "p6.txt", P6, &[]);
    assert_eq!(r.code, exit::OK);
    let j = r.json();
    assert_eq!(j["alpha"], 3);
    assert_eq!(j["alpha_c"], 3);
    assert_eq!(j["i"], 2);
    assert_eq!(j["excellent"], true);
    assert_eq!(j["graph"]["labels"], serde_json::json!(["a", "b", "c", "d", "e", "f"]));
    assert_schema_valid(&j);
}

#[test]
fn analyze_single_vertex() {
    let j = on_file("analyze", "k1.txt", "1 0\n", &[]).json();
    assert_eq!((j["alpha"].clone(), j["alpha_c"].clone(), j["i"].clone()), (1.into(), 1.into(), 1.into()));
    assert_eq!(j["excellent"], true);
}

#[test]
fn analyze_reports_critical_leaves_by_label() {
    let j = on_file("analyze", "k12.txt", "3 2\nhub x\nhub y\n", &[]).json();
    assert_eq!(j["excellent"], false);
    assert_eq!(j["critical"], serde_json::json!(["x", "y"]));
    for pv in j["per_vertex"].as_array().unwrap() {
        if pv["vertex"] == "hub" {
            assert_eq!(pv["max"], 1);
        } else {
            assert_eq!(pv["max"], 2);
        }
    }
    assert_schema_valid(&j);
}

#[test]
fn dimacs_input() {
    let j = on_file("analyze", "c5.col", "c five-cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n", &["--format", "dimacs"]).json();
    assert_eq!(j["alpha"], 2);
    assert_eq!(j["well_covered"], true);
}

#[test]
fn recognize_methods() {
    let tree = on_file("recognize", "tree.txt", P6, &[]).json();
    assert_eq!(tree["verdict"]["method"], "tree/perfect-matching");
    assert_eq!(tree["certificate_valid"], true);
    assert_schema_valid(&tree);

    let uni = "7 7\na b\nb c\nc a\nc d\nd e\ne f\nf g\n";
    let uni = on_file("recognize", "uni.txt", uni, &[]).json();
    assert_eq!(uni["verdict"]["method"], "unicyclic/pluck");
    assert_eq!(uni["verdict"]["certificate"]["kept"], serde_json::json!(["a", "b", "c"]));
    assert_schema_valid(&uni);

    let petersen = on_file("recognize", "petersen.txt", &generated(&["petersen", "5", "2"]), &[]).json();
    assert_eq!(petersen["verdict"]["method"], "oracle-fallback");
    assert_eq!(petersen["verdict"]["fallback_used"], true);
    assert_eq!(petersen["verdict"]["excellent"], true);
    assert_schema_valid(&petersen);
}

#[test]
fn recognize_table_output() {
    let r = on_file("recognize", "tree-table.txt", P6, &["--output", "table"]);
    assert_eq!(r.code, exit::OK);
    assert!(r.stdout.contains("tree/perfect-matching"), "{}", r.stdout);
}

#[test]
fn certificates_round_trip() {
    let inputs = [
        generated(&["graph", "path:6"]),
        generated(&["caterpillar", "6", "0,3"]),
        generated(&["random", "unicyclic", "11", "5"]),
        generated(&["corona", "cycle:4", "complete:3"]),
        generated(&["general-corona", "3", "2,1,3"]),
        generated(&["cntree", "4", "0-1"]),
        generated(&["random", "block", "10", "3"]),
        generated(&["random", "chordal", "10", "8"]),
        generated(&["random", "bipartite", "10", "1"]),
        generated(&["petersen", "6", "2"]),
        generated(&["graph", "star:3"]),
        "5 3\na b\nc d\nd e\n".to_string(),
    ];
    let v = schema();
    for (i, text) in inputs.iter().enumerate() {
        let g = parse(text, Format::EdgeList).unwrap();
        let r = on_file("recognize", &format!("round-trip-{i}.txt"), text, &[]);
        let report = r.json();
        assert!(v.is_valid(&report), "{report:#}");
        assert_eq!(report["certificate_valid"], true);
        let verdict = verdict_from_json(&g, &report["verdict"]).unwrap();
        assert_eq!(verify_certificate(&g, &verdict), Ok(()));
        assert_eq!(verdict, recognize(&g, &Oracle::default()).unwrap());
        let again = serde_json::to_string(&verdict_to_json(&g, &verdict)).unwrap();
        assert_eq!(again, serde_json::to_string(&report["verdict"]).unwrap());
    }
}

#[test]
fn tampered_certificate_is_rejected() {
    let g = parse(P6, Format::EdgeList).unwrap();
    let report = on_file("recognize", "tamper.txt", P6, &[]).json();
    let mut verdict = report["verdict"].clone();
    verdict["excellent"] = false.into();
    let decoded = verdict_from_json(&g, &verdict).unwrap();
    assert!(verify_certificate(&g, &decoded).is_err());
    verdict["certificate"]["matching"][0][0] = "nobody".into();
    assert!(verdict_from_json(&g, &verdict).is_err());
}

#[test]
fn generate_examples() {
    let p = parse(&generated(&["petersen", "5", "2"]), Format::EdgeList).unwrap();
    assert_eq!((p.order(), p.size()), (10, 15));
    let c = parse(&generated(&["caterpillar", "4", "0,1"]), Format::EdgeList).unwrap();
    assert_eq!((c.order(), c.size()), (6, 6));
    assert_eq!(generated(&["random", "tree", "8", "42"]), generated(&["random", "tree", "8", "42"]));
    let dimacs = cli(&["generate", "petersen", "5", "2", "--format", "dimacs"]);
    assert!(dimacs.stdout.contains("p edge 10 15"), "{}", dimacs.stdout);
}

#[test]
fn generate_names_the_violated_constraint() {
    let r = cli(&["generate", "petersen", "4", "3"]);
    assert_ne!(r.code, exit::OK);
    assert!(r.stderr.contains("error"), "{}", r.stderr);
    assert!(r.stdout.is_empty());
}

#[test]
fn commands_are_deterministic() {
    let strip = |mut j: Value| {
        j.as_object_mut().unwrap().remove("elapsed_ms");
        j
    };
    let text = generated(&["random", "bipartite", "14", "9"]);
    let a = strip(on_file("analyze", "det-a.txt", &text, &[]).json());
    let b = strip(on_file("analyze", "det-b.txt", &text, &[]).json());
    assert_eq!(a, b);
    let a = strip(cli(&["verify", "--count", "5", "--seed", "7"]).json());
    let b = strip(cli(&["verify", "--count", "5", "--seed", "7", "--sequential"]).json());
    assert_eq!(a, b);
}

#[test]
fn verify_small_run_is_clean_and_schema_valid() {
    let r = cli(&["verify", "--count", "10"]);
    assert_eq!(r.code, exit::OK, "{}", r.stdout);
    let j = r.json();
    assert_eq!(j["status"], "ok");
    assert_eq!(j["suites"].as_array().unwrap().len(), 14);
    assert_schema_valid(&j);
}

#[test]
fn verify_empty_corpus_is_a_vacuous_pass() {
    let r = cli(&["verify", "--count", "0"]);
    assert_eq!(r.code, exit::OK);
    assert!(r.stderr.contains("vacuous pass"), "{}", r.stderr);
    assert_eq!(r.json()["status"], "ok");
}

#[test]
fn verify_catches_an_injected_bug() {
    let r = cli(&["verify", "--count", "40", "--inject-bug"]);
    assert_eq!(r.code, exit::DISAGREEMENT);
    let j = r.json();
    assert_eq!(j["status"], "disagreement");
    let suites = j["suites"].as_array().unwrap();
    let example = suites.iter().flat_map(|s| s["counterexamples"].as_array().unwrap()).next().expect("a counterexample");
    let text = example["edge_list"].as_str().unwrap();
    let replay = on_file("analyze", "counterexample.txt", text, &[]);
    assert_eq!(replay.code, exit::OK);
}

#[test]
fn verify_table_lists_every_suite() {
    let r = cli(&["verify", "--count", "3", "--output", "table"]);
    assert_eq!(r.stdout.lines().filter(|l| l.contains("disagree 0")).count(), 14, "{}", r.stdout);
}

#[test]
fn parse_errors_exit_2_with_position() {
    let r = on_file("analyze", "bad.txt", "3 2\na b\nb\n", &[]);
    assert_eq!(r.code, exit::PARSE);
    assert!(r.stderr.contains("line 3"), "{}", r.stderr);
    assert!(r.stderr.contains("column"), "{}", r.stderr);
    let missing = cli(&["analyze", "/nonexistent/graph.txt"]);
    assert_eq!(missing.code, exit::PARSE);
}

#[test]
fn budget_exhaustion_exits_3_with_status() {
    let text = generated(&["petersen", "8", "3"]);
    let r = on_file("analyze", "budget.txt", &text, &["--budget", "2"]);
    assert_eq!(r.code, exit::BUDGET);
    let j = r.json();
    assert_eq!(j["status"], "budget-exhausted");
    assert_schema_valid(&j);
    let text = generated(&["petersen", "7", "3"]);
    let r = on_file("recognize", "budget-r.txt", &text, &["--budget", "2"]);
    assert_eq!(r.code, exit::BUDGET);
    assert_eq!(r.json()["status"], "budget-exhausted");
}

#[test]
fn zero_budget_is_rejected() {
    assert_ne!(on_file("analyze", "zero.txt", P6, &["--budget", "0"]).code, exit::OK);
}

#[test]
fn binary_reads_standard_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_excellence"))
        .args(["analyze", "--output", "table"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(P6.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("excellent  yes"), "{text}");
}

#[test]
fn binary_exit_codes() {
    let status = Command::new(env!("CARGO_BIN_EXE_excellence"))
        .args(["verify", "--count", "20", "--inject-bug"])
        .stdout(Stdio::null())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(1));
}
