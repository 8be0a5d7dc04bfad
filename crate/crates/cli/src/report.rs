//! JSON reports. Vertices always appear by label.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde_json::{json, Map, Value};

use excellence::harness::HarnessReport;
use excellence::recognize::{recognize as dispatch, verify_certificate};
use excellence::{Graph, Oracle, OracleError, VertexSet};

use crate::certificate::verdict_to_json;
use crate::exit;

pub const SCHEMA_VERSION: u64 = 1;

pub fn to_json(report: &Value) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("reports are plain JSON");
    text.push('\n');
    text
}

fn labels(g: &Graph, vs: impl IntoIterator<Item = usize>) -> Value {
    Value::Array(vs.into_iter().map(|v| Value::from(g.label(v))).collect())
}

fn label_set(g: &Graph, s: &VertexSet) -> Value {
    labels(g, s.iter().copied())
}

fn header(command: &str, g: &Graph) -> Map<String, Value> {
    let s = g.classify();
    let mut m = Map::new();
    m.insert("schema_version".into(), json!(SCHEMA_VERSION));
    m.insert("command".into(), json!(command));
    m.insert("graph".into(), json!({ "n": g.order(), "m": g.size(), "labels": g.labels() }));
    m.insert(
        "structure".into(),
        json!({
            "connected": s.connected,
            "tree": s.tree,
            "unicyclic": s.unicyclic,
            "bipartite": s.bipartite,
            "chordal": s.chordal,
            "block_graph": s.block_graph,
            "simplicial": s.simplicial,
            "complete": s.complete,
            "components": s.components.iter().map(|c| labels(g, c.iter().copied())).collect::<Vec<_>>(),
        }),
    );
    m
}

fn finish(mut m: Map<String, Value>, status: &str, started: Instant) -> Value {
    m.insert("status".into(), json!(status));
    m.insert("elapsed_ms".into(), json!(started.elapsed().as_secs_f64() * 1e3));
    Value::Object(m)
}

fn budget_status(m: &mut Map<String, Value>, e: &OracleError) -> &'static str {
    if let OracleError::BudgetExhausted { budget } = e {
        m.insert("budget".into(), json!(budget));
    }
    m.insert("error".into(), json!(e.to_string()));
    "budget-exhausted"
}

/// Oracle analysis: i, alpha_c, alpha, critical vertices and witnesses.
pub fn analyze(g: &Graph, budget: u64) -> (Value, i32) {
    let started = Instant::now();
    let mut m = header("analyze", g);
    match Oracle::with_budget(budget).analyze(g) {
        Ok(r) => {
            m.insert("alpha".into(), json!(r.alpha));
            m.insert("alpha_c".into(), json!(r.alpha_c));
            m.insert("i".into(), json!(r.ind_dom));
            m.insert("excellent".into(), json!(r.excellent));
            m.insert("well_covered".into(), json!(r.well_covered));
            m.insert("critical".into(), label_set(g, &r.critical));
            m.insert("alpha_set".into(), label_set(g, &r.alpha_set));
            m.insert("independent_dominating_set".into(), label_set(g, &r.ind_dom_set));
            let per_vertex: Vec<Value> = g
                .vertices()
                .map(|v| {
                    json!({
                        "vertex": g.label(v),
                        "max": r.per_vertex_max[v],
                        "witness": r.witness[v].as_ref().map(|w| label_set(g, w)),
                    })
                })
                .collect();
            m.insert("per_vertex".into(), Value::Array(per_vertex));
            (finish(m, "ok", started), exit::OK)
        }
        Err(e) => {
            let status = budget_status(&mut m, &e);
            (finish(m, status, started), exit::BUDGET)
        }
    }
}

/// Dispatcher verdict, its certificate, and whether the certificate checks.
pub fn recognize(g: &Graph, budget: u64) -> (Value, i32) {
    let started = Instant::now();
    let mut m = header("recognize", g);
    match dispatch(g, &Oracle::with_budget(budget)) {
        Ok(verdict) => {
            let check = verify_certificate(g, &verdict);
            m.insert("verdict".into(), verdict_to_json(g, &verdict));
            m.insert("certificate_valid".into(), json!(check.is_ok()));
            if let Err(e) = &check {
                m.insert("error".into(), json!(e.to_string()));
            }
            let (status, code) = if check.is_ok() { ("ok", exit::OK) } else { ("invalid-certificate", exit::DISAGREEMENT) };
            (finish(m, status, started), code)
        }
        Err(e) => {
            let status = budget_status(&mut m, &e);
            (finish(m, status, started), exit::BUDGET)
        }
    }
}

/// Harness summary. Only disagreements and invalid certificates make the
/// exit code nonzero; exhausted budgets show up in `status` and per suite.
pub fn verify(h: &HarnessReport, elapsed: Duration) -> (Value, i32) {
    let (status, code) = if h.disagreement() {
        ("disagreement", exit::DISAGREEMENT)
    } else if h.budget_exhausted() {
        ("budget-exhausted", exit::OK)
    } else {
        ("ok", exit::OK)
    };
    let report = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "status": status,
        "seed": h.seed,
        "suites": h.suites,
        "elapsed_ms": elapsed.as_secs_f64() * 1e3,
    });
    (report, code)
}

fn yes(v: &Value) -> &'static str {
    if v.as_bool() == Some(true) {
        "yes"
    } else {
        "no"
    }
}

fn list(v: &Value) -> String {
    let items: Vec<&str> = v.as_array().map(|a| a.iter().filter_map(Value::as_str).collect()).unwrap_or_default();
    if items.is_empty() {
        "-".to_string()
    } else {
        items.join(" ")
    }
}

fn graph_line(r: &Value) -> String {
    format!("graph      n = {}, m = {}\n", r["graph"]["n"], r["graph"]["m"])
}

pub fn analyze_table(r: &Value) -> String {
    let mut s = graph_line(r);
    if r["status"] != "ok" {
        let _ = writeln!(s, "status     {}", r["status"].as_str().unwrap_or("?"));
        return s;
    }
    let _ = writeln!(s, "i          {}", r["i"]);
    let _ = writeln!(s, "alpha_c    {}", r["alpha_c"]);
    let _ = writeln!(s, "alpha      {}", r["alpha"]);
    let _ = writeln!(s, "excellent  {}", yes(&r["excellent"]));
    let _ = writeln!(s, "covered    {}", yes(&r["well_covered"]));
    let _ = writeln!(s, "critical   {}", list(&r["critical"]));
    s
}

pub fn recognize_table(r: &Value) -> String {
    let mut s = graph_line(r);
    if r["status"] == "budget-exhausted" {
        let _ = writeln!(s, "status     budget-exhausted");
        return s;
    }
    let v = &r["verdict"];
    let _ = writeln!(s, "excellent  {}", yes(&v["excellent"]));
    let _ = writeln!(s, "method     {}", v["method"].as_str().unwrap_or("?"));
    let _ = writeln!(s, "fallback   {}", yes(&v["fallback_used"]));
    if !v["alpha"].is_null() {
        let _ = writeln!(s, "alpha      {}", v["alpha"]);
    }
    let _ = writeln!(s, "evidence   {}", v["certificate"]["kind"].as_str().unwrap_or("?"));
    let _ = writeln!(s, "checked    {}", yes(&r["certificate_valid"]));
    s
}

pub fn verify_table(h: &HarnessReport) -> String {
    let mut s = String::new();
    for suite in &h.suites {
        let status = if suite.accepted() {
            "PASS"
        } else if suite.clean() {
            "SHORT"
        } else {
            "FAIL"
        };
        let _ = writeln!(
            s,
            "{:>2} {status:<5} {:<42} {:>5}/{:<5} disagree {} certs {} budget {}",
            suite.id,
            suite.name,
            suite.passed,
            suite.cases,
            suite.disagreements,
            suite.invalid_certificates,
            suite.budget_exhausted
        );
        for c in &suite.counterexamples {
            let _ = writeln!(s, "   case {}: {}", c.case, c.reason);
            for line in c.edge_list.lines() {
                let _ = writeln!(s, "     {line}");
            }
        }
    }
    s
}
