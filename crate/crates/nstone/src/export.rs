//! DOT and JSON renderings of groupoids, completions and reports.

use std::fmt::Write as _;

use nstone_core::completions::{CompletedSemigroup, CompletionKind};
use nstone_core::groupoids::TopologicalGroupoid;
use nstone_core::report::Report;
use nstone_core::MulTable;
use serde::Serialize;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Identities become box nodes; every other arrow is an edge from its domain
/// to its range labelled by the arrow.
pub fn groupoid_dot(g: &TopologicalGroupoid, name: &str) -> String {
    let gr = &g.groupoid;
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for u in gr.identities().iter() {
        writeln!(out, "  a{u} [label={}];", quote(&gr.labels[u])).unwrap();
    }
    for x in (0..gr.len()).filter(|&x| !gr.is_identity(x)) {
        writeln!(out, "  a{} -> a{} [label={}];", gr.d(x), gr.r(x), quote(&gr.labels[x])).unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct ArrowJson<'a> {
    label: &'a str,
    domain: usize,
    range: usize,
    inverse: usize,
}

#[derive(Serialize)]
struct OpenJson<'a> {
    label: &'a str,
    members: Vec<usize>,
}

#[derive(Serialize)]
struct GroupoidJson<'a> {
    arrows: Vec<ArrowJson<'a>>,
    /// `[g, h, gh]` for every composable pair.
    products: Vec<[usize; 3]>,
    basis: Vec<OpenJson<'a>>,
    etale: bool,
    hausdorff: bool,
}

pub fn groupoid_json(g: &TopologicalGroupoid) -> String {
    let gr = &g.groupoid;
    let n = gr.len();
    let doc = GroupoidJson {
        arrows: (0..n).map(|x| ArrowJson { label: &gr.labels[x], domain: gr.d(x), range: gr.r(x), inverse: gr.inv(x) }).collect(),
        products: (0..n)
            .flat_map(|x| (0..n).filter_map(move |y| gr.mul(x, y).map(|z| [x, y, z])))
            .collect(),
        basis: g.topology.sets.iter().map(|b| OpenJson { label: &b.label, members: b.members.to_vec() }).collect(),
        etale: g.is_etale(),
        hausdorff: g.is_hausdorff(),
    };
    serde_json::to_string_pretty(&doc).expect("groupoids serialize")
}

#[derive(Serialize)]
struct IdealJson {
    generators: Vec<String>,
    carrier: Vec<usize>,
}

#[derive(Serialize)]
struct CompletionJson {
    kind: &'static str,
    size: usize,
    /// Elements of the completion as order ideals of the ground semigroup.
    ideals: Vec<IdealJson>,
    /// Image of each source element.
    embedding: Vec<usize>,
    table: Vec<Vec<usize>>,
}

pub fn kind_name(kind: CompletionKind) -> &'static str {
    match kind {
        CompletionKind::Distributive => "D",
        CompletionKind::JoinClosed => "idl",
        CompletionKind::Tight => "tight",
    }
}

/// Sidecar listing each element of a completion by its generating antichain.
pub fn completion_json(c: &CompletedSemigroup) -> String {
    let doc = CompletionJson {
        kind: kind_name(c.kind),
        size: c.table.size(),
        ideals: c
            .elem_ideals
            .iter()
            .map(|i| IdealJson {
                generators: i.generators.iter().map(|&x| c.ground.name(x)).collect(),
                carrier: i.carrier.to_vec(),
            })
            .collect(),
        embedding: c.embedding.iter().map(|x| x.0).collect(),
        table: c.table.rows(),
    };
    serde_json::to_string_pretty(&doc).expect("completions serialize")
}

#[derive(Serialize)]
struct CheckJson<'a> {
    name: &'a str,
    instances: usize,
    failures: usize,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a str>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    suite: &'a str,
    input: &'a str,
    passed: bool,
    checks: Vec<CheckJson<'a>>,
}

pub fn report_json(suite: &str, input: &str, r: &Report) -> String {
    let doc = ReportJson {
        suite,
        input,
        passed: r.passed(),
        checks: r
            .checks
            .iter()
            .map(|c| CheckJson {
                name: &c.name,
                instances: c.instances,
                failures: c.failures,
                passed: c.passed(),
                witness: c.witness.as_deref(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("reports serialize")
}

pub fn report_text(r: &Report) -> String {
    let mut out = String::new();
    for c in &r.checks {
        let verdict = if c.passed() { "PASS" } else { "FAIL" };
        write!(out, "{verdict}  {} ({} checked", c.name, c.instances).unwrap();
        if let Some(w) = &c.witness {
            write!(out, ", first failure: {w}").unwrap();
        }
        out.push_str(")\n");
    }
    out
}

/// The multiplication table with element names as headers.
pub fn table_text(t: &MulTable) -> String {
    let names: Vec<String> = t.elements().map(|x| t.name(x)).collect();
    let width = names.iter().map(String::len).max().unwrap_or(1);
    let mut out = format!("{:>width$} |", "*");
    for n in &names {
        write!(out, " {n:>width$}").unwrap();
    }
    out.push('\n');
    out.push_str(&"-".repeat(out.len() - 1));
    out.push('\n');
    for x in t.elements() {
        write!(out, "{:>width$} |", names[x.0]).unwrap();
        for y in t.elements() {
            write!(out, " {:>width$}", names[t.mul(x, y).0]).unwrap();
        }
        out.push('\n');
    }
    out
}
