//! Command-line front end. Output is written to a caller-supplied writer so
//! that identical invocations produce identical bytes.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nstone_core::completions::{self, CompletedSemigroup};
use nstone_core::groupoids::{self, TopologicalGroupoid, MAX_MATERIALIZED_POINTS};
use nstone_core::verify::{self, Options, Suite};
use nstone_core::{filters, patch, tight, ElementId, MulTable};
use serde_json::json;

use crate::export;
use crate::io;
use crate::oracle;

/// Exit status of a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass = 0,
    VerifyFailed = 1,
    UsageError = 2,
}

#[derive(Parser, Debug)]
#[command(name = "nstone", version, about = "Finite inverse semigroups, their completions and groupoid duals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Catalog id (e.g. `sym_inv:2`, `chain:3`) or a `.ist`/`.json` table.
    #[arg(value_name = "INPUT")]
    pub positional: Option<String>,
    #[arg(long = "input", value_name = "INPUT", conflicts_with = "positional")]
    pub flag: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

impl Input {
    fn name(&self) -> Option<&str> {
        self.positional.as_deref().or(self.flag.as_deref())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroupoidKind {
    /// All proper filters with the basis of principal opens.
    Plain,
    /// Prime filters.
    Prime,
    /// Tight filters.
    Tight,
    /// All proper filters with the universal basis.
    Universal,
    /// Prime filters of the tight completion with the patch topology.
    Exel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CompletionArg {
    #[value(name = "D")]
    D,
    Idl,
    Tight,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate a table and print its classification.
    Analyze(Input),
    /// List filters with their prime, ultra and tight flags.
    Filters(Input),
    /// Build a groupoid of filters.
    Groupoid {
        kind: GroupoidKind,
        #[command(flatten)]
        input: Input,
        /// Use the patch topology (prime spectrum only).
        #[arg(long)]
        patch: bool,
        /// List all open sets when there are at most this many arrows.
        #[arg(long, value_name = "N", default_value_t = MAX_MATERIALIZED_POINTS)]
        max_opens: usize,
        #[arg(long, value_name = "FORMAT")]
        export: Option<Format>,
    },
    /// Build a completion.
    Complete {
        kind: CompletionArg,
        #[command(flatten)]
        input: Input,
    },
    /// Build the Booleanization.
    Booleanize(Input),
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[command(flatten)]
        input: Input,
        /// Largest sampled cover.
        #[arg(long, value_name = "K", default_value_t = 3)]
        cover_size: usize,
        /// Add brute-force cross-checks.
        #[arg(long)]
        oracle: bool,
    },
    /// Export the table (JSON) or the Hasse diagram of the natural order (DOT).
    Export {
        format: Format,
        #[command(flatten)]
        input: Input,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

/// Largest source for which the universal-property checks enumerate maps.
const MAX_UNIVERSAL_SOURCE: usize = 7;
const MAX_UNIVERSAL_TARGET: usize = 8;

type Outcome = Result<Status, String>;

/// Runs a parsed command, writing to `out`.
pub fn run(cli: &Cli, out: &mut String) -> Status {
    let result = match &cli.command {
        Command::Analyze(i) => with_input(i, out, analyze),
        Command::Filters(i) => with_input(i, out, list_filters),
        Command::Groupoid { kind, input, patch, max_opens, export } => {
            with_input(input, out, |s, i, out| groupoid(s, i, out, *kind, *patch, *max_opens, *export))
        }
        Command::Complete { kind, input } => with_input(input, out, |s, i, out| complete(s, i, out, *kind)),
        Command::Booleanize(i) => with_input(i, out, booleanize),
        Command::Verify { suite, input, cover_size, oracle } => {
            with_input(input, out, |s, i, out| verify_suite(s, i, out, *suite, *cover_size, *oracle))
        }
        Command::Export { format, input } => with_input(input, out, |s, _, out| export_table(s, out, *format)),
    };
    match result {
        Ok(status) => status,
        Err(msg) => {
            out.push_str(&format!("error: {msg}\n"));
            Status::UsageError
        }
    }
}

fn with_input(i: &Input, out: &mut String, f: impl FnOnce(&MulTable, &Input, &mut String) -> Outcome) -> Outcome {
    let name = i.name().ok_or("no input given; pass a catalog id or a file")?;
    let s = io::load(name).map_err(|e| e.to_string())?;
    f(&s, i, out)
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn mark(b: bool) -> &'static str {
    if b { "yes" } else { "no" }
}

fn names(s: &MulTable, ids: impl IntoIterator<Item = ElementId>) -> Vec<String> {
    ids.into_iter().map(|x| s.name(x)).collect()
}

fn analyze(s: &MulTable, i: &Input, out: &mut String) -> Outcome {
    let c = s.classify();
    let proper = filters::all_filters(s);
    let prime = proper.iter().filter(|&&f| filters::is_prime_filter(s, f)).count();
    let ultra = proper.iter().filter(|&&f| filters::is_ultrafilter(s, f)).count();
    let tight_count = tight::tight_filters(s).len();
    if i.json {
        let doc = json!({
            "input": i.name(),
            "size": s.size(),
            "elements": names(s, s.elements()),
            "idempotents": names(s, c.idempotents.iter().copied()),
            "distributive": c.is_distributive,
            "boolean": c.is_boolean,
            "meet_semigroup": c.is_meet_semigroup,
            "proper_filters": proper.len(),
            "prime_filters": prime,
            "ultrafilters": ultra,
            "tight_filters": tight_count,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).map_err(err)?).unwrap();
        return Ok(Status::Pass);
    }
    writeln!(out, "table: {} elements, {} idempotents", s.size(), c.idempotents.len()).unwrap();
    writeln!(out, "distributive: {}", mark(c.is_distributive)).unwrap();
    writeln!(out, "boolean: {}", mark(c.is_boolean)).unwrap();
    writeln!(out, "meet semigroup: {}", mark(c.is_meet_semigroup)).unwrap();
    writeln!(out, "filters: {} proper, {prime} prime, {ultra} ultra, {tight_count} tight", proper.len()).unwrap();
    out.push('\n');
    out.push_str(&export::table_text(s));
    Ok(Status::Pass)
}

fn list_filters(s: &MulTable, i: &Input, out: &mut String) -> Outcome {
    let tight_filters = tight::tight_filters(s);
    let rows: Vec<_> = filters::all_filters(s)
        .into_iter()
        .map(|f| {
            (
                s.name(f.base),
                names(s, f.members(s).iter().map(ElementId)),
                filters::is_prime_filter(s, f),
                filters::is_ultrafilter(s, f),
                tight_filters.contains(&f),
                filters::is_idempotent_filter(s, f),
            )
        })
        .collect();
    if i.json {
        let docs: Vec<_> = rows
            .iter()
            .map(|(base, members, prime, ultra, tight, idem)| {
                json!({"base": base, "members": members, "prime": prime, "ultra": ultra, "tight": tight, "idempotent": idem})
            })
            .collect();
        writeln!(out, "{}", serde_json::to_string_pretty(&docs).map_err(err)?).unwrap();
        return Ok(Status::Pass);
    }
    writeln!(out, "{:<12} {:<6} {:<6} {:<6} {:<6} members", "base", "prime", "ultra", "tight", "idem").unwrap();
    for (base, members, prime, ultra, tight, idem) in rows {
        writeln!(
            out,
            "{:<12} {:<6} {:<6} {:<6} {:<6} {{{}}}",
            base,
            mark(prime),
            mark(ultra),
            mark(tight),
            mark(idem),
            members.join(", ")
        )
        .unwrap();
    }
    Ok(Status::Pass)
}

fn build_groupoid(s: &MulTable, kind: GroupoidKind, patch_topology: bool) -> Result<TopologicalGroupoid, String> {
    if patch_topology && kind != GroupoidKind::Prime {
        return Err("--patch applies to the prime spectrum only".into());
    }
    match kind {
        GroupoidKind::Plain => groupoids::filter_groupoid(s),
        GroupoidKind::Prime if patch_topology => patch::patch_spectrum(s),
        GroupoidKind::Prime => groupoids::prime_spectrum(s),
        GroupoidKind::Tight => groupoids::tight_spectrum(s),
        GroupoidKind::Universal => patch::universal_groupoid(s),
        GroupoidKind::Exel => patch::exel_tight_groupoid(s),
    }
    .map_err(err)
}

fn groupoid(
    s: &MulTable,
    i: &Input,
    out: &mut String,
    kind: GroupoidKind,
    patch_topology: bool,
    max_opens: usize,
    format: Option<Format>,
) -> Outcome {
    let g = build_groupoid(s, kind, patch_topology)?;
    match (format, i.json) {
        (Some(Format::Dot), _) => {
            out.push_str(&export::groupoid_dot(&g, i.name().unwrap_or("groupoid")));
            return Ok(Status::Pass);
        }
        (Some(Format::Json), _) | (None, true) => {
            writeln!(out, "{}", export::groupoid_json(&g)).unwrap();
            return Ok(Status::Pass);
        }
        (None, false) => {}
    }
    let gr = &g.groupoid;
    writeln!(out, "arrows: {}, identities: {}", gr.len(), gr.identities().len()).unwrap();
    writeln!(out, "etale: {}", mark(g.is_etale())).unwrap();
    writeln!(out, "hausdorff: {}", mark(g.is_hausdorff())).unwrap();
    writeln!(out, "discrete identity space: {}", mark(g.identity_space_is_discrete())).unwrap();
    writeln!(out, "basis sets: {}", g.topology.sets.len()).unwrap();
    for x in 0..gr.len() {
        writeln!(out, "  {:<12} {} -> {}", gr.labels[x], gr.labels[gr.d(x)], gr.labels[gr.r(x)]).unwrap();
    }
    if gr.len() <= max_opens {
        if let Some(opens) = g.topology.materialize_opens(max_opens) {
            writeln!(out, "open sets: {}", opens.len()).unwrap();
            for u in opens {
                let labels: Vec<&str> = u.iter().map(|x| gr.labels[x].as_str()).collect();
                writeln!(out, "  {{{}}}", labels.join(", ")).unwrap();
            }
        }
    }
    Ok(Status::Pass)
}

fn print_completion(c: &CompletedSemigroup, source: &MulTable, i: &Input, out: &mut String) {
    if i.json {
        writeln!(out, "{}", export::completion_json(c)).unwrap();
        return;
    }
    let cls = c.table.classify();
    writeln!(out, "{} completion: {} elements", export::kind_name(c.kind), c.table.size()).unwrap();
    writeln!(out, "distributive: {}, boolean: {}", mark(cls.is_distributive), mark(cls.is_boolean)).unwrap();
    writeln!(out, "embedding:").unwrap();
    for x in source.elements() {
        writeln!(out, "  {} -> {}", source.name(x), c.table.name(c.embedding[x.0])).unwrap();
    }
    writeln!(out, "elements:").unwrap();
    for x in c.table.elements() {
        writeln!(out, "  {:>3}  {}", x.0, c.table.name(x)).unwrap();
    }
}

fn complete(s: &MulTable, i: &Input, out: &mut String, kind: CompletionArg) -> Outcome {
    let c = match kind {
        CompletionArg::D => completions::distributive_completion(s),
        CompletionArg::Idl => completions::idl_completion(s),
        CompletionArg::Tight => completions::tight_completion(s),
    }
    .map_err(err)?;
    print_completion(&c, s, i, out);
    Ok(Status::Pass)
}

fn booleanize(s: &MulTable, i: &Input, out: &mut String) -> Outcome {
    let b = patch::booleanize(s).map_err(err)?;
    let t = &b.kb.table;
    if i.json {
        let doc = json!({
            "size": t.size(),
            "boolean": t.is_boolean(),
            "table": t.rows(),
            "embedding": b.beta.iter().map(|x| x.0).collect::<Vec<_>>(),
            "bisections": b.kb.bisections.iter().map(|x| x.to_vec()).collect::<Vec<_>>(),
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).map_err(err)?).unwrap();
        return Ok(Status::Pass);
    }
    writeln!(out, "Booleanization: {} elements, boolean: {}", t.size(), mark(t.is_boolean())).unwrap();
    writeln!(out, "prime filters: {}", b.spectrum.len()).unwrap();
    for x in s.elements() {
        let members: Vec<&str> = b.kb.bisections[b.beta[x.0].0].iter().map(|a| b.spectrum.groupoid.labels[a].as_str()).collect();
        writeln!(out, "  {} -> {{{}}}", s.name(x), members.join(", ")).unwrap();
    }
    Ok(Status::Pass)
}

fn verify_suite(s: &MulTable, i: &Input, out: &mut String, suite: Suite, cover_size: usize, with_oracle: bool) -> Outcome {
    let mut opts = Options { cover_size, targets: Vec::new() };
    if s.size() <= MAX_UNIVERSAL_SOURCE && matches!(suite, Suite::Booleanization | Suite::Paterson | Suite::Tight) {
        opts.targets = verify::standard_targets(MAX_UNIVERSAL_TARGET);
    }
    let mut report = verify::run(suite, s, &opts).map_err(err)?;
    if with_oracle {
        report.extend(oracle::cross_check(s).map_err(err)?);
    }
    let input = i.name().unwrap_or_default();
    if i.json {
        writeln!(out, "{}", export::report_json(suite.name(), input, &report)).unwrap();
    } else {
        writeln!(out, "suite {suite} on {input}").unwrap();
        out.push_str(&export::report_text(&report));
        writeln!(out, "{}", if report.passed() { "PASS" } else { "FAIL" }).unwrap();
    }
    Ok(if report.passed() { Status::Pass } else { Status::VerifyFailed })
}

fn export_table(s: &MulTable, out: &mut String, format: Format) -> Outcome {
    match format {
        Format::Json => writeln!(out, "{}", io::to_json(s)).unwrap(),
        Format::Dot => {
            out.push_str("digraph order {\n  rankdir=BT;\n");
            for x in s.elements() {
                let shape = if s.is_idempotent(x) { "box" } else { "ellipse" };
                writeln!(out, "  e{} [label=\"{}\", shape={shape}];", x.0, s.name(x).replace('"', "\\\"")).unwrap();
            }
            // Covering pairs of the natural partial order.
            for x in s.elements() {
                for y in s.up(x).iter().map(ElementId).filter(|&y| y != x) {
                    let covered = s.up(x).iter().map(ElementId).all(|z| z == x || z == y || !s.leq(z, y));
                    if covered {
                        writeln!(out, "  e{} -> e{};", x.0, y.0).unwrap();
                    }
                }
            }
            out.push_str("}\n");
        }
    }
    Ok(Status::Pass)
}
