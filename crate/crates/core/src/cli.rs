//! The `metric-basis` command line: analysis, construction, verification,
//! and colour-graph export over files and stdout.
//!
//! Exit codes: 0 success, 1 at least one structural check failed,
//! 2 input/builder error, 3 search budget exceeded.

use crate::colour::ColourGraph;
use crate::constructions::{self, ComplementPattern, GluePart, GlueSpec, PatternPiece};
use crate::corpus;
use crate::graph::Graph;
use crate::io;
use crate::reduction;
use crate::resolver::{self, ResolverError, SearchConfig};
use crate::theorems::{self, Outcome};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};
use std::time::Duration;

#[derive(Parser)]
#[command(
    name = "metric-basis",
    version,
    about = "Exact metric dimension, metric bases, and forced/void vertex classification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Search node budget for the exact solver.
    #[arg(long, global = true)]
    budget_nodes: Option<u64>,
    /// Search time budget in seconds.
    #[arg(long, global = true)]
    budget_secs: Option<u64>,
    /// Cap on worker threads for corpus verification.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Args)]
struct GraphSource {
    /// Catalogue graph name (fig1a, fig1b, fig1c, fig2a, fig4, fig7,
    /// fig8a, fig8b).
    #[arg(long, conflicts_with = "input")]
    named: Option<String>,
    /// Graph file (.json for the JSON schema, anything else as edge list).
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Compute dimension, all metric bases, and the vertex classification.
    Analyze {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Build a graph (glue, pattern, sat, named) and print it.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Run the structural check suite on a graph or a corpus.
    Verify {
        #[command(flatten)]
        source: GraphSource,
        /// Corpus mode: `n=<vertices>` instead of a single graph.
        #[arg(long, conflicts_with_all = ["named", "input"])]
        corpus: Option<String>,
        /// Number of random corpus graphs.
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Use every connected graph up to isomorphism instead of random
        /// sampling (corpus n <= 7 only).
        #[arg(long)]
        exhaustive: bool,
        /// Seed for the random corpus.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Export the coloured uniqueness graph of one enumerated basis (DOT).
    ColourGraph {
        #[command(flatten)]
        source: GraphSource,
        /// Index into the lexicographically sorted basis list.
        #[arg(long, default_value_t = 0)]
        basis_index: usize,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// A catalogue graph.
    Named {
        key: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
    },
    /// Complement pattern, e.g. `P5,P5,K0:2` (pieces: K2 K3 P4 P5 C4
    /// K1_<leaves> SPECIALG SPECIALJ H7 K0:<m>).
    Pattern {
        spec: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
    },
    /// The two-copy gadget graph of a DIMACS 3-CNF file.
    Sat {
        cnf: PathBuf,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
    },
    /// Anchor-glued graph from a JSON spec:
    /// {"parts":[{"graph":{...},"anchor":0},...]}.
    Glue {
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
    },
}

/// Error carrying the process exit code.
#[derive(Debug)]
struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> CliError {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

fn map_resolver(e: ResolverError) -> CliError {
    let code = match e {
        ResolverError::BudgetExceeded { .. } => 3,
        _ => 2,
    };
    CliError {
        code,
        message: e.to_string(),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

impl GraphSource {
    fn load(&self) -> Result<Graph, CliError> {
        match (&self.named, &self.input) {
            (Some(name), None) => {
                constructions::named_graph(name).map_err(|e| CliError::input(e.to_string()))
            }
            (None, Some(path)) => {
                let text = read_file(path)?;
                let parsed = if path.extension().is_some_and(|e| e == "json") {
                    io::graph_from_json(&text)
                } else {
                    io::parse_edge_list(&text)
                };
                parsed.map_err(|e| CliError::input(e.to_string()))
            }
            _ => Err(CliError::input(
                "exactly one of --named or --input is required",
            )),
        }
    }
}

fn search_config(cli: &Cli) -> SearchConfig {
    let mut cfg = SearchConfig::default();
    if let Some(n) = cli.budget_nodes {
        cfg.max_nodes = n;
    }
    if let Some(s) = cli.budget_secs {
        cfg.time_limit = Duration::from_secs(s);
    }
    cfg
}

fn parse_pattern(spec: &str) -> Result<ComplementPattern, CliError> {
    let mut pieces = Vec::new();
    for token in spec.split(',') {
        let token = token.trim().to_ascii_uppercase();
        let piece = match token.as_str() {
            "K2" => PatternPiece::K2,
            "K3" => PatternPiece::K3,
            "P4" => PatternPiece::P4,
            "P5" => PatternPiece::P5,
            "C4" => PatternPiece::C4,
            "SPECIALG" => PatternPiece::SpecialG,
            "SPECIALJ" => PatternPiece::SpecialJ,
            "H7" => PatternPiece::H7,
            _ => {
                if let Some(rest) = token.strip_prefix("K1_") {
                    let k: usize = rest
                        .parse()
                        .map_err(|_| CliError::input(format!("bad star size {rest:?}")))?;
                    if k < 2 {
                        return Err(CliError::input("stars need at least two leaves"));
                    }
                    PatternPiece::Star(k)
                } else if let Some(rest) = token.strip_prefix("K0:") {
                    let m: usize = rest
                        .parse()
                        .map_err(|_| CliError::input(format!("bad block size {rest:?}")))?;
                    PatternPiece::Isolated(m)
                } else {
                    return Err(CliError::input(format!("unknown pattern piece {token:?}")));
                }
            }
        };
        pieces.push(piece);
    }
    Ok(ComplementPattern::new(pieces))
}

fn parse_glue_spec(text: &str) -> Result<GlueSpec, CliError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| CliError::input(e.to_string()))?;
    let parts_value = value
        .get("parts")
        .and_then(|p| p.as_array())
        .ok_or_else(|| CliError::input("glue spec needs a `parts` array"))?;
    let mut parts = Vec::new();
    for (i, pv) in parts_value.iter().enumerate() {
        let graph_value = pv
            .get("graph")
            .ok_or_else(|| CliError::input(format!("part {i} misses `graph`")))?;
        let graph = io::graph_from_json(&graph_value.to_string())
            .map_err(|e| CliError::input(format!("part {i}: {e}")))?;
        let anchor = pv
            .get("anchor")
            .and_then(|a| a.as_u64())
            .ok_or_else(|| CliError::input(format!("part {i} misses `anchor`")))?;
        parts.push(GluePart {
            graph,
            anchor: anchor as usize,
        });
    }
    Ok(GlueSpec { parts })
}

fn emit_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Edgelist => io::write_edge_list(g),
        GraphFormat::Json => format!("{}\n", io::graph_to_json(g)),
        GraphFormat::Dot => io::graph_to_dot(g),
    }
}

fn vertex_name(g: &Graph, v: usize) -> String {
    match g.label(v) {
        Some(l) => format!("{v}({l})"),
        None => v.to_string(),
    }
}

fn set_line(g: &Graph, vs: &[usize]) -> String {
    vs.iter()
        .map(|&v| vertex_name(g, v))
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_analyze(g: &Graph, cfg: &SearchConfig, format: ReportFormat) -> Result<String, CliError> {
    use std::fmt::Write;
    let a = resolver::analyze(g, cfg).map_err(map_resolver)?;
    let mut out = String::new();
    match format {
        ReportFormat::Json => {
            let mut v = io::analysis_to_json(&a);
            v["schema"] = serde_json::json!("v1");
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&v).expect("serializes")
            );
        }
        ReportFormat::Text => {
            let _ = writeln!(out, "vertices: {}", g.n());
            let _ = writeln!(out, "edges: {}", g.edge_count());
            let _ = writeln!(out, "dim: {}", a.dim());
            let _ = writeln!(out, "bases: {}", a.bases().len());
            for basis in a.bases() {
                let _ = writeln!(out, "  {{{}}}", set_line(g, basis));
            }
            let _ = writeln!(
                out,
                "basis forced ({}): {}",
                a.forced_count(),
                set_line(g, &a.basis_forced())
            );
            let _ = writeln!(
                out,
                "void ({}): {}",
                a.void_vertices().len(),
                set_line(g, &a.void_vertices())
            );
            let _ = writeln!(
                out,
                "flexible ({}): {}",
                a.flexible_vertices().len(),
                set_line(g, &a.flexible_vertices())
            );
        }
    }
    Ok(out)
}

fn cmd_verify_graph(
    g: &Graph,
    cfg: &SearchConfig,
    format: ReportFormat,
) -> Result<(String, i32), CliError> {
    let report = theorems::run_all(g, cfg).map_err(map_resolver)?;
    Ok(render_verify_report(&report, format))
}

/// Renders a check report and picks the exit code: 1 as soon as any check
/// actually failed, 0 otherwise.
fn render_verify_report(report: &theorems::TheoremReport, format: ReportFormat) -> (String, i32) {
    use std::fmt::Write;
    let failing = report.failures().count();
    let mut out = String::new();
    match format {
        ReportFormat::Json => {
            let mut v = io::theorem_report_to_json(report);
            v["schema"] = serde_json::json!("v1");
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&v).expect("serializes")
            );
        }
        ReportFormat::Text => {
            for e in &report.entries {
                let status = match &e.outcome {
                    Outcome::Vacuous => "vacuous".to_string(),
                    Outcome::Passed => "pass".to_string(),
                    Outcome::Failed(w) => format!("FAIL ({w})"),
                };
                let _ = writeln!(out, "{:<36} {status}", e.id.name());
            }
        }
    }
    (out, if failing > 0 { 1 } else { 0 })
}

fn parse_corpus_size(spec: &str) -> Result<usize, CliError> {
    spec.strip_prefix("n=")
        .and_then(|rest| rest.parse().ok())
        .ok_or_else(|| CliError::input("corpus spec must look like n=<vertices>"))
}

fn cmd_verify_corpus(
    n: usize,
    count: usize,
    exhaustive: bool,
    seed: u64,
    cfg: &SearchConfig,
    format: ReportFormat,
) -> Result<(String, i32), CliError> {
    use std::fmt::Write;
    let mut out = String::new();
    let graphs = if exhaustive {
        if !(1..=7).contains(&n) {
            return Err(CliError::input("exhaustive corpus is limited to n <= 7"));
        }
        corpus::all_connected_graphs(n)
    } else {
        corpus::seeded_corpus(n, count, seed)
    };
    let results = theorems::run_corpus(&graphs, cfg);
    let mut failures = Vec::new();
    for (i, res) in results.iter().enumerate() {
        match res {
            Err(e) => return Err(map_resolver(e.clone())),
            Ok(report) => {
                for e in report.failures() {
                    if let Outcome::Failed(w) = &e.outcome {
                        failures.push((i, e.id.name(), w.clone()));
                    }
                }
            }
        }
    }
    match format {
        ReportFormat::Json => {
            let v = serde_json::json!({
                "schema": "v1",
                "graphs": graphs.len(),
                "failures": failures
                    .iter()
                    .map(|(i, id, w)| serde_json::json!({
                        "graph": i, "check": id, "witness": w,
                    }))
                    .collect::<Vec<_>>(),
            });
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&v).expect("serializes")
            );
        }
        ReportFormat::Text => {
            let _ = writeln!(
                out,
                "checked {} graphs on {n} vertices ({})",
                graphs.len(),
                if exhaustive { "exhaustive" } else { "random" }
            );
            for (i, id, w) in &failures {
                let _ = writeln!(out, "graph {i}: {id} FAIL ({w})");
            }
            if failures.is_empty() {
                let _ = writeln!(out, "all checks passed");
            }
        }
    }
    Ok((out, if failures.is_empty() { 0 } else { 1 }))
}

fn cmd_colour_graph(g: &Graph, cfg: &SearchConfig, basis_index: usize) -> Result<String, CliError> {
    let a = resolver::analyze(g, cfg).map_err(map_resolver)?;
    let basis = a.bases().get(basis_index).ok_or_else(|| {
        CliError::input(format!(
            "basis index {basis_index} out of range (graph has {} bases)",
            a.bases().len()
        ))
    })?;
    let dm = g
        .distance_matrix()
        .map_err(|e| CliError::input(e.to_string()))?;
    let cg = ColourGraph::build(&dm, basis);
    Ok(io::colour_graph_to_dot(&cg, g))
}

fn run_inner(cli: Cli) -> Result<i32, CliError> {
    if let Some(t) = cli.threads {
        // ignore failure: the global pool may already exist in tests
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
    let cfg = search_config(&cli);
    let (output, code) = match &cli.command {
        Command::Analyze { source, format } => {
            let g = source.load()?;
            (cmd_analyze(&g, &cfg, *format)?, 0)
        }
        Command::Construct { kind } => {
            let output = match kind {
                ConstructKind::Named { key, format } => {
                    let g = constructions::named_graph(key)
                        .map_err(|e| CliError::input(e.to_string()))?;
                    emit_graph(&g, *format)
                }
                ConstructKind::Pattern { spec, format } => {
                    let pattern = parse_pattern(spec)?;
                    let g = constructions::from_complement_pattern(&pattern)
                        .map_err(|e| CliError::input(e.to_string()))?;
                    emit_graph(&g, *format)
                }
                ConstructKind::Sat { cnf, format } => {
                    let text = read_file(cnf)?;
                    let formula =
                        io::parse_dimacs(&text).map_err(|e| CliError::input(e.to_string()))?;
                    let rg = reduction::sat_reduction(&formula)
                        .map_err(|e| CliError::input(e.to_string()))?;
                    emit_graph(rg.graph(), *format)
                }
                ConstructKind::Glue { spec, format } => {
                    let text = read_file(spec)?;
                    let glue_spec = parse_glue_spec(&text)?;
                    let built = constructions::glue(&glue_spec, &cfg).map_err(|e| match e {
                        constructions::ConstructError::Resolver(r) => map_resolver(r),
                        other => CliError::input(other.to_string()),
                    })?;
                    emit_graph(&built.graph, *format)
                }
            };
            (output, 0)
        }
        Command::Verify {
            source,
            corpus,
            count,
            exhaustive,
            seed,
            format,
        } => match corpus {
            Some(spec) => {
                let n = parse_corpus_size(spec)?;
                cmd_verify_corpus(n, *count, *exhaustive, *seed, &cfg, *format)?
            }
            None => {
                let g = source.load()?;
                cmd_verify_graph(&g, &cfg, *format)?
            }
        },
        Command::ColourGraph {
            source,
            basis_index,
        } => {
            let g = source.load()?;
            (cmd_colour_graph(&g, &cfg, *basis_index)?, 0)
        }
    };
    // tolerate closed pipes (e.g. piping into `head`)
    use std::io::Write;
    let _ = std::io::stdout().write_all(output.as_bytes());
    Ok(code)
}

/// Parses arguments from the environment and runs; returns the exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match run_inner(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}
