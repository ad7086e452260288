//! File formats: the edge-list text format, the JSON graph schema, DOT
//! export (plain and colour-annotated), DIMACS CNF input, and the JSON
//! shapes of analysis and check reports.

use crate::colour::ColourGraph;
use crate::graph::{Graph, GraphError};
use crate::reduction::{CnfFormula, Lit, ReductionError};
use crate::resolver::ResolvingAnalysis;
use crate::theorems::{Outcome, TheoremReport};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
}

fn parse_error(line: usize, message: impl Into<String>) -> IoError {
    IoError::Parse {
        line,
        message: message.into(),
    }
}

// ---------------------------------------------------------------------------
// Edge-list text format
// ---------------------------------------------------------------------------

/// Parses the plain text format: first line `n m`, then `m` lines `u v`
/// with 0-based endpoints. `#` starts a comment anywhere.
pub fn parse_edge_list(text: &str) -> Result<Graph, IoError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(parse_error(
                line_no,
                "expected two whitespace-separated fields",
            ));
        }
        let a: usize = fields[0]
            .parse()
            .map_err(|_| parse_error(line_no, format!("bad number {:?}", fields[0])))?;
        let b: usize = fields[1]
            .parse()
            .map_err(|_| parse_error(line_no, format!("bad number {:?}", fields[1])))?;
        if header.is_none() {
            header = Some((a, b));
        } else {
            edges.push((a, b));
        }
    }
    let (n, m) = header.ok_or_else(|| parse_error(0, "missing `n m` header line"))?;
    if edges.len() != m {
        return Err(parse_error(
            0,
            format!("header promises {m} edges, found {}", edges.len()),
        ));
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

// ---------------------------------------------------------------------------
// JSON graph schema
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    labels: BTreeMap<String, String>,
}

pub fn graph_to_json(g: &Graph) -> String {
    let labels = g
        .labels()
        .iter()
        .map(|(v, s)| (v.to_string(), s.clone()))
        .collect();
    serde_json::to_string_pretty(&GraphJson {
        n: g.n(),
        edges: g.edges(),
        labels,
    })
    .expect("graph serializes")
}

pub fn graph_from_json(text: &str) -> Result<Graph, IoError> {
    let parsed: GraphJson = serde_json::from_str(text)?;
    let mut labels = Vec::new();
    for (k, s) in parsed.labels {
        let v: usize = k
            .parse()
            .map_err(|_| parse_error(0, format!("label key {k:?} is not a vertex id")))?;
        labels.push((v, s));
    }
    Ok(Graph::from_edge_list(parsed.n, &parsed.edges)?.with_labels(labels)?)
}

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

fn dot_vertex_line(g: &Graph, v: usize) -> String {
    match g.label(v) {
        Some(l) => format!("  {v} [label=\"{l}\"];\n"),
        None => format!("  {v};\n"),
    }
}

/// Plain DOT with vertex labels.
pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph g {\n");
    for v in 0..g.n() {
        out.push_str(&dot_vertex_line(g, v));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// Palette for colour-graph exports; reference vertices get colours in
/// sorted order, wrapping around when the set is large.
const PALETTE: [&str; 12] = [
    "red",
    "blue",
    "darkgreen",
    "orange",
    "purple",
    "brown",
    "deeppink",
    "cadetblue",
    "gold",
    "darkcyan",
    "olive",
    "gray40",
];

/// DOT for the coloured uniqueness graph: every edge carries the colour of
/// the reference vertex that alone separates its endpoints.
pub fn colour_graph_to_dot(cg: &ColourGraph, base: &Graph) -> String {
    let colour_index: BTreeMap<usize, usize> = cg
        .reference()
        .iter()
        .enumerate()
        .map(|(i, &r)| (r, i))
        .collect();
    let mut out = String::from("graph colour_graph {\n");
    for v in 0..cg.n() {
        let in_ref = cg.reference().contains(&v);
        let label = base
            .label(v)
            .map(str::to_string)
            .unwrap_or_else(|| v.to_string());
        if in_ref {
            let c = PALETTE[colour_index[&v] % PALETTE.len()];
            out.push_str(&format!(
                "  {v} [label=\"{label}\", shape=doublecircle, color={c}];\n"
            ));
        } else {
            out.push_str(&format!("  {v} [label=\"{label}\"];\n"));
        }
    }
    for e in cg.edges() {
        let c = PALETTE[colour_index[&e.colour] % PALETTE.len()];
        out.push_str(&format!("  {} -- {} [color={c}];\n", e.x, e.y));
    }
    out.push_str("}\n");
    out
}

// ---------------------------------------------------------------------------
// DIMACS CNF
// ---------------------------------------------------------------------------

/// Parses DIMACS CNF (`p cnf <vars> <clauses>`, clause lines terminated by
/// 0). Clauses must hold exactly three literals.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, IoError> {
    let mut num_vars: Option<usize> = None;
    let mut promised_clauses = 0usize;
    let mut clauses: Vec<[Lit; 3]> = Vec::new();
    let mut current: Vec<Lit> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            let fields: Vec<&str> = rest.split_whitespace().collect();
            if fields.len() != 3 || fields[0] != "cnf" {
                return Err(parse_error(line_no, "expected `p cnf <vars> <clauses>`"));
            }
            num_vars = Some(
                fields[1]
                    .parse()
                    .map_err(|_| parse_error(line_no, "bad variable count"))?,
            );
            promised_clauses = fields[2]
                .parse()
                .map_err(|_| parse_error(line_no, "bad clause count"))?;
            continue;
        }
        let n = num_vars.ok_or_else(|| parse_error(line_no, "clause before `p cnf` header"))?;
        for tok in line.split_whitespace() {
            let lit: i64 = tok
                .parse()
                .map_err(|_| parse_error(line_no, format!("bad literal {tok:?}")))?;
            if lit == 0 {
                let three: [Lit; 3] = current.as_slice().try_into().map_err(|_| {
                    parse_error(
                        line_no,
                        format!("clause has {} literals, need exactly 3", current.len()),
                    )
                })?;
                clauses.push(three);
                current.clear();
            } else {
                let var = lit.unsigned_abs() as usize - 1;
                if var >= n {
                    return Err(parse_error(
                        line_no,
                        format!("variable {} out of range", lit.abs()),
                    ));
                }
                current.push(Lit {
                    var,
                    positive: lit > 0,
                });
            }
        }
    }
    if !current.is_empty() {
        return Err(parse_error(0, "dangling clause without terminating 0"));
    }
    let n = num_vars.ok_or_else(|| parse_error(0, "missing `p cnf` header"))?;
    if clauses.len() != promised_clauses {
        return Err(parse_error(
            0,
            format!(
                "header promises {promised_clauses} clauses, found {}",
                clauses.len()
            ),
        ));
    }
    Ok(CnfFormula::new(n, clauses)?)
}

// ---------------------------------------------------------------------------
// Report JSON
// ---------------------------------------------------------------------------

/// The stable machine-readable analysis report.
pub fn analysis_to_json(a: &ResolvingAnalysis) -> serde_json::Value {
    serde_json::json!({
        "dim": a.dim(),
        "num_bases": a.bases().len(),
        "bases": a.bases(),
        "basis_forced": a.basis_forced(),
        "void": a.void_vertices(),
        "flexible": a.flexible_vertices(),
    })
}

pub fn theorem_report_to_json(r: &TheoremReport) -> serde_json::Value {
    let entries: Vec<serde_json::Value> = r
        .entries
        .iter()
        .map(|e| {
            let (status, witness) = match &e.outcome {
                Outcome::Vacuous => ("vacuous", None),
                Outcome::Passed => ("passed", None),
                Outcome::Failed(w) => ("failed", Some(w.clone())),
            };
            serde_json::json!({
                "check": e.id.name(),
                "status": status,
                "witness": witness,
            })
        })
        .collect();
    serde_json::json!({
        "checks": entries,
        "failures": r.failures().count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::path_graph;

    #[test]
    fn edge_list_roundtrip_with_comments() {
        let text = "# a path\n3 2\n0 1 # first\n\n1 2\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        let again = parse_edge_list(&write_edge_list(&g)).unwrap();
        assert_eq!(again, g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("2 1\n0 1\n1 0\n").is_err()); // count mismatch
        assert!(parse_edge_list("2 1\n0 x\n").is_err());
        assert!(parse_edge_list("2 1\n0 1 2\n").is_err());
    }

    #[test]
    fn graph_json_roundtrip() {
        let g = path_graph(3).with_labels([(0, "a"), (2, "b")]).unwrap();
        let text = graph_to_json(&g);
        let back = graph_from_json(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.label(0), Some("a"));
    }

    #[test]
    fn dot_contains_labels_and_edges() {
        let g = path_graph(2).with_labels([(0, "x")]).unwrap();
        let dot = graph_to_dot(&g);
        assert!(dot.contains("0 [label=\"x\"];"));
        assert!(dot.contains("0 -- 1;"));
    }

    #[test]
    fn dimacs_parse_basics() {
        let f = parse_dimacs("c comment\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n").unwrap();
        assert_eq!(f.num_vars(), 3);
        assert_eq!(f.clauses().len(), 2);
        assert!(f.clauses()[0][1] == Lit::neg(1));

        assert!(parse_dimacs("p cnf 2 1\n1 -2 0\n").is_err()); // two literals
        assert!(parse_dimacs("p cnf 2 2\n1 -2 2 0\n").is_err()); // count mismatch
        assert!(parse_dimacs("1 2 3 0\n").is_err()); // missing header
        assert!(parse_dimacs("p cnf 2 1\n1 2 3 0\n").is_err()); // var range
    }

    #[test]
    fn analysis_json_shape() {
        let g = path_graph(3);
        let a = crate::resolver::analyze(&g, &crate::resolver::SearchConfig::default()).unwrap();
        let v = analysis_to_json(&a);
        assert_eq!(v["dim"], 1);
        assert_eq!(v["num_bases"], 2);
        assert_eq!(v["bases"][0][0], 0);
        assert_eq!(v["void"][0], 1);
    }
}
