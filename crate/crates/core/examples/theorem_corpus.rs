//! Runs the structural check suite over graph corpora: every connected
//! graph on up to six vertices (exhaustive, up to isomorphism) plus a
//! seeded random batch on eight vertices. Any failure would mean a bug in
//! the solver or the checks themselves.
//!
//! ```bash
//! cargo run --release --example theorem_corpus
//! ```

use metric_basis::corpus::{all_connected_graphs, seeded_corpus};
use metric_basis::resolver::SearchConfig;
use metric_basis::theorems::{run_corpus, CheckId, Outcome};
use std::collections::BTreeMap;

fn main() {
    let cfg = SearchConfig::default();
    let mut graphs = Vec::new();
    for n in 2..=6 {
        graphs.extend(all_connected_graphs(n));
    }
    let exhaustive = graphs.len();
    graphs.extend(seeded_corpus(8, 300, 1));
    println!(
        "checking {} graphs ({} exhaustive on <= 6 vertices, 300 random on 8)",
        graphs.len(),
        exhaustive
    );

    let mut ran: BTreeMap<&'static str, usize> = BTreeMap::new();
    let mut vacuous: BTreeMap<&'static str, usize> = BTreeMap::new();
    let mut failures = 0;
    for result in run_corpus(&graphs, &cfg) {
        let report = result.expect("corpus graphs stay within budget");
        for entry in &report.entries {
            match entry.outcome {
                Outcome::Passed => *ran.entry(entry.id.name()).or_default() += 1,
                Outcome::Vacuous => *vacuous.entry(entry.id.name()).or_default() += 1,
                Outcome::Failed(_) => failures += 1,
            }
        }
    }
    println!("\n{:<36} {:>8} {:>8}", "check", "ran", "vacuous");
    for id in CheckId::ALL {
        println!(
            "{:<36} {:>8} {:>8}",
            id.name(),
            ran.get(id.name()).copied().unwrap_or(0),
            vacuous.get(id.name()).copied().unwrap_or(0)
        );
    }
    assert_eq!(failures, 0);
    println!("\nno violations");
}
