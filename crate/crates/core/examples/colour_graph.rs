//! The coloured uniqueness graph of a metric basis.
//!
//! For a basis `R`, give each `r` in `R` a colour and join the vertex
//! pairs that `r` alone separates. The result is heavily constrained: the
//! basis is independent in it, each colour class is a disjoint union of
//! cliques, no cycle sees a colour exactly once, and every forced vertex
//! contributes at least two edges of its colour, one of them entirely
//! outside `R`.
//!
//! ```bash
//! cargo run --release --example colour_graph > colour.dot
//! dot -Tpng colour.dot -o colour.png   # with graphviz installed
//! ```

use metric_basis::colour::ColourGraph;
use metric_basis::constructions::named_graph;
use metric_basis::io::colour_graph_to_dot;
use metric_basis::resolver::{analyze, SearchConfig};

fn main() {
    let cfg = SearchConfig::default();
    let g = named_graph("fig7").unwrap();
    let a = analyze(&g, &cfg).unwrap();
    assert_eq!(a.bases().len(), 1);
    let basis = &a.bases()[0];
    eprintln!(
        "unique basis: {{{}}}",
        basis
            .iter()
            .map(|&v| g.label(v).unwrap_or("?"))
            .collect::<Vec<_>>()
            .join(", ")
    );

    let dm = g.distance_matrix().unwrap();
    let cg = ColourGraph::build(&dm, basis);
    for &r in cg.reference() {
        let edges: Vec<String> = cg
            .edges_of_colour(r)
            .iter()
            .map(|e| format!("{{{},{}}}", e.x, e.y))
            .collect();
        eprintln!(
            "colour of {} covers {} pairs: {}",
            g.label(r).unwrap_or("?"),
            edges.len(),
            edges.join(" ")
        );
        let cliques = cg.monochromatic_components(r).unwrap();
        eprintln!("  cliques: {cliques:?}");
    }

    cg.check_reference_structure().unwrap();
    cg.check_cycle_property().unwrap();
    cg.check_transitivity().unwrap();
    cg.check_every_colour_used().unwrap();
    cg.check_forced_colour_counts(&a.basis_forced()).unwrap();
    eprintln!("all colour laws hold");

    // DOT on stdout so it can be piped straight into graphviz
    print!("{}", colour_graph_to_dot(&cg, &g));
}
