//! Unicyclic graphs: the hanging-thread invariants pin the metric
//! dimension to one of two values, and the forced count never exceeds two.
//!
//! ```bash
//! cargo run --release --example unicyclic_invariants
//! ```

use metric_basis::constructions::{named_graph, unicyclic_invariants};
use metric_basis::corpus::random_unicyclic;
use metric_basis::graph::cycle_graph;
use metric_basis::resolver::{analyze, SearchConfig};
use metric_basis::rng::SplitMix64;

fn main() {
    let cfg = SearchConfig::default();
    for (name, g) in [
        ("fig1b", named_graph("fig1b").unwrap()),
        ("fig2a", named_graph("fig2a").unwrap()),
        ("C6", cycle_graph(6)),
        ("C7", cycle_graph(7)),
    ] {
        let inv = unicyclic_invariants(&g).unwrap();
        let a = analyze(&g, &cfg).unwrap();
        let (lo, hi) = inv.dim_range();
        println!(
            "{name}: threads surplus {}, busy cycle vertices {}, type one: {}",
            inv.thread_surplus, inv.branched_cycle_vertices, inv.type_one
        );
        println!(
            "  dim {} in predicted range [{lo},{hi}], forced {:?}",
            a.dim(),
            a.basis_forced()
        );
        assert!((lo..=hi).contains(&a.dim()));
        assert!(a.forced_count() <= 2);
    }

    // seeded random sweep
    let mut rng = SplitMix64::new(31337);
    let mut hits_low = 0;
    let mut total = 0;
    for _ in 0..200 {
        let n = 5 + (rng.next_u64() % 6) as usize;
        let g = random_unicyclic(n, &mut rng);
        let inv = unicyclic_invariants(&g).unwrap();
        let a = analyze(&g, &cfg).unwrap();
        let (lo, hi) = inv.dim_range();
        assert!((lo..=hi).contains(&a.dim()));
        assert!(a.forced_count() <= 2);
        total += 1;
        if a.dim() == lo {
            hits_low += 1;
        }
    }
    println!("\nrandom sweep: {total} unicyclic graphs in range, {hits_low} at the lower value");
}
