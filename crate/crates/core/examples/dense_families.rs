//! Dense graphs with forced vertices, described through their complement
//! patterns, and the edge bounds they attain.
//!
//! A graph with a forced vertex misses at least four edges, and two per
//! forced vertex in general; the path-on-five complement pattern meets the
//! per-vertex bound exactly for every even count, and the middle-pendant
//! path pattern comes within one edge for odd counts.
//!
//! ```bash
//! cargo run --release --example dense_families
//! ```

use metric_basis::constructions::{
    complement_pattern_of, from_complement_pattern, ComplementPattern, PatternPiece,
};
use metric_basis::resolver::{analyze, SearchConfig};

fn main() {
    let cfg = SearchConfig::default();

    println!("path-five families (even forced counts):");
    for k in [2usize, 4] {
        for m in 1usize..=3 {
            let mut pieces = vec![PatternPiece::P5; k / 2];
            pieces.push(PatternPiece::Isolated(m));
            let pattern = ComplementPattern::new(pieces);
            let g = from_complement_pattern(&pattern).unwrap();
            let a = analyze(&g, &cfg).unwrap();
            let n = g.n();
            let deficit = n * (n - 1) / 2 - g.edge_count();
            println!(
                "  k={k} m={m}: n={n}, missing {deficit} edges (= 2k), dim {} (= k+m-1), forced {:?}",
                a.dim(),
                a.basis_forced()
            );
            assert_eq!(deficit, 2 * k);
            assert_eq!(a.dim(), k + m - 1);
            assert_eq!(a.forced_count(), k);
        }
    }

    println!("\nmiddle-pendant path families (odd forced counts):");
    for m in 1usize..=2 {
        let pattern = ComplementPattern::new(vec![PatternPiece::H7, PatternPiece::Isolated(m)]);
        let g = from_complement_pattern(&pattern).unwrap();
        let a = analyze(&g, &cfg).unwrap();
        let n = g.n();
        let deficit = n * (n - 1) / 2 - g.edge_count();
        println!(
            "  k=3 m={m}: n={n}, missing {deficit} edges (= 2k+1), forced {:?}",
            a.basis_forced()
        );
        assert_eq!(deficit, 7);
        // second, fourth and sixth path vertices
        assert_eq!(a.basis_forced(), vec![1, 3, 5]);
    }

    // mixing one middle-pendant path with path-five pieces reaches any odd
    // count at one edge over the bound
    let pattern = ComplementPattern::new(vec![
        PatternPiece::H7,
        PatternPiece::P5,
        PatternPiece::Isolated(1),
    ]);
    let g = from_complement_pattern(&pattern).unwrap();
    let a = analyze(&g, &cfg).unwrap();
    let n = g.n();
    let k = a.forced_count();
    println!(
        "\nmixed family: n={n}, k={k}, missing {} edges (2k+1 = {})",
        n * (n - 1) / 2 - g.edge_count(),
        2 * k + 1
    );
    assert_eq!(k, 5);
    assert_eq!(g.edge_count() + 2 * k + 1, n * (n - 1) / 2);

    // the six-vertex extremal graph: eleven edges is the maximum with any
    // forced vertex at all, and its complement shape is unique
    let extremal = from_complement_pattern(&ComplementPattern::new(vec![
        PatternPiece::P5,
        PatternPiece::Isolated(1),
    ]))
    .unwrap();
    let a = analyze(&extremal, &cfg).unwrap();
    println!(
        "\nextremal n=6 graph: {} edges, forced {:?}, complement recognized: {}",
        extremal.edge_count(),
        a.basis_forced(),
        complement_pattern_of(&extremal).is_some()
    );
    assert_eq!(extremal.edge_count(), 11);
    assert_eq!(a.forced_count(), 2);
}
