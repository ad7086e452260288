//! Sparse graphs with many forced vertices via anchor gluing.
//!
//! Joining graphs through a clique on non-void anchor vertices multiplies
//! their basis structure: the glued graph's bases are exactly the unions
//! of per-part bases through the anchors, minus the anchors. Iterating
//! the two-part form adds a single edge per step, giving `m` forced
//! vertices on `12m` vertices with only `13m - 1` edges.
//!
//! ```bash
//! cargo run --release --example glue_sparse
//! ```

use metric_basis::constructions::{glue, glue_dim_formula, named_graph, GluePart, GlueSpec};
use metric_basis::resolver::{analyze, SearchConfig};

fn main() {
    let cfg = SearchConfig::default();
    let part = named_graph("fig2a").unwrap();
    let v1 = part.vertex_by_label("v1").unwrap();
    let v3 = part.vertex_by_label("v3").unwrap();
    let u = part.vertex_by_label("u").unwrap();

    // one-shot: three copies glued through a triangle on the v1 anchors
    let spec = GlueSpec {
        parts: (0..3)
            .map(|_| GluePart {
                graph: part.clone(),
                anchor: v1,
            })
            .collect(),
    };
    let predicted = glue_dim_formula(&spec, &cfg).unwrap();
    let w1 = glue(&spec, &cfg).unwrap();
    let a1 = analyze(&w1.graph, &cfg).unwrap();
    println!(
        "clique glue of 3 parts: {} vertices, {} edges, dim {} (predicted {}), {} forced",
        w1.graph.n(),
        w1.graph.edge_count(),
        a1.dim(),
        predicted,
        a1.forced_count()
    );
    assert_eq!(a1.dim(), predicted);
    assert_eq!(a1.dim(), 6);
    assert_eq!(a1.forced_count(), 3);

    // iterated: attach one copy at a time; each step adds exactly one edge
    println!("\niterated chain:");
    let mut current = {
        let spec = GlueSpec {
            parts: vec![
                GluePart {
                    graph: part.clone(),
                    anchor: v1,
                },
                GluePart {
                    graph: part.clone(),
                    anchor: v1,
                },
            ],
        };
        glue(&spec, &cfg).unwrap().graph
    };
    for m in 2..=4 {
        let a = analyze(&current, &cfg).unwrap();
        println!(
            "  m={m}: {} vertices, {} edges (13m-1 = {}), dim {}, forced {:?}",
            current.n(),
            current.edge_count(),
            13 * m - 1,
            a.dim(),
            a.basis_forced()
        );
        assert_eq!(current.edge_count(), 12 * m + m - 1);
        let hubs: Vec<usize> = (0..m).map(|i| 12 * i + u).collect();
        assert_eq!(a.basis_forced(), hubs);
        if m < 4 {
            let spec = GlueSpec {
                parts: vec![
                    GluePart {
                        graph: current.clone(),
                        anchor: current.n() - 12 + v3,
                    },
                    GluePart {
                        graph: part.clone(),
                        anchor: v1,
                    },
                ],
            };
            current = glue(&spec, &cfg).unwrap().graph;
        }
    }

    // anchors must sit in some basis of their part; a void anchor is refused
    let fig4 = named_graph("fig4").unwrap();
    let bad = GlueSpec {
        parts: vec![
            GluePart {
                graph: fig4.clone(),
                anchor: fig4.vertex_by_label("v1").unwrap(),
            },
            GluePart {
                graph: fig4,
                anchor: 1,
            },
        ],
    };
    let err = glue(&bad, &cfg).unwrap_err();
    println!("\nvoid anchor rejected: {err}");
}
