//! Exact computation of metric dimension, metric bases, and the
//! forced/void/flexible vertex classification of finite connected graphs,
//! together with the graph constructions that exhibit extremal behaviour
//! (anchor gluing, dense complement families, unicyclic invariants, a
//! 3-SAT reduction) and an executable suite of structural checks.
//!
//! Start with [`resolver::analyze`]:
//!
//! ```
//! use metric_basis::{constructions, resolver, resolver::SearchConfig};
//!
//! let g = constructions::named_graph("fig4").unwrap();
//! let a = resolver::analyze(&g, &SearchConfig::default()).unwrap();
//! assert_eq!(a.dim(), 2);
//! assert_eq!(a.bases().len(), 3);
//! ```
//!
//! The `examples/` directory is the guided tour, one runnable program per
//! capability:
//!
//! - `analyze_figures` — the built-in graph catalogue and its classifications
//! - `glue_sparse` — sparse graphs with many forced vertices via anchor gluing
//! - `dense_families` — complement-pattern families and the edge bounds
//! - `colour_graph` — the edge-coloured uniqueness diagnostics for a basis
//! - `unicyclic_invariants` — cycle invariants and the dimension range
//! - `sat_reduction` — the two-copy 3-SAT gadget graph and its certificates
//! - `theorem_corpus` — the structural check suite over a random corpus
//!
//! Run one with `cargo run --release --example analyze_figures`.

pub mod bits;
pub mod cli;
pub mod colour;
pub mod constructions;
pub mod corpus;
pub mod graph;
pub mod io;
pub mod reduction;
pub mod resolver;
pub mod rng;
pub mod theorems;

pub use graph::{DistanceMatrix, Graph, GraphError, TwinClasses, TwinKind};
pub use resolver::{PairSystem, ResolvingAnalysis, SearchConfig, VertexClass};
