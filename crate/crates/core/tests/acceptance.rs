//! The acceptance suite: one test per release criterion, each printing a
//! single pass line (run with `--nocapture` to see them). The tests share
//! a lock so the stated runtime tolerances are measured one at a time.

use metric_basis::constructions::{
    self, complement_pattern_of, from_complement_pattern, glue, named_graph, ComplementPattern,
    GluePart, GlueSpec, PatternPiece,
};
use metric_basis::corpus;
use metric_basis::graph::Graph;
use metric_basis::reduction::{
    sat_reduction, satisfiable_side_certificate, universal_certificate, CnfFormula, Lit,
};
use metric_basis::resolver::{self, PairSystem, SearchConfig};
use metric_basis::rng::SplitMix64;
use metric_basis::theorems;
use std::sync::Mutex;
use std::time::{Duration, Instant};

static GATE: Mutex<()> = Mutex::new(());

fn cfg() -> SearchConfig {
    SearchConfig::default()
}

fn label_set(g: &Graph, vs: &[usize]) -> Vec<String> {
    let mut out: Vec<String> = vs
        .iter()
        .map(|&v| g.label(v).expect("labelled vertex").to_string())
        .collect();
    out.sort();
    out
}

fn finish(criterion: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed <= budget,
        "{criterion}: took {elapsed:?}, budget {budget:?}"
    );
    println!("acceptance {criterion}: PASS ({elapsed:?})");
}

// --------------------------------------------------------------------------
// independent oracle used by criterion 6 (and nowhere in the library)
// --------------------------------------------------------------------------

fn oracle_distances(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let inf = usize::MAX / 2;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

fn oracle_resolves(d: &[Vec<usize>], subset_mask: u32, n: usize) -> bool {
    for x in 0..n {
        for y in x + 1..n {
            let separated = d
                .iter()
                .enumerate()
                .any(|(w, row)| subset_mask >> w & 1 == 1 && row[x] != row[y]);
            if !separated {
                return false;
            }
        }
    }
    true
}

fn oracle_dimension(g: &Graph) -> usize {
    let d = oracle_distances(g);
    let n = g.n();
    for k in 1..n {
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize == k && oracle_resolves(&d, mask, n) {
                return k;
            }
        }
    }
    n.saturating_sub(1)
}

// --------------------------------------------------------------------------
// criteria
// --------------------------------------------------------------------------

#[test]
fn criterion_1_figure_catalogue_exactness() {
    let _gate = GATE.lock().unwrap();
    let budget = Duration::from_secs(1);

    let started = Instant::now();
    let fig4 = named_graph("fig4").unwrap();
    let a = resolver::analyze(&fig4, &cfg()).unwrap();
    assert_eq!(a.dim(), 2);
    let bases: Vec<Vec<String>> = a.bases().iter().map(|b| label_set(&fig4, b)).collect();
    assert_eq!(
        bases,
        vec![
            vec!["v2".to_string(), "v5".to_string()],
            vec!["v3".to_string(), "v6".to_string()],
            vec!["v5".to_string(), "v6".to_string()],
        ]
    );
    assert!(started.elapsed() <= budget, "fig4 too slow");

    let started = Instant::now();
    let fig2a = named_graph("fig2a").unwrap();
    let a = resolver::analyze(&fig2a, &cfg()).unwrap();
    assert_eq!(a.dim(), 3);
    let bases: Vec<Vec<String>> = a.bases().iter().map(|b| label_set(&fig2a, b)).collect();
    assert_eq!(
        bases,
        vec![
            vec!["u".to_string(), "v1".to_string(), "v2".to_string()],
            vec!["u".to_string(), "v1".to_string(), "v3".to_string()],
            vec!["u".to_string(), "v2".to_string(), "v3".to_string()],
        ]
    );
    assert!(started.elapsed() <= budget, "fig2a too slow");

    let started = Instant::now();
    let fig1b = named_graph("fig1b").unwrap();
    let a = resolver::analyze(&fig1b, &cfg()).unwrap();
    assert_eq!(a.bases().len(), 1, "unique basis");
    let basis = &a.bases()[0];
    assert_eq!(basis.len(), 2);
    let pendants = fig1b.pendants();
    assert!(basis.iter().all(|v| pendants.contains(v)));
    assert_eq!(a.basis_forced(), *basis);
    finish("criterion 1 (figure catalogue exactness)", started, budget);
}

#[test]
fn criterion_2_glue_worked_examples() {
    let _gate = GATE.lock().unwrap();
    let started = Instant::now();
    let budget = Duration::from_secs(30);
    let fig2a = named_graph("fig2a").unwrap();
    let v1 = fig2a.vertex_by_label("v1").unwrap();
    let v3 = fig2a.vertex_by_label("v3").unwrap();
    let u = fig2a.vertex_by_label("u").unwrap();

    // one-shot clique glue of three copies through v1
    let spec = GlueSpec {
        parts: (0..3)
            .map(|_| GluePart {
                graph: fig2a.clone(),
                anchor: v1,
            })
            .collect(),
    };
    assert_eq!(constructions::glue_dim_formula(&spec, &cfg()).unwrap(), 6);
    let w1 = glue(&spec, &cfg()).unwrap();
    let a1 = resolver::analyze(&w1.graph, &cfg()).unwrap();
    assert_eq!(a1.dim(), 6);
    let expected_forced: Vec<usize> = w1.offsets.iter().map(|off| off + u).collect();
    assert_eq!(a1.basis_forced(), expected_forced);
    // all eight bases: the hub of each copy plus either of its two free
    // pendant companions
    let v2 = fig2a.vertex_by_label("v2").unwrap();
    let mut expected_bases = Vec::new();
    for c1 in [v2, v3] {
        for c2 in [v2, v3] {
            for c3 in [v2, v3] {
                let mut b = vec![u, c1, 12 + u, 12 + c2, 24 + u, 24 + c3];
                b.sort_unstable();
                expected_bases.push(b);
            }
        }
    }
    expected_bases.sort();
    assert_eq!(a1.bases(), expected_bases.as_slice());

    // iterated glue: two copies through v1/v1, then v3 of the second copy
    // against v1 of a third copy
    let spec = GlueSpec {
        parts: vec![
            GluePart {
                graph: fig2a.clone(),
                anchor: v1,
            },
            GluePart {
                graph: fig2a.clone(),
                anchor: v1,
            },
        ],
    };
    let w2 = glue(&spec, &cfg()).unwrap();
    let spec = GlueSpec {
        parts: vec![
            GluePart {
                graph: w2.graph.clone(),
                anchor: w2.offsets[1] + v3,
            },
            GluePart {
                graph: fig2a.clone(),
                anchor: v1,
            },
        ],
    };
    let w3 = glue(&spec, &cfg()).unwrap();
    let a3 = resolver::analyze(&w3.graph, &cfg()).unwrap();
    assert_eq!(a3.dim(), 5);
    assert_eq!(a3.forced_count(), 3);
    assert_eq!(a3.basis_forced(), vec![u, 12 + u, 24 + u]);
    // four bases: free companion in the first copy, anchored second copy
    // contributes only its hub, free companion in the third
    let mut expected_bases = Vec::new();
    for c1 in [v2, v3] {
        for c3 in [v2, v3] {
            let mut b = vec![u, c1, 12 + u, 24 + u, 24 + c3];
            b.sort_unstable();
            expected_bases.push(b);
        }
    }
    expected_bases.sort();
    assert_eq!(a3.bases(), expected_bases.as_slice());

    // two fig4 copies through v2 and v3: one cross basis survives
    let fig4 = named_graph("fig4").unwrap();
    let spec = GlueSpec {
        parts: vec![
            GluePart {
                graph: fig4.clone(),
                anchor: fig4.vertex_by_label("v2").unwrap(),
            },
            GluePart {
                graph: fig4.clone(),
                anchor: fig4.vertex_by_label("v3").unwrap(),
            },
        ],
    };
    let w = glue(&spec, &cfg()).unwrap();
    let a = resolver::analyze(&w.graph, &cfg()).unwrap();
    assert_eq!(a.bases().len(), 1);
    assert_eq!(
        label_set(&w.graph, &a.bases()[0]),
        vec!["v5^1".to_string(), "v6^2".to_string()]
    );
    finish("criterion 2 (glue worked examples)", started, budget);
}

#[test]
fn criterion_3_dense_family() {
    let _gate = GATE.lock().unwrap();
    let started = Instant::now();
    let budget = Duration::from_secs(60);
    for k in [2usize, 4] {
        for m in 1usize..=3 {
            let mut pieces = vec![PatternPiece::P5; k / 2];
            pieces.push(PatternPiece::Isolated(m));
            let pattern = ComplementPattern::new(pieces);
            let g = from_complement_pattern(&pattern).unwrap();
            let n = 5 * k / 2 + m;
            assert_eq!(g.n(), n);
            assert_eq!(g.edge_count(), n * (n - 1) / 2 - 2 * k, "k={k} m={m}");
            let a = resolver::analyze(&g, &cfg()).unwrap();
            assert_eq!(a.dim(), k + m - 1, "k={k} m={m}");
            assert_eq!(a.forced_count(), k, "k={k} m={m}");
            // forced vertices sit second and fourth on every path piece
            let mut expected = Vec::new();
            for (piece, range) in pattern.piece_ranges() {
                if piece == PatternPiece::P5 {
                    expected.push(range.start + 1);
                    expected.push(range.start + 3);
                }
            }
            assert_eq!(a.basis_forced(), expected, "k={k} m={m}");
        }
    }
    finish("criterion 3 (dense family)", started, budget);
}

#[test]
fn criterion_4_extremal_uniqueness_n6() {
    let _gate = GATE.lock().unwrap();
    let started = Instant::now();
    let budget = Duration::from_secs(300);
    let pairs: Vec<(usize, usize)> = (0..6)
        .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
        .collect();
    let extremal = ComplementPattern::new(vec![PatternPiece::P5, PatternPiece::Isolated(1)]);
    let mut with_forced = 0usize;
    for mask in 0u32..(1 << 15) {
        if (mask.count_ones() as usize) < 11 {
            continue;
        }
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edge_list(6, &edges).unwrap();
        assert!(g.is_connected(), "graphs this dense stay connected");
        let a = resolver::analyze(&g, &cfg()).unwrap();
        if a.forced_count() > 0 {
            with_forced += 1;
            assert_eq!(g.edge_count(), 11);
            assert_eq!(a.forced_count(), 2);
            assert_eq!(
                complement_pattern_of(&g).expect("recognizable complement"),
                extremal
            );
        }
    }
    // the extremal graph has automorphism group of order 2, so exactly
    // 6!/2 labelled copies carry forced vertices
    assert_eq!(with_forced, 360);
    finish("criterion 4 (extremal uniqueness at n=6)", started, budget);
}

#[test]
fn criterion_5_corpus_theorem_suite() {
    let _gate = GATE.lock().unwrap();
    let started = Instant::now();
    let budget = Duration::from_secs(30 * 60);
    let mut graphs = Vec::new();
    for n in 2..=7 {
        graphs.extend(corpus::all_connected_graphs(n));
    }
    let exhaustive_count = graphs.len();
    assert_eq!(exhaustive_count, 1 + 2 + 6 + 21 + 112 + 853);
    for (n, count) in [(8usize, 1667), (9, 1667), (10, 1666)] {
        graphs.extend(corpus::seeded_corpus(n, count, 0xC0FFEE + n as u64));
    }
    let results = theorems::run_corpus(&graphs, &cfg());
    let mut failures = Vec::new();
    for (i, res) in results.into_iter().enumerate() {
        let report = res.unwrap_or_else(|e| panic!("graph {i}: {e}"));
        for entry in report.failures() {
            failures.push(format!("graph {i}: {} {:?}", entry.id, entry.outcome));
        }
    }
    assert!(failures.is_empty(), "{failures:#?}");
    finish("criterion 5 (corpus theorem suite)", started, budget);
}

#[test]
fn criterion_6_oracle_equivalence() {
    let _gate = GATE.lock().unwrap();
    let started = Instant::now();
    let budget = Duration::from_secs(300);
    let mut rng = SplitMix64::new(0xACE);
    let mut checked = 0;
    while checked < 1000 {
        let n = 2 + (rng.next_u64() % 7) as usize; // 2..=8
        let density = 3 + rng.next_u64() % 5; // tenths
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.chance(density, 10) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges).unwrap();
        if !g.is_connected() {
            continue;
        }
        checked += 1;
        let ps = PairSystem::new(&g.distance_matrix().unwrap());
        let tc = g.twin_classes();
        let fast = resolver::metric_dimension(&ps, &tc, &cfg()).unwrap();
        assert_eq!(fast, oracle_dimension(&g), "edges: {:?}", g.edges());
    }
    finish("criterion 6 (oracle equivalence)", started, budget);
}

fn random_formula(rng: &mut SplitMix64, n: usize, m: usize) -> CnfFormula {
    let clauses: Vec<[Lit; 3]> = (0..m)
        .map(|_| {
            let mut vars = Vec::new();
            while vars.len() < 3 {
                let v = rng.next_below(n as u64) as usize;
                if !vars.contains(&v) {
                    vars.push(v);
                }
            }
            [
                Lit {
                    var: vars[0],
                    positive: rng.chance(1, 2),
                },
                Lit {
                    var: vars[1],
                    positive: rng.chance(1, 2),
                },
                Lit {
                    var: vars[2],
                    positive: rng.chance(1, 2),
                },
            ]
        })
        .collect();
    CnfFormula::new(n, clauses).unwrap()
}

#[test]
fn criterion_7_sat_reduction() {
    let _gate = GATE.lock().unwrap();
    let started = Instant::now();
    let budget = Duration::from_secs(120);
    let mut rng = SplitMix64::new(0xFEED);

    // (a) structural audit over 20 random formulas
    for _ in 0..20 {
        let n = 3 + (rng.next_u64() % 4) as usize; // 3..=6
        let m = 1 + (rng.next_u64() % 4) as usize; // 1..=4
        let f = random_formula(&mut rng, n, m);
        let rg = sat_reduction(&f).unwrap();
        let g = rg.graph();
        assert_eq!(g.n(), 2 * (6 * n + 5 * m) + 1);
        assert!(g.is_connected());
        assert_eq!(g.degree(rg.probe()), 2 * m);
        audit_wiring(&f, &rg);

        // (c) the universal certificate resolves every tested formula
        let cert = universal_certificate(&rg);
        assert_eq!(cert.len(), 2 * n + 2 * m + 1);
        assert!(cert.contains(&rg.probe()));
        let ps = PairSystem::new(&g.distance_matrix().unwrap());
        assert!(ps.is_resolving(&cert));
    }

    // (b) satisfying certificates on small satisfiable formulas
    let mut seen_satisfiable = 0;
    while seen_satisfiable < 10 {
        let n = 3 + (rng.next_u64() % 2) as usize; // 3..=4
        let m = 1 + (rng.next_u64() % 3) as usize; // 1..=3
        let f = random_formula(&mut rng, n, m);
        let assignment = (0u64..(1 << n))
            .map(|bits| (0..n).map(|i| bits >> i & 1 == 1).collect::<Vec<bool>>())
            .find(|a| f.is_satisfied_by(a));
        let Some(assignment) = assignment else {
            continue;
        };
        seen_satisfiable += 1;
        let rg = sat_reduction(&f).unwrap();
        let cert = satisfiable_side_certificate(&rg, &assignment).unwrap();
        assert_eq!(cert.len(), 2 * n + 2 * m);
        assert!(!cert.contains(&rg.probe()));
        let ps = PairSystem::new(&rg.graph().distance_matrix().unwrap());
        assert!(ps.is_resolving(&cert));
    }

    // (d) a deliberately falsified assignment reports the contact pair of
    // the violated clause
    let f = CnfFormula::new(3, vec![[Lit::pos(0), Lit::pos(1), Lit::pos(2)]]).unwrap();
    let rg = sat_reduction(&f).unwrap();
    assert!(!f.is_satisfied_by(&[false, false, false]));
    let cert = satisfiable_side_certificate(&rg, &[false, false, false]).unwrap();
    let ps = PairSystem::new(&rg.graph().distance_matrix().unwrap());
    assert!(!ps.is_resolving(&cert));
    let unresolved = ps.unresolved_pairs(&cert);
    let c1 = rg.clause_vertex(1, 0, 1);
    let c3 = rg.clause_vertex(1, 0, 3);
    assert!(unresolved.contains(&(c1.min(c3), c1.max(c3))));
    finish("criterion 7 (sat reduction certificates)", started, budget);
}

fn audit_wiring(f: &CnfFormula, rg: &metric_basis::reduction::ReductionGraph) {
    use metric_basis::reduction::VarVertex;
    let g = rg.graph();
    let n = f.num_vars();
    for copy in 1..=2 {
        let other = 3 - copy;
        for i in 0..n {
            // the variable gadget is the plain six-cycle
            let a1 = rg.var_vertex(copy, i, VarVertex::A1);
            let a2 = rg.var_vertex(copy, i, VarVertex::A2);
            let b1 = rg.var_vertex(copy, i, VarVertex::B1);
            let b2 = rg.var_vertex(copy, i, VarVertex::B2);
            let t = rg.var_vertex(copy, i, VarVertex::T);
            let fv = rg.var_vertex(copy, i, VarVertex::F);
            for (x, y) in [(t, a1), (a1, b1), (b1, fv), (fv, b2), (b2, a2), (a2, t)] {
                assert!(g.has_edge(x, y));
            }
            assert!(!g.has_edge(a1, a2));
            assert!(!g.has_edge(b1, b2));
            assert!(!g.has_edge(t, fv));
            assert_eq!(g.degree(a1), 2);
            assert_eq!(g.degree(a2), 2);
            assert_eq!(g.degree(b1), 2);
            assert_eq!(g.degree(b2), 2);
        }
        for (j, clause) in f.clauses().iter().enumerate() {
            let c: Vec<usize> = (1..=5).map(|p| rg.clause_vertex(copy, j, p)).collect();
            // star through the second contact
            for &leaf in &[c[0], c[2], c[3], c[4]] {
                assert!(g.has_edge(c[1], leaf));
            }
            assert!(!g.has_edge(c[0], c[2]));
            assert_eq!(g.degree(c[3]), 1);
            assert_eq!(g.degree(c[4]), 1);
            assert!(g.has_edge(rg.probe(), c[2]));
            for i in 0..n {
                let t = rg.var_vertex(copy, i, VarVertex::T);
                let fv = rg.var_vertex(copy, i, VarVertex::F);
                // the first contact reaches both poles of every gadget
                assert!(g.has_edge(c[0], t));
                assert!(g.has_edge(c[0], fv));
                match clause.iter().find(|lit| lit.var == i) {
                    Some(lit) => {
                        assert_eq!(g.has_edge(c[2], fv), lit.positive);
                        assert_eq!(g.has_edge(c[2], t), !lit.positive);
                    }
                    None => {
                        assert!(g.has_edge(c[2], t));
                        assert!(g.has_edge(c[2], fv));
                    }
                }
                // cross wiring into the other copy touches every variable
                let t_other = rg.var_vertex(other, i, VarVertex::T);
                let f_other = rg.var_vertex(other, i, VarVertex::F);
                assert!(g.has_edge(c[0], t_other));
                assert!(g.has_edge(c[0], f_other));
                assert!(g.has_edge(c[2], t_other));
                assert!(g.has_edge(c[2], f_other));
            }
        }
    }
}

#[test]
fn criterion_8_sparse_construction_scaling() {
    let _gate = GATE.lock().unwrap();
    let started = Instant::now();
    let budget = Duration::from_secs(120);
    let fig2a = named_graph("fig2a").unwrap();
    let v1 = fig2a.vertex_by_label("v1").unwrap();
    let v3 = fig2a.vertex_by_label("v3").unwrap();
    let u = fig2a.vertex_by_label("u").unwrap();

    let mut current = {
        let spec = GlueSpec {
            parts: vec![
                GluePart {
                    graph: fig2a.clone(),
                    anchor: v1,
                },
                GluePart {
                    graph: fig2a.clone(),
                    anchor: v1,
                },
            ],
        };
        glue(&spec, &cfg()).unwrap().graph
    };
    for m in 2usize..=4 {
        assert_eq!(current.n(), 12 * m);
        assert_eq!(current.edge_count(), 12 * m + m - 1, "m={m}");
        let a = resolver::analyze(&current, &cfg()).unwrap();
        let expected_forced: Vec<usize> = (0..m).map(|i| 12 * i + u).collect();
        assert_eq!(a.basis_forced(), expected_forced, "m={m}");
        if m < 4 {
            let spec = GlueSpec {
                parts: vec![
                    GluePart {
                        graph: current.clone(),
                        // v3 of the most recently attached copy
                        anchor: current.n() - 12 + v3,
                    },
                    GluePart {
                        graph: fig2a.clone(),
                        anchor: v1,
                    },
                ],
            };
            current = glue(&spec, &cfg()).unwrap().graph;
        }
    }
    finish("criterion 8 (sparse construction scaling)", started, budget);
}
