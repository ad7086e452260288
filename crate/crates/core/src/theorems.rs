//! Executable checkers for the structural laws tying cut-vertices,
//! pendants, twins, edge counts, and the colour diagnostics to the
//! forced/void classification. Each check records whether its hypotheses
//! held (vacuous cases stay visible) and carries a concrete witness on
//! failure. A failure on any graph means an implementation bug somewhere,
//! never an acceptable outcome.

use crate::colour::ColourGraph;
use crate::constructions::{self, PatternPiece};
use crate::graph::Graph;
use crate::resolver::{self, ResolverError, ResolvingAnalysis, SearchConfig, VertexClass};
use rayon::prelude::*;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckId {
    CutVertexSplitVoid,
    CutVertexPathSideNotForced,
    SomeBasisAvoidsCutVertices,
    BasisEmptySideIsDanglingPath,
    CutVertexResolutionTransfer,
    PendantSplitNotForced,
    PendantDegreeTwoNotForced,
    TreesHaveNoForced,
    UnicyclicForcedAtMostTwo,
    UnicyclicDimInRange,
    TypeOneCycleTriplesResolve,
    TwinClassAlmostInside,
    UniversalNotForced,
    EdgeBoundWithForced,
    EdgeBoundPerForced,
    ForcedCountBounds,
    ColourStructure,
    ColourCycleLaw,
    ColourTransitivity,
    ColourCliques,
    ColourForcedEdges,
}

impl CheckId {
    pub const ALL: [CheckId; 21] = [
        CheckId::CutVertexSplitVoid,
        CheckId::CutVertexPathSideNotForced,
        CheckId::SomeBasisAvoidsCutVertices,
        CheckId::BasisEmptySideIsDanglingPath,
        CheckId::CutVertexResolutionTransfer,
        CheckId::PendantSplitNotForced,
        CheckId::PendantDegreeTwoNotForced,
        CheckId::TreesHaveNoForced,
        CheckId::UnicyclicForcedAtMostTwo,
        CheckId::UnicyclicDimInRange,
        CheckId::TypeOneCycleTriplesResolve,
        CheckId::TwinClassAlmostInside,
        CheckId::UniversalNotForced,
        CheckId::EdgeBoundWithForced,
        CheckId::EdgeBoundPerForced,
        CheckId::ForcedCountBounds,
        CheckId::ColourStructure,
        CheckId::ColourCycleLaw,
        CheckId::ColourTransitivity,
        CheckId::ColourCliques,
        CheckId::ColourForcedEdges,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CheckId::CutVertexSplitVoid => "cut-vertex-split-void",
            CheckId::CutVertexPathSideNotForced => "cut-vertex-path-side-not-forced",
            CheckId::SomeBasisAvoidsCutVertices => "some-basis-avoids-cut-vertices",
            CheckId::BasisEmptySideIsDanglingPath => "basis-empty-side-is-dangling-path",
            CheckId::CutVertexResolutionTransfer => "cut-vertex-resolution-transfer",
            CheckId::PendantSplitNotForced => "pendant-split-not-forced",
            CheckId::PendantDegreeTwoNotForced => "pendant-degree-two-not-forced",
            CheckId::TreesHaveNoForced => "trees-have-no-forced",
            CheckId::UnicyclicForcedAtMostTwo => "unicyclic-forced-at-most-two",
            CheckId::UnicyclicDimInRange => "unicyclic-dim-in-range",
            CheckId::TypeOneCycleTriplesResolve => "type-one-cycle-triples-resolve",
            CheckId::TwinClassAlmostInside => "twin-class-almost-inside",
            CheckId::UniversalNotForced => "universal-not-forced",
            CheckId::EdgeBoundWithForced => "edge-bound-with-forced",
            CheckId::EdgeBoundPerForced => "edge-bound-per-forced",
            CheckId::ForcedCountBounds => "forced-count-bounds",
            CheckId::ColourStructure => "colour-structure",
            CheckId::ColourCycleLaw => "colour-cycle-law",
            CheckId::ColourTransitivity => "colour-transitivity",
            CheckId::ColourCliques => "colour-cliques",
            CheckId::ColourForcedEdges => "colour-forced-edges",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Outcome {
    /// Hypotheses never applied on this graph.
    Vacuous,
    Passed,
    Failed(String),
}

#[derive(Clone, Debug)]
pub struct TheoremEntry {
    pub id: CheckId,
    pub outcome: Outcome,
}

#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub entries: Vec<TheoremEntry>,
}

impl TheoremReport {
    pub fn failures(&self) -> impl Iterator<Item = &TheoremEntry> {
        self.entries
            .iter()
            .filter(|e| matches!(e.outcome, Outcome::Failed(_)))
    }

    pub fn all_ok(&self) -> bool {
        self.failures().next().is_none()
    }
}

/// A helper with everything the individual checks consume.
struct Ctx<'a> {
    g: &'a Graph,
    analysis: &'a ResolvingAnalysis,
    cut_vertices: Vec<usize>,
}

impl<'a> Ctx<'a> {
    fn class(&self, v: usize) -> VertexClass {
        self.analysis.class_of(v)
    }

    /// Components of G - v together with "forms a dangling path through v".
    fn split_at(&self, v: usize) -> Vec<(Vec<usize>, bool)> {
        let (without, old_to_new) = self.g.remove_vertex(v).expect("vertex in range");
        let mut new_to_old = vec![0; without.n()];
        for (old, new) in old_to_new.iter().enumerate() {
            if let Some(new) = new {
                new_to_old[*new] = old;
            }
        }
        without
            .connected_components()
            .into_iter()
            .map(|comp| {
                let orig: Vec<usize> = comp.iter().map(|&x| new_to_old[x]).collect();
                let mut with_v = orig.clone();
                with_v.push(v);
                let (sub, _) = self.g.induced_subgraph(&with_v).expect("vertices in range");
                let dangling = sub.is_path().unwrap_or(false);
                (orig, dangling)
            })
            .collect()
    }
}

fn entry(id: CheckId, outcome: Outcome) -> TheoremEntry {
    TheoremEntry { id, outcome }
}

fn from_instances(id: CheckId, applicable: bool, failure: Option<String>) -> TheoremEntry {
    let outcome = match (applicable, failure) {
        (false, _) => Outcome::Vacuous,
        (true, None) => Outcome::Passed,
        (true, Some(w)) => Outcome::Failed(w),
    };
    entry(id, outcome)
}

/// Runs every check against the graph. The analysis is recomputed here;
/// use [`run_all_with`] to reuse one.
pub fn run_all(g: &Graph, cfg: &SearchConfig) -> Result<TheoremReport, ResolverError> {
    let analysis = resolver::analyze(g, cfg)?;
    run_all_with(g, &analysis)
}

/// Runs every check against a graph with a precomputed analysis.
pub fn run_all_with(
    g: &Graph,
    analysis: &ResolvingAnalysis,
) -> Result<TheoremReport, ResolverError> {
    let mut entries = Vec::new();
    entries.extend(check_cut_vertex_rules(g, analysis)?);
    entries.extend(check_pendant_rules(g, analysis)?);
    entries.extend(check_unicyclic_rules(g, analysis)?);
    entries.extend(check_twin_and_universal_rules(g, analysis));
    entries.extend(check_edge_bounds(g, analysis));
    entries.extend(check_count_bounds(g, analysis));
    entries.extend(check_colour_rules(g, analysis)?);
    debug_assert_eq!(entries.len(), CheckId::ALL.len());
    Ok(TheoremReport { entries })
}

/// Cut-vertex laws: heavily split cut vertices are void, a dangling-path
/// side rules out forcing, some basis avoids all cut vertices, basis-free
/// sides are dangling paths, and pairs a cut vertex separates are always
/// re-resolved from elsewhere in the basis.
pub fn check_cut_vertex_rules(
    g: &Graph,
    analysis: &ResolvingAnalysis,
) -> Result<Vec<TheoremEntry>, ResolverError> {
    let dm = g.distance_matrix()?;
    let ctx = Ctx {
        g,
        analysis,
        cut_vertices: g.cut_vertices()?,
    };
    let n = g.n();
    let mut entries = Vec::new();

    // cut vertices splitting into >= 3 parts, or two non-path parts, are void
    {
        let mut applicable = false;
        let mut failure = None;
        for &v in &ctx.cut_vertices {
            let split = ctx.split_at(v);
            let hypothesis =
                split.len() >= 3 || (split.len() == 2 && split.iter().all(|(_, p)| !p));
            if hypothesis {
                applicable = true;
                if ctx.class(v) != VertexClass::Void {
                    failure = Some(format!("cut vertex {v} is {:?}", ctx.class(v)));
                    break;
                }
            }
        }
        entries.push(from_instances(
            CheckId::CutVertexSplitVoid,
            applicable,
            failure,
        ));
    }

    // a cut vertex with a dangling-path side is never forced
    {
        let mut applicable = false;
        let mut failure = None;
        for &v in &ctx.cut_vertices {
            let split = ctx.split_at(v);
            if split.len() == 2 && split.iter().any(|(_, p)| *p) {
                applicable = true;
                if ctx.class(v) == VertexClass::BasisForced {
                    failure = Some(format!("cut vertex {v} is forced"));
                    break;
                }
            }
        }
        entries.push(from_instances(
            CheckId::CutVertexPathSideNotForced,
            applicable,
            failure,
        ));
    }

    // some basis avoids every cut vertex
    {
        let ok = analysis
            .bases()
            .iter()
            .any(|b| b.iter().all(|v| !ctx.cut_vertices.contains(v)));
        entries.push(entry(
            CheckId::SomeBasisAvoidsCutVertices,
            if ok {
                Outcome::Passed
            } else {
                Outcome::Failed("every basis meets the cut vertices".into())
            },
        ));
    }

    // for each basis and cut vertex: at most one side without basis
    // elements, and such a side extends the cut vertex into a path
    {
        let mut applicable = false;
        let mut failure = None;
        'outer: for &v in &ctx.cut_vertices {
            let split = ctx.split_at(v);
            for basis in analysis.bases() {
                applicable = true;
                let empty: Vec<&(Vec<usize>, bool)> = split
                    .iter()
                    .filter(|(comp, _)| comp.iter().all(|x| !basis.contains(x)))
                    .collect();
                if empty.len() > 1 {
                    failure = Some(format!(
                        "basis {basis:?} leaves {} sides of {v} empty",
                        empty.len()
                    ));
                    break 'outer;
                }
                if let Some((comp, dangling)) = empty.first() {
                    if !dangling {
                        failure = Some(format!(
                            "basis {basis:?} leaves non-path side {comp:?} of {v} empty"
                        ));
                        break 'outer;
                    }
                }
            }
        }
        entries.push(from_instances(
            CheckId::BasisEmptySideIsDanglingPath,
            applicable,
            failure,
        ));
    }

    // pairs split by a cut vertex are resolved by some other basis member
    // whenever at least two sides carry basis elements
    {
        let mut applicable = false;
        let mut failure = None;
        'outer: for &v in &ctx.cut_vertices {
            let split = ctx.split_at(v);
            for basis in analysis.bases() {
                let sides_with = split
                    .iter()
                    .filter(|(comp, _)| comp.iter().any(|x| basis.contains(x)))
                    .count();
                if sides_with < 2 {
                    continue;
                }
                applicable = true;
                for x in 0..n {
                    for y in x + 1..n {
                        if dm.get(v, x) == dm.get(v, y) {
                            continue;
                        }
                        let resolved = basis
                            .iter()
                            .any(|&r| r != v && dm.get(r, x) != dm.get(r, y));
                        if !resolved {
                            failure = Some(format!(
                                "pair ({x},{y}) split by {v} unresolved by {basis:?}"
                            ));
                            break 'outer;
                        }
                    }
                }
            }
        }
        entries.push(from_instances(
            CheckId::CutVertexResolutionTransfer,
            applicable,
            failure,
        ));
    }

    Ok(entries)
}

/// Pendant laws: a pendant is never forced when its neighbour separates
/// two further parts or has degree two (off paths); trees force nothing.
pub fn check_pendant_rules(
    g: &Graph,
    analysis: &ResolvingAnalysis,
) -> Result<Vec<TheoremEntry>, ResolverError> {
    let n = g.n();
    let forced = analysis.basis_forced();
    let mut entries = Vec::new();

    // a pendant whose neighbour separates two other parts is never forced
    {
        let mut applicable = false;
        let mut failure = None;
        for u in g.pendants() {
            let v = g.neighbors(u)[0];
            let rest: Vec<usize> = (0..n).filter(|&x| x != u && x != v).collect();
            let comp_count = if rest.is_empty() {
                0
            } else {
                let (sub, _) = g.induced_subgraph(&rest).expect("in range");
                sub.connected_components().len()
            };
            if comp_count >= 2 {
                applicable = true;
                if analysis.class_of(u) == VertexClass::BasisForced {
                    failure = Some(format!("pendant {u} is forced"));
                    break;
                }
            }
        }
        entries.push(from_instances(
            CheckId::PendantSplitNotForced,
            applicable,
            failure,
        ));
    }

    // a pendant on a degree-two vertex of a non-path graph is never forced
    {
        let is_path = g.is_path()?;
        let mut applicable = false;
        let mut failure = None;
        if !is_path {
            for u in g.pendants() {
                let v = g.neighbors(u)[0];
                if g.degree(v) == 2 {
                    applicable = true;
                    if analysis.class_of(u) == VertexClass::BasisForced {
                        failure = Some(format!("pendant {u} is forced"));
                        break;
                    }
                }
            }
        }
        entries.push(from_instances(
            CheckId::PendantDegreeTwoNotForced,
            applicable,
            failure,
        ));
    }

    // trees carry no forced vertices at all
    {
        let is_tree = g.edge_count() + 1 == n;
        let failure =
            (is_tree && !forced.is_empty()).then(|| format!("tree has forced vertices {forced:?}"));
        entries.push(from_instances(CheckId::TreesHaveNoForced, is_tree, failure));
    }

    Ok(entries)
}

/// Unicyclic laws: at most two forced vertices, the dimension stays in the
/// two-value window of the invariants, and on type-one graphs every
/// adjacent-pair-plus-near-antipode cycle triple resolves.
pub fn check_unicyclic_rules(
    g: &Graph,
    analysis: &ResolvingAnalysis,
) -> Result<Vec<TheoremEntry>, ResolverError> {
    let forced = analysis.basis_forced();
    let invariants = constructions::unicyclic_invariants(g).ok();
    let mut entries = Vec::new();
    {
        let failure = invariants.as_ref().and_then(|_| {
            (forced.len() > 2).then(|| format!("unicyclic graph has {} forced", forced.len()))
        });
        entries.push(from_instances(
            CheckId::UnicyclicForcedAtMostTwo,
            invariants.is_some(),
            failure,
        ));
    }
    {
        let failure = invariants.as_ref().and_then(|inv| {
            let (lo, hi) = inv.dim_range();
            let dim = analysis.dim();
            (dim < lo || dim > hi).then(|| {
                format!(
                    "dim {dim} outside [{lo},{hi}] (threads {}, busy cycle vertices {})",
                    inv.thread_surplus, inv.branched_cycle_vertices
                )
            })
        });
        entries.push(from_instances(
            CheckId::UnicyclicDimInRange,
            invariants.is_some(),
            failure,
        ));
    }
    {
        let type_one = invariants.as_ref().map(|i| i.type_one).unwrap_or(false);
        let mut failure = None;
        if type_one {
            let dm = g.distance_matrix()?;
            let cycle = &invariants.as_ref().unwrap().cycle;
            let r = cycle.len();
            let ps = resolver::PairSystem::new(&dm);
            let mut reversed = cycle.clone();
            reversed.reverse();
            'outer: for orientation in [cycle, &reversed] {
                for i in 0..r {
                    let triple = [
                        orientation[i],
                        orientation[(i + 1) % r],
                        orientation[(i + r / 2) % r],
                    ];
                    if !ps.is_resolving(&triple) {
                        failure = Some(format!("cycle triple {triple:?} does not resolve"));
                        break 'outer;
                    }
                }
            }
        }
        entries.push(from_instances(
            CheckId::TypeOneCycleTriplesResolve,
            type_one,
            failure,
        ));
    }
    Ok(entries)
}

/// Twin and universal-vertex laws: every basis contains all but at most
/// one member of each twin class, and universal vertices are never forced.
pub fn check_twin_and_universal_rules(
    g: &Graph,
    analysis: &ResolvingAnalysis,
) -> Vec<TheoremEntry> {
    let n = g.n();
    let mut entries = Vec::new();
    {
        let tc = g.twin_classes();
        let classes: Vec<_> = tc.non_singleton().collect();
        let mut failure = None;
        'outer: for class in &classes {
            for basis in analysis.bases() {
                let inside = class.vertices.iter().filter(|v| basis.contains(v)).count();
                if inside + 1 < class.vertices.len() {
                    failure = Some(format!(
                        "basis {basis:?} misses {} of twin class {:?}",
                        class.vertices.len() - inside,
                        class.vertices
                    ));
                    break 'outer;
                }
            }
        }
        entries.push(from_instances(
            CheckId::TwinClassAlmostInside,
            !classes.is_empty(),
            failure,
        ));
    }
    {
        let universal: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 1).collect();
        let failure = universal
            .iter()
            .find(|&&v| analysis.class_of(v) == VertexClass::BasisForced)
            .map(|&v| format!("universal vertex {v} is forced"));
        entries.push(from_instances(
            CheckId::UniversalNotForced,
            !universal.is_empty(),
            failure,
        ));
    }
    entries
}

/// Edge bounds: forced vertices cost at least four missing edges overall
/// (with the unique extremal complement shape at equality) and two missing
/// edges each.
pub fn check_edge_bounds(g: &Graph, analysis: &ResolvingAnalysis) -> Vec<TheoremEntry> {
    let forced = analysis.basis_forced();
    let n = g.n();
    let max_edges = n * (n - 1) / 2;
    let mut entries = Vec::new();
    {
        let applicable = !forced.is_empty() && n >= 6;
        let mut failure = None;
        if applicable {
            let m = g.edge_count();
            if m > max_edges - 4 {
                failure = Some(format!("{m} edges with forced vertices present"));
            } else if m == max_edges - 4 {
                let expected = vec![PatternPiece::P5, PatternPiece::Isolated(n - 5)];
                let shape_ok = constructions::complement_pattern_of(g)
                    .map(|p| p.pieces == expected)
                    .unwrap_or(false);
                if !shape_ok {
                    failure = Some("extremal graph with unexpected complement shape".into());
                } else if forced.len() != 2 {
                    failure = Some(format!("extremal graph has {} forced", forced.len()));
                }
            }
        }
        entries.push(from_instances(
            CheckId::EdgeBoundWithForced,
            applicable,
            failure,
        ));
    }
    {
        let applicable = !forced.is_empty() && n >= 3;
        let failure = (applicable && g.edge_count() + 2 * forced.len() > max_edges).then(|| {
            format!(
                "{} edges with {} forced vertices",
                g.edge_count(),
                forced.len()
            )
        });
        entries.push(from_instances(
            CheckId::EdgeBoundPerForced,
            applicable,
            failure,
        ));
    }
    entries
}

/// Count bound: the forced count stays under both the order minus the
/// dimension and half the remaining vertices.
pub fn check_count_bounds(g: &Graph, analysis: &ResolvingAnalysis) -> Vec<TheoremEntry> {
    let n = g.n();
    let k = analysis.forced_count();
    let applicable = k > 0;
    let mut failure = None;
    if applicable {
        if k + analysis.dim() + 1 > n {
            failure = Some(format!("k={k}, dim={}, n={n}", analysis.dim()));
        } else if 2 * k > n - 1 {
            failure = Some(format!("k={k} exceeds half of n-1={}", n - 1));
        }
    }
    vec![from_instances(
        CheckId::ForcedCountBounds,
        applicable,
        failure,
    )]
}

/// Colour-graph laws across every enumerated basis: independence and
/// incident colours, the once-per-cycle ban, closure into monochromatic
/// cliques, and the extra edges a forced vertex must contribute.
pub fn check_colour_rules(
    g: &Graph,
    analysis: &ResolvingAnalysis,
) -> Result<Vec<TheoremEntry>, ResolverError> {
    let dm = g.distance_matrix()?;
    let forced = analysis.basis_forced();
    let mut structure = None;
    let mut cycle_law = None;
    let mut transitivity = None;
    let mut cliques = None;
    let mut forced_edges = None;
    for basis in analysis.bases() {
        let cg = ColourGraph::build(&dm, basis);
        if structure.is_none() {
            structure = cg
                .check_reference_structure()
                .and_then(|_| cg.check_every_colour_used())
                .err()
                .map(|e| format!("basis {basis:?}: {e}"));
        }
        if cycle_law.is_none() {
            cycle_law = cg
                .check_cycle_property()
                .err()
                .map(|e| format!("basis {basis:?}: {e}"));
        }
        if transitivity.is_none() {
            transitivity = cg
                .check_transitivity()
                .err()
                .map(|e| format!("basis {basis:?}: {e}"));
        }
        if cliques.is_none() {
            cliques = basis
                .iter()
                .find_map(|&r| cg.monochromatic_components(r).err())
                .map(|e| format!("basis {basis:?}: {e}"));
        }
        if forced_edges.is_none() && !forced.is_empty() {
            forced_edges = cg
                .check_forced_colour_counts(&forced)
                .err()
                .map(|e| format!("basis {basis:?}: {e}"));
        }
    }
    let has_bases = !analysis.bases().is_empty();
    Ok(vec![
        from_instances(CheckId::ColourStructure, has_bases, structure),
        from_instances(CheckId::ColourCycleLaw, has_bases, cycle_law),
        from_instances(CheckId::ColourTransitivity, has_bases, transitivity),
        from_instances(CheckId::ColourCliques, has_bases, cliques),
        from_instances(
            CheckId::ColourForcedEdges,
            has_bases && !forced.is_empty(),
            forced_edges,
        ),
    ])
}

/// Runs the suite over a corpus in parallel. Results come back in corpus
/// order regardless of thread count.
pub fn run_corpus(
    graphs: &[Graph],
    cfg: &SearchConfig,
) -> Vec<Result<TheoremReport, ResolverError>> {
    graphs.par_iter().map(|g| run_all(g, cfg)).collect()
}
