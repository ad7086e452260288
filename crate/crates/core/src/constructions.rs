//! Builders for the graph families with interesting forced-vertex
//! behaviour: anchor gluing, dense complement-pattern families, unicyclic
//! invariants, and a catalogue of small named graphs used throughout the
//! tests and examples.

use crate::graph::{Graph, GraphError};
use crate::resolver::{self, ResolverError, SearchConfig, VertexClass};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("glue needs at least two parts")]
    TooFewParts,
    #[error("glue part {0} is a path")]
    PartIsPath(usize),
    #[error("glue part {0} is disconnected")]
    PartDisconnected(usize),
    #[error("anchor {anchor} of glue part {part} is a void vertex of that part")]
    AnchorIsVoid { part: usize, anchor: usize },
    #[error("anchor {anchor} of glue part {part} is out of range")]
    AnchorOutOfRange { part: usize, anchor: usize },
    #[error("complement pattern needs at least two vertices")]
    PatternTooSmall,
    #[error("complement pattern yields a disconnected graph")]
    ResultDisconnected,
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("unknown catalogue name {0:?}")]
    UnknownName(String),
    #[error(transparent)]
    Resolver(#[from] ResolverError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

// ---------------------------------------------------------------------------
// Anchor gluing
// ---------------------------------------------------------------------------

/// One glue part: a connected non-path graph and the anchor vertex the
/// clique will pass through. The anchor must lie in some metric basis of
/// its part.
#[derive(Clone, Debug)]
pub struct GluePart {
    pub graph: Graph,
    pub anchor: usize,
}

#[derive(Clone, Debug)]
pub struct GlueSpec {
    pub parts: Vec<GluePart>,
}

#[derive(Clone, Debug)]
pub struct GlueResult {
    pub graph: Graph,
    /// Vertex-id offset of each part inside `graph`.
    pub offsets: Vec<usize>,
    /// The anchor ids inside `graph`; they induce a clique.
    pub anchors: Vec<usize>,
}

fn validate_parts(spec: &GlueSpec, cfg: &SearchConfig) -> Result<(), ConstructError> {
    if spec.parts.len() < 2 {
        return Err(ConstructError::TooFewParts);
    }
    for (i, part) in spec.parts.iter().enumerate() {
        if part.anchor >= part.graph.n() {
            return Err(ConstructError::AnchorOutOfRange {
                part: i,
                anchor: part.anchor,
            });
        }
        if !part.graph.is_connected() {
            return Err(ConstructError::PartDisconnected(i));
        }
        if part.graph.is_path()? {
            return Err(ConstructError::PartIsPath(i));
        }
        let analysis = resolver::analyze(&part.graph, cfg)?;
        if analysis.class_of(part.anchor) == VertexClass::Void {
            return Err(ConstructError::AnchorIsVoid {
                part: i,
                anchor: part.anchor,
            });
        }
    }
    Ok(())
}

/// Joins the parts by a clique on their anchors. The bases of the result
/// are exactly the unions of per-part bases through the anchors, minus the
/// anchors themselves, so the dimension drops by one per part.
pub fn glue(spec: &GlueSpec, cfg: &SearchConfig) -> Result<GlueResult, ConstructError> {
    validate_parts(spec, cfg)?;
    let graphs: Vec<Graph> = spec.parts.iter().map(|p| p.graph.clone()).collect();
    let (union, offsets) = Graph::disjoint_union(&graphs)?;
    let anchors: Vec<usize> = spec
        .parts
        .iter()
        .zip(&offsets)
        .map(|(p, &off)| off + p.anchor)
        .collect();
    let mut edges = union.edges();
    for i in 0..anchors.len() {
        for j in i + 1..anchors.len() {
            edges.push((anchors[i], anchors[j]));
        }
    }
    let labels: Vec<(usize, String)> = union
        .labels()
        .iter()
        .map(|(&v, s)| (v, s.clone()))
        .collect();
    let graph = Graph::from_edge_list(union.n(), &edges)?.with_labels(labels)?;
    Ok(GlueResult {
        graph,
        offsets,
        anchors,
    })
}

/// Dimension the glued graph must end up with: sum of the part dimensions
/// minus the number of parts.
pub fn glue_dim_formula(spec: &GlueSpec, cfg: &SearchConfig) -> Result<usize, ConstructError> {
    validate_parts(spec, cfg)?;
    let mut total = 0;
    for part in &spec.parts {
        total += resolver::analyze(&part.graph, cfg)?.dim();
    }
    Ok(total - spec.parts.len())
}

// ---------------------------------------------------------------------------
// Complement patterns
// ---------------------------------------------------------------------------

/// A connected component of the complement graph. A pattern lists the
/// pieces; the generated graph is the complement of their disjoint union.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum PatternPiece {
    K2,
    K3,
    P4,
    P5,
    C4,
    /// Star K_{1,k} with `k >= 2` leaves.
    Star(usize),
    /// K_{1,3} with an extra pendant on one leaf (5 vertices).
    SpecialG,
    /// Triangle with a pendant (4 vertices).
    SpecialJ,
    /// Path on 7 vertices with a pendant on the middle vertex (8 vertices).
    H7,
    /// `m` isolated vertices.
    Isolated(usize),
}

impl PatternPiece {
    pub fn size(&self) -> usize {
        match *self {
            PatternPiece::K2 => 2,
            PatternPiece::K3 => 3,
            PatternPiece::P4 => 4,
            PatternPiece::P5 => 5,
            PatternPiece::C4 => 4,
            PatternPiece::Star(k) => k + 1,
            PatternPiece::SpecialG => 5,
            PatternPiece::SpecialJ => 4,
            PatternPiece::H7 => 8,
            PatternPiece::Isolated(m) => m,
        }
    }

    /// The piece as a labelled graph (this is the complement-side shape).
    pub fn build(&self) -> Graph {
        let path = |k: usize| -> Vec<(usize, usize)> { (1..k).map(|i| (i - 1, i)).collect() };
        let vlabels = |k: usize| (0..k).map(|i| (i, format!("v{}", i + 1)));
        match *self {
            PatternPiece::K2 => Graph::from_edge_list(2, &[(0, 1)])
                .unwrap()
                .with_labels(vlabels(2))
                .unwrap(),
            PatternPiece::K3 => Graph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)])
                .unwrap()
                .with_labels(vlabels(3))
                .unwrap(),
            PatternPiece::P4 => Graph::from_edge_list(4, &path(4))
                .unwrap()
                .with_labels(vlabels(4))
                .unwrap(),
            PatternPiece::P5 => Graph::from_edge_list(5, &path(5))
                .unwrap()
                .with_labels(vlabels(5))
                .unwrap(),
            PatternPiece::C4 => Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])
                .unwrap()
                .with_labels(vlabels(4))
                .unwrap(),
            PatternPiece::Star(k) => {
                let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
                Graph::from_edge_list(k + 1, &edges)
                    .unwrap()
                    .with_labels((0..=k).map(|i| (i, format!("v{i}"))))
                    .unwrap()
            }
            // star centre v3 with leaves v2, v4, v5 and a pendant v1 on v2
            PatternPiece::SpecialG => Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (2, 4)])
                .unwrap()
                .with_labels(vlabels(5))
                .unwrap(),
            // triangle v1 v2 v3 with a pendant v4 on v1
            PatternPiece::SpecialJ => Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 0), (0, 3)])
                .unwrap()
                .with_labels(vlabels(4))
                .unwrap(),
            PatternPiece::H7 => {
                let mut edges = path(7);
                edges.push((3, 7));
                Graph::from_edge_list(8, &edges)
                    .unwrap()
                    .with_labels(vlabels(8))
                    .unwrap()
            }
            PatternPiece::Isolated(m) => Graph::from_edge_list(m, &[])
                .unwrap()
                .with_labels((0..m).map(|i| (i, format!("u{}", i + 1))))
                .unwrap(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComplementPattern {
    pub pieces: Vec<PatternPiece>,
}

impl ComplementPattern {
    pub fn new(pieces: Vec<PatternPiece>) -> Self {
        ComplementPattern { pieces }
    }

    pub fn total_vertices(&self) -> usize {
        self.pieces.iter().map(PatternPiece::size).sum()
    }

    /// Vertex-id range each piece occupies in the generated graph, in
    /// listed order.
    pub fn piece_ranges(&self) -> Vec<(PatternPiece, std::ops::Range<usize>)> {
        let mut out = Vec::new();
        let mut off = 0;
        for &p in &self.pieces {
            out.push((p, off..off + p.size()));
            off += p.size();
        }
        out
    }
}

/// The complement of the disjoint union of the pattern pieces. Fails when
/// the result has fewer than two vertices or is disconnected.
pub fn from_complement_pattern(pattern: &ComplementPattern) -> Result<Graph, ConstructError> {
    if pattern.total_vertices() < 2 {
        return Err(ConstructError::PatternTooSmall);
    }
    let pieces: Vec<Graph> = pattern.pieces.iter().map(PatternPiece::build).collect();
    let (union, _) = Graph::disjoint_union(&pieces)?;
    let g = union.complement();
    if !g.is_connected() {
        return Err(ConstructError::ResultDisconnected);
    }
    Ok(g)
}

/// Recognizes a connected graph as one of the pattern pieces (singletons
/// come back as `Isolated(1)`).
pub fn recognize_piece(g: &Graph) -> Option<PatternPiece> {
    let n = g.n();
    let m = g.edge_count();
    let mut degs: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    degs.sort_unstable();
    match (n, m) {
        (1, 0) => Some(PatternPiece::Isolated(1)),
        (2, 1) => Some(PatternPiece::K2),
        (3, 3) => Some(PatternPiece::K3),
        (3, 2) => Some(PatternPiece::Star(2)),
        (4, 3) if degs == [1, 1, 2, 2] => Some(PatternPiece::P4),
        (4, 3) if degs == [1, 1, 1, 3] => Some(PatternPiece::Star(3)),
        (4, 4) if degs == [2, 2, 2, 2] => Some(PatternPiece::C4),
        (4, 4) if degs == [1, 2, 2, 3] => Some(PatternPiece::SpecialJ),
        (5, 4) if degs == [1, 1, 2, 2, 2] => Some(PatternPiece::P5),
        (5, 4) if degs == [1, 1, 1, 2, 3] => Some(PatternPiece::SpecialG),
        (8, 7) => {
            // must be the tree whose single degree-3 vertex has legs {3,3,1}
            if degs.iter().filter(|&&d| d == 3).count() != 1 || *degs.last().unwrap() != 3 {
                return None;
            }
            let centre = (0..n).find(|&v| g.degree(v) == 3)?;
            let mut legs: Vec<usize> = g
                .neighbors(centre)
                .iter()
                .map(|&start| {
                    let mut len = 1;
                    let mut prev = centre;
                    let mut cur = start;
                    while let Some(&next) = g.neighbors(cur).iter().find(|&&w| w != prev) {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            legs.sort_unstable();
            if legs == [1, 3, 3] {
                Some(PatternPiece::H7)
            } else {
                None
            }
        }
        (_, _) if n >= 4 && m == n - 1 && degs[n - 1] == n - 1 => Some(PatternPiece::Star(n - 1)),
        _ => None,
    }
}

/// Reads off the complement pattern of a graph, when every complement
/// component is a known piece. Isolated vertices are merged into one
/// `Isolated(m)` block appended last; the other pieces come back sorted.
pub fn complement_pattern_of(g: &Graph) -> Option<ComplementPattern> {
    let comp = g.complement();
    let mut pieces = Vec::new();
    let mut isolated = 0;
    for component in comp.connected_components() {
        let (piece_graph, _) = comp.induced_subgraph(&component).ok()?;
        match recognize_piece(&piece_graph)? {
            PatternPiece::Isolated(1) => isolated += 1,
            p => pieces.push(p),
        }
    }
    pieces.sort();
    if isolated > 0 {
        pieces.push(PatternPiece::Isolated(isolated));
    }
    Some(ComplementPattern::new(pieces))
}

// ---------------------------------------------------------------------------
// Unicyclic invariants
// ---------------------------------------------------------------------------

/// The quantities steering the dimension of a unicyclic graph: the surplus
/// of hanging threads at branching vertices (`thread_surplus`), the number
/// of cycle vertices carrying anything other than one hanging path
/// (`branched_cycle_vertices`), and the max-degree-3 "type one" flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnicyclicInvariants {
    pub thread_surplus: usize,
    pub branched_cycle_vertices: usize,
    pub type_one: bool,
    /// The unique cycle in cyclic order.
    pub cycle: Vec<usize>,
}

impl UnicyclicInvariants {
    /// Inclusive range the metric dimension must fall in.
    pub fn dim_range(&self) -> (usize, usize) {
        let lo = self.thread_surplus + 2usize.saturating_sub(self.branched_cycle_vertices);
        (lo, lo + 1)
    }
}

/// Computes the invariants of a connected unicyclic graph.
///
/// A hanging subtree counts as a thread of its attachment vertex when it
/// is a bare path leading away from it; `thread_surplus` adds `l(v) - 1`
/// over all vertices `v` with `l(v) >= 2` threads.
pub fn unicyclic_invariants(g: &Graph) -> Result<UnicyclicInvariants, ConstructError> {
    if !g.is_connected() || g.edge_count() != g.n() {
        return Err(ConstructError::NotUnicyclic);
    }
    let n = g.n();

    // the cycle is what survives repeated stripping of degree-1 vertices
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut queue: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = queue.pop() {
        alive[v] = false;
        for &u in g.neighbors(v) {
            if alive[u] {
                deg[u] -= 1;
                if deg[u] == 1 {
                    queue.push(u);
                }
            }
        }
    }
    let on_cycle = alive;
    let start = (0..n)
        .find(|&v| on_cycle[v])
        .expect("unicyclic graph has a cycle");
    let mut cycle = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| on_cycle[w] && w != prev && w != start)
            .unwrap_or(&start);
        if next == start {
            break;
        }
        prev = cur;
        cur = next;
        cycle.push(cur);
    }

    // orient hanging trees away from the cycle
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::new();
    let mut bfs: std::collections::VecDeque<usize> = (0..n).filter(|&v| on_cycle[v]).collect();
    let mut seen: Vec<bool> = on_cycle.clone();
    while let Some(u) = bfs.pop_front() {
        for &v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                parent[v] = u;
                order.push(v);
                bfs.push_back(v);
            }
        }
    }
    let children = {
        let mut ch: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &v in &order {
            ch[parent[v]].push(v);
        }
        ch
    };
    // a subtree is a hanging path iff no vertex inside it branches
    let mut path_down = vec![true; n];
    for &v in order.iter().rev() {
        path_down[v] = match children[v].len() {
            0 => true,
            1 => path_down[children[v][0]],
            _ => false,
        };
    }
    let threads = |v: usize| children[v].iter().filter(|&&c| path_down[c]).count();

    let thread_surplus = (0..n).map(threads).filter(|&l| l > 1).map(|l| l - 1).sum();
    let branched_cycle_vertices = cycle
        .iter()
        .filter(|&&v| {
            !children[v].is_empty() && !(children[v].len() == 1 && path_down[children[v][0]])
        })
        .count();
    let max_degree = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
    let type_one = max_degree <= 3 && (0..n).all(|v| g.degree(v) < 3 || on_cycle[v]);

    Ok(UnicyclicInvariants {
        thread_surplus,
        branched_cycle_vertices,
        type_one,
        cycle,
    })
}

// ---------------------------------------------------------------------------
// Catalogue
// ---------------------------------------------------------------------------

pub const CATALOGUE_KEYS: &[&str] = &[
    "fig1a", "fig1b", "fig1c", "fig2a", "fig4", "fig7", "fig8a", "fig8b",
];

/// A small catalogue of named graphs: a tree and its one- and two-edge
/// augmentations (fig1a/fig1b/fig1c), a unicyclic graph with a forced
/// cycle vertex (fig2a), the three-basis glue part (fig4), and the two
/// densest six-vertex graphs carrying forced vertices (fig8a = fig7 and
/// fig8b).
pub fn named_graph(name: &str) -> Result<Graph, ConstructError> {
    // fig1 family vertex layout: 0..=5 on the hexagon, pendants
    // 6 on 1, 7 on 5, 8 on 2, 9 on 4, 10 on 3.
    let fig1_pendants = [(1, 6), (5, 7), (2, 8), (4, 9), (3, 10)];
    let hexagon = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)];
    match name {
        "fig1a" => {
            let mut edges: Vec<(usize, usize)> =
                hexagon.iter().filter(|&&e| e != (3, 4)).copied().collect();
            edges.extend_from_slice(&fig1_pendants);
            Ok(Graph::from_edge_list(11, &edges)?.with_labels([(4, "v1"), (3, "v2")])?)
        }
        "fig1b" => {
            let mut edges: Vec<(usize, usize)> = hexagon.to_vec();
            edges.extend_from_slice(&fig1_pendants);
            Ok(Graph::from_edge_list(11, &edges)?.with_labels([(4, "u1"), (8, "u2")])?)
        }
        "fig1c" => {
            let mut edges: Vec<(usize, usize)> = hexagon.to_vec();
            edges.extend_from_slice(&fig1_pendants);
            edges.push((4, 8));
            Ok(Graph::from_edge_list(11, &edges)?.with_labels([(4, "u1"), (8, "u2")])?)
        }
        "fig2a" => {
            let mut edges: Vec<(usize, usize)> = hexagon.to_vec();
            edges.extend_from_slice(&[(2, 6), (6, 7), (6, 8), (6, 9), (3, 10), (4, 11)]);
            Ok(Graph::from_edge_list(12, &edges)?.with_labels([
                (0, "u"),
                (7, "v1"),
                (8, "v2"),
                (9, "v3"),
            ])?)
        }
        "fig4" => Ok(Graph::from_edge_list(
            6,
            &[
                (3, 4),
                (4, 1),
                (1, 0),
                (0, 2),
                (2, 5),
                (5, 3),
                (3, 1),
                (2, 3),
                (4, 5),
            ],
        )?
        .with_labels([
            (0, "v1"),
            (1, "v2"),
            (2, "v3"),
            (3, "v4"),
            (4, "v5"),
            (5, "v6"),
        ])?),
        "fig7" | "fig8a" => Ok(Graph::from_edge_list(
            6,
            &[
                (2, 1),
                (1, 4),
                (4, 2),
                (2, 0),
                (0, 3),
                (3, 2),
                (2, 5),
                (5, 4),
                (4, 3),
                (3, 5),
                (0, 1),
            ],
        )?
        .with_labels([
            (0, "r1"),
            (1, "r2"),
            (2, "v1"),
            (3, "v2"),
            (4, "v3"),
            (5, "v4"),
        ])?),
        "fig8b" => Ok(Graph::from_edge_list(
            6,
            &[
                (2, 1),
                (1, 4),
                (4, 2),
                (2, 0),
                (0, 3),
                (3, 2),
                (2, 5),
                (5, 4),
                (4, 3),
                (0, 1),
            ],
        )?
        .with_labels([
            (0, "r1"),
            (1, "r2"),
            (2, "v1"),
            (3, "v2"),
            (4, "v3"),
            (5, "v4"),
        ])?),
        other => Err(ConstructError::UnknownName(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph};
    use crate::resolver::analyze;

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn catalogue_shapes() {
        let fig1a = named_graph("fig1a").unwrap();
        assert_eq!((fig1a.n(), fig1a.edge_count()), (11, 10));
        assert!(!fig1a.is_path().unwrap());
        let fig1b = named_graph("fig1b").unwrap();
        assert_eq!((fig1b.n(), fig1b.edge_count()), (11, 11));
        assert!(fig1b.is_unicyclic().unwrap());
        assert_eq!(fig1b.pendants().len(), 5);
        assert_eq!(fig1b.cut_vertices().unwrap(), vec![1, 2, 3, 4, 5]);
        let fig2a = named_graph("fig2a").unwrap();
        assert!(fig2a.is_unicyclic().unwrap());
        assert!(!fig2a.is_path().unwrap());
        let fig4 = named_graph("fig4").unwrap();
        assert_eq!((fig4.n(), fig4.edge_count()), (6, 9));
        let fig8a = named_graph("fig8a").unwrap();
        assert_eq!(fig8a.edge_count(), 11);
        let fig8b = named_graph("fig8b").unwrap();
        assert_eq!(fig8b.edge_count(), 10);
        assert!(named_graph("fig99").is_err());
    }

    #[test]
    fn fig1_family_analyses() {
        // the tree: dimension two, no forced vertices, and the two
        // labelled cut vertices form one of the bases
        let g = named_graph("fig1a").unwrap();
        let a = analyze(&g, &cfg()).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.forced_count(), 0);
        let v1 = g.vertex_by_label("v1").unwrap();
        let v2 = g.vertex_by_label("v2").unwrap();
        let mut pair = vec![v1, v2];
        pair.sort_unstable();
        assert!(a.bases().contains(&pair));
        assert_eq!(a.flexible_vertices(), vec![3, 4, 7, 8, 9, 10]);

        // one extra edge: a unique two-pendant basis
        let g = named_graph("fig1b").unwrap();
        let a = analyze(&g, &cfg()).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.bases(), &[vec![6, 7]]);
        assert_eq!(a.basis_forced(), vec![6, 7]);
        assert_eq!(a.void_vertices().len(), 9);

        // another edge: dimension three, a single void vertex and nothing
        // forced any more
        let g = named_graph("fig1c").unwrap();
        let a = analyze(&g, &cfg()).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.forced_count(), 0);
        assert_eq!(a.void_vertices(), vec![g.vertex_by_label("u1").unwrap()]);
    }

    #[test]
    fn fig8_analyses() {
        let g = named_graph("fig8a").unwrap();
        let a = analyze(&g, &cfg()).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.bases(), &[vec![0, 1]]);
        assert_eq!(a.basis_forced(), vec![0, 1]);

        let g = named_graph("fig8b").unwrap();
        let a = analyze(&g, &cfg()).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.bases(), &[vec![0, 1], vec![0, 3]]);
        assert_eq!(a.basis_forced(), vec![0]);
        assert_eq!(a.flexible_vertices(), vec![1, 3]);
    }

    // In the path-five family with one path piece the forced count sits
    // exactly two short of the order-minus-dimension bound.
    #[test]
    fn path_five_family_forced_count_identity() {
        for m in 1..=4 {
            let pattern = ComplementPattern::new(vec![PatternPiece::P5, PatternPiece::Isolated(m)]);
            let g = from_complement_pattern(&pattern).unwrap();
            let a = analyze(&g, &cfg()).unwrap();
            assert_eq!(a.forced_count(), 2);
            assert_eq!(a.forced_count(), g.n() - a.dim() - 2, "m={m}");
        }
    }

    #[test]
    fn middle_pendant_path_family() {
        let pattern = ComplementPattern::new(vec![PatternPiece::H7, PatternPiece::Isolated(1)]);
        let g = from_complement_pattern(&pattern).unwrap();
        let n = g.n();
        assert_eq!(g.edge_count(), n * (n - 1) / 2 - 7);
        let a = analyze(&g, &cfg()).unwrap();
        assert_eq!(a.basis_forced(), vec![1, 3, 5]);
    }

    #[test]
    fn fig8a_complement_is_p5_plus_isolated() {
        let g = named_graph("fig8a").unwrap();
        let pattern = complement_pattern_of(&g).unwrap();
        assert_eq!(
            pattern.pieces,
            vec![PatternPiece::P5, PatternPiece::Isolated(1)]
        );
    }

    #[test]
    fn glue_of_two_fig4_copies_has_unique_cross_basis() {
        let fig4 = named_graph("fig4").unwrap();
        let spec = GlueSpec {
            parts: vec![
                GluePart {
                    graph: fig4.clone(),
                    anchor: 1, // v2
                },
                GluePart {
                    graph: fig4,
                    anchor: 2, // v3
                },
            ],
        };
        assert_eq!(glue_dim_formula(&spec, &cfg()).unwrap(), 2);
        let w = glue(&spec, &cfg()).unwrap();
        assert_eq!(w.graph.n(), 12);
        assert_eq!(w.graph.edge_count(), 19);
        assert!(w.graph.has_edge(w.anchors[0], w.anchors[1]));
        let a = analyze(&w.graph, &cfg()).unwrap();
        assert_eq!(a.dim(), 2);
        // v5 of copy one, v6 of copy two
        assert_eq!(a.bases(), &[vec![4, 11]]);
        assert_eq!(w.graph.label(4), Some("v5^1"));
        assert_eq!(w.graph.label(11), Some("v6^2"));
    }

    #[test]
    fn glue_rejects_bad_parts() {
        let fig4 = named_graph("fig4").unwrap();
        let path_part = GluePart {
            graph: path_graph(4),
            anchor: 0,
        };
        let ok_part = GluePart {
            graph: fig4.clone(),
            anchor: 1,
        };
        let spec = GlueSpec {
            parts: vec![ok_part.clone(), path_part],
        };
        assert!(matches!(
            glue(&spec, &cfg()),
            Err(ConstructError::PartIsPath(1))
        ));

        // v1 (vertex 0) is void in fig4
        let void_anchor = GluePart {
            graph: fig4.clone(),
            anchor: 0,
        };
        let spec = GlueSpec {
            parts: vec![void_anchor, ok_part.clone()],
        };
        assert!(matches!(
            glue(&spec, &cfg()),
            Err(ConstructError::AnchorIsVoid { part: 0, anchor: 0 })
        ));

        let disconnected = GluePart {
            graph: Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap(),
            anchor: 0,
        };
        let spec = GlueSpec {
            parts: vec![ok_part.clone(), disconnected],
        };
        assert!(matches!(
            glue(&spec, &cfg()),
            Err(ConstructError::PartDisconnected(1))
        ));

        let spec = GlueSpec {
            parts: vec![ok_part],
        };
        assert!(matches!(
            glue(&spec, &cfg()),
            Err(ConstructError::TooFewParts)
        ));
    }

    #[test]
    fn pattern_p5_plus_one_isolated_matches_the_dense_extremal_graph() {
        let pattern = ComplementPattern::new(vec![PatternPiece::P5, PatternPiece::Isolated(1)]);
        let g = from_complement_pattern(&pattern).unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 11));
        assert!(g.is_connected());
        assert_eq!(complement_pattern_of(&g).unwrap(), pattern);
    }

    #[test]
    fn pattern_rejects_disconnected_and_tiny() {
        assert!(matches!(
            from_complement_pattern(&ComplementPattern::new(vec![PatternPiece::K3])),
            Err(ConstructError::ResultDisconnected)
        ));
        assert!(matches!(
            from_complement_pattern(&ComplementPattern::new(vec![PatternPiece::Isolated(1)])),
            Err(ConstructError::PatternTooSmall)
        ));
        // a lone isolated block is a complete graph, which is fine
        let g = from_complement_pattern(&ComplementPattern::new(vec![PatternPiece::Isolated(4)]))
            .unwrap();
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn piece_recognizers_roundtrip() {
        let pieces = [
            PatternPiece::K2,
            PatternPiece::K3,
            PatternPiece::P4,
            PatternPiece::P5,
            PatternPiece::C4,
            PatternPiece::Star(3),
            PatternPiece::Star(4),
            PatternPiece::Star(6),
            PatternPiece::SpecialG,
            PatternPiece::SpecialJ,
            PatternPiece::H7,
        ];
        for p in pieces {
            assert_eq!(recognize_piece(&p.build()), Some(p), "{p:?}");
        }
        // near-misses must not be recognized as H7
        let mut spider = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 6), (0, 7)];
        let g = Graph::from_edge_list(8, &spider.clone()).unwrap();
        assert_eq!(recognize_piece(&g), None); // legs {5,1,1}
        spider.pop();
        spider.push((5, 6));
        let g = Graph::from_edge_list(8, &spider).unwrap();
        assert_eq!(recognize_piece(&g), None); // legs {6,1,1} rearranged
    }

    #[test]
    fn unicyclic_invariants_of_fig2a() {
        let g = named_graph("fig2a").unwrap();
        let inv = unicyclic_invariants(&g).unwrap();
        assert_eq!(inv.thread_surplus, 2);
        assert_eq!(inv.branched_cycle_vertices, 1);
        assert!(!inv.type_one);
        assert_eq!(inv.dim_range(), (3, 4));
        assert_eq!(inv.cycle.len(), 6);
        let dim = analyze(&g, &cfg()).unwrap().dim();
        assert_eq!(dim, 3);
    }

    #[test]
    fn unicyclic_invariants_of_bare_cycle_and_fig1b() {
        let inv = unicyclic_invariants(&cycle_graph(6)).unwrap();
        assert_eq!(
            (
                inv.thread_surplus,
                inv.branched_cycle_vertices,
                inv.type_one
            ),
            (0, 0, true)
        );
        assert_eq!(inv.dim_range(), (2, 3));
        assert_eq!(inv.cycle.len(), 6);

        let inv = unicyclic_invariants(&named_graph("fig1b").unwrap()).unwrap();
        assert_eq!((inv.thread_surplus, inv.branched_cycle_vertices), (0, 0));
        assert!(inv.type_one);
        assert_eq!(inv.dim_range(), (2, 3));
    }

    #[test]
    fn unicyclic_invariants_reject_other_graphs() {
        assert!(matches!(
            unicyclic_invariants(&path_graph(5)),
            Err(ConstructError::NotUnicyclic)
        ));
        assert!(matches!(
            unicyclic_invariants(&complete_graph(5)),
            Err(ConstructError::NotUnicyclic)
        ));
    }
}
