//! The edge-coloured uniqueness diagnostics for a reference set `R`.
//!
//! For a vertex `r` in `R`, the colour-`r` edges join exactly the vertex
//! pairs that `r` alone distinguishes among `R`. The resulting coloured
//! graph obeys strong structural laws when `R` resolves the graph (colours
//! never appear once on a cycle, same-coloured adjacent edges close into
//! monochromatic cliques, and forced vertices force extra edges of their
//! colour); this module builds the coloured graph and checks each law,
//! returning concrete witnesses on violation.

use crate::graph::DistanceMatrix;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColourError {
    #[error("operation requires a resolving reference set; {0} pairs are unresolved")]
    NotResolving(usize),
    #[error("colour {colour} appears exactly once in the cycle {cycle:?}")]
    SingleColourInCycle { colour: usize, cycle: Vec<usize> },
    #[error("edges {{{x},{y}}} and {{{x},{z}}} share colour {colour} but {{{y},{z}}} does not")]
    MissingClosingEdge {
        colour: usize,
        x: usize,
        y: usize,
        z: usize,
    },
    #[error("forced vertex {vertex} has {count} edge(s) of its colour, expected at least 2")]
    ForcedColourTooRare { vertex: usize, count: usize },
    #[error(
        "forced vertex {vertex} has no edge of its colour with both endpoints outside the set"
    )]
    ForcedColourAllInside { vertex: usize },
    #[error("colour {colour} component {component:?} misses the edge {{{x},{y}}}")]
    NotAClique {
        colour: usize,
        component: Vec<usize>,
        x: usize,
        y: usize,
    },
    #[error("edge {{{x},{y}}} joins two members of the reference set")]
    ReferenceNotIndependent { x: usize, y: usize },
    #[error("edge {{{x},{y}}} touches reference vertex {r} but carries colour {colour}")]
    WrongIncidentColour {
        x: usize,
        y: usize,
        r: usize,
        colour: usize,
    },
    #[error("colour {0} appears on no edge")]
    UnusedColour(usize),
}

/// An edge of the coloured graph: the pair `{x, y}` (x < y) distinguished
/// only by `colour` within the reference set.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ColourEdge {
    pub x: usize,
    pub y: usize,
    pub colour: usize,
}

/// The coloured graph of a reference vertex set.
#[derive(Clone, Debug)]
pub struct ColourGraph {
    n: usize,
    reference: Vec<usize>,
    edges: Vec<ColourEdge>,
    unresolved: usize,
}

impl ColourGraph {
    /// Builds the coloured graph: for each vertex pair, an edge appears iff
    /// exactly one member of `r` separates the pair, carrying that member
    /// as its colour. Pairs nobody separates are recorded as unresolved.
    pub fn build(dm: &DistanceMatrix, r: &[usize]) -> ColourGraph {
        let n = dm.n();
        let mut reference: Vec<usize> = r.to_vec();
        reference.sort_unstable();
        reference.dedup();
        let mut edges = Vec::new();
        let mut unresolved = 0;
        for x in 0..n {
            for y in x + 1..n {
                let mut sole = None;
                let mut count = 0;
                for &w in &reference {
                    if dm.get(w, x) != dm.get(w, y) {
                        count += 1;
                        if count > 1 {
                            break;
                        }
                        sole = Some(w);
                    }
                }
                match (count, sole) {
                    (0, _) => unresolved += 1,
                    (1, Some(w)) => edges.push(ColourEdge { x, y, colour: w }),
                    _ => {}
                }
            }
        }
        ColourGraph {
            n,
            reference,
            edges,
            unresolved,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn reference(&self) -> &[usize] {
        &self.reference
    }

    pub fn edges(&self) -> &[ColourEdge] {
        &self.edges
    }

    /// Pairs not separated by any reference vertex (zero iff R resolves).
    pub fn unresolved_count(&self) -> usize {
        self.unresolved
    }

    pub fn is_reference_resolving(&self) -> bool {
        self.unresolved == 0
    }

    pub fn edges_of_colour(&self, colour: usize) -> Vec<ColourEdge> {
        self.edges
            .iter()
            .copied()
            .filter(|e| e.colour == colour)
            .collect()
    }

    fn require_resolving(&self) -> Result<(), ColourError> {
        if self.unresolved > 0 {
            Err(ColourError::NotResolving(self.unresolved))
        } else {
            Ok(())
        }
    }

    /// No colour may appear exactly once in any cycle. Checked exactly for
    /// all cycles at once: a violating cycle exists for colour `r` iff some
    /// colour-`r` edge has its endpoints connected by the other edges, so
    /// it suffices to look for such closures colour by colour.
    pub fn check_cycle_property(&self) -> Result<(), ColourError> {
        for &colour in &self.reference {
            // adjacency over the edges of all OTHER colours
            let mut adj = vec![Vec::new(); self.n];
            for e in &self.edges {
                if e.colour != colour {
                    adj[e.x].push(e.y);
                    adj[e.y].push(e.x);
                }
            }
            for e in &self.edges {
                if e.colour != colour {
                    continue;
                }
                if let Some(path) = bfs_path(&adj, e.x, e.y) {
                    return Err(ColourError::SingleColourInCycle {
                        colour,
                        cycle: path,
                    });
                }
            }
        }
        Ok(())
    }

    /// Same-coloured edges sharing an endpoint must close into a triangle
    /// of that colour. Requires a resolving reference set.
    pub fn check_transitivity(&self) -> Result<(), ColourError> {
        self.require_resolving()?;
        let lookup: BTreeMap<(usize, usize), usize> =
            self.edges.iter().map(|e| ((e.x, e.y), e.colour)).collect();
        let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.n];
        for e in &self.edges {
            incident[e.x].push((e.y, e.colour));
            incident[e.y].push((e.x, e.colour));
        }
        for (x, around) in incident.iter().enumerate() {
            for i in 0..around.len() {
                for j in i + 1..around.len() {
                    let (y, cy) = around[i];
                    let (z, cz) = around[j];
                    if cy != cz {
                        continue;
                    }
                    let key = (y.min(z), y.max(z));
                    if lookup.get(&key) != Some(&cy) {
                        return Err(ColourError::MissingClosingEdge {
                            colour: cy,
                            x,
                            y,
                            z,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// For every basis-forced vertex `b` of the underlying graph (which
    /// necessarily sits in `R` when `R` is a basis): at least two edges of
    /// colour `b`, at least one of them with both endpoints outside `R`.
    pub fn check_forced_colour_counts(&self, forced: &[usize]) -> Result<(), ColourError> {
        self.require_resolving()?;
        for &b in forced {
            let of_b: Vec<_> = self.edges_of_colour(b);
            if of_b.len() < 2 {
                return Err(ColourError::ForcedColourTooRare {
                    vertex: b,
                    count: of_b.len(),
                });
            }
            let outside = |v: usize| self.reference.binary_search(&v).is_err();
            if !of_b.iter().any(|e| outside(e.x) && outside(e.y)) {
                return Err(ColourError::ForcedColourAllInside { vertex: b });
            }
        }
        Ok(())
    }

    /// The components of one colour class, each verified to be a clique of
    /// that colour. Requires a resolving reference set.
    pub fn monochromatic_components(&self, colour: usize) -> Result<Vec<Vec<usize>>, ColourError> {
        self.require_resolving()?;
        let of_c = self.edges_of_colour(colour);
        let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for e in &of_c {
            adj.entry(e.x).or_default().push(e.y);
            adj.entry(e.y).or_default().push(e.x);
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut cliques = Vec::new();
        for &start in adj.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = vec![start];
            seen.insert(start);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &v in &adj[&u] {
                    if seen.insert(v) {
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            for i in 0..comp.len() {
                for j in i + 1..comp.len() {
                    let present = of_c.iter().any(|e| e.x == comp[i] && e.y == comp[j]);
                    if !present {
                        return Err(ColourError::NotAClique {
                            colour,
                            component: comp.clone(),
                            x: comp[i],
                            y: comp[j],
                        });
                    }
                }
            }
            cliques.push(comp);
        }
        Ok(cliques)
    }

    /// Baseline structure: the reference set is independent in the coloured
    /// graph, and any edge touching a reference vertex carries that
    /// vertex's own colour.
    pub fn check_reference_structure(&self) -> Result<(), ColourError> {
        for e in &self.edges {
            let x_in = self.reference.binary_search(&e.x).is_ok();
            let y_in = self.reference.binary_search(&e.y).is_ok();
            if x_in && y_in {
                return Err(ColourError::ReferenceNotIndependent { x: e.x, y: e.y });
            }
            if x_in && e.colour != e.x {
                return Err(ColourError::WrongIncidentColour {
                    x: e.x,
                    y: e.y,
                    r: e.x,
                    colour: e.colour,
                });
            }
            if y_in && e.colour != e.y {
                return Err(ColourError::WrongIncidentColour {
                    x: e.x,
                    y: e.y,
                    r: e.y,
                    colour: e.colour,
                });
            }
        }
        Ok(())
    }

    /// When `R` is a metric basis every colour must label at least one edge
    /// (otherwise the colour's vertex would be redundant).
    pub fn check_every_colour_used(&self) -> Result<(), ColourError> {
        self.require_resolving()?;
        for &r in &self.reference {
            if !self.edges.iter().any(|e| e.colour == r) {
                return Err(ColourError::UnusedColour(r));
            }
        }
        Ok(())
    }
}

/// Shortest path between two vertices over a plain adjacency list, as a
/// vertex sequence; `None` when disconnected.
fn bfs_path(adj: &[Vec<usize>], from: usize, to: usize) -> Option<Vec<usize>> {
    if from == to {
        return Some(vec![from]);
    }
    let mut prev = vec![usize::MAX; adj.len()];
    let mut queue = std::collections::VecDeque::new();
    prev[from] = from;
    queue.push_back(from);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if prev[v] == usize::MAX {
                prev[v] = u;
                if v == to {
                    let mut path = vec![to];
                    let mut cur = to;
                    while cur != from {
                        cur = prev[cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(v);
            }
        }
    }
    None
}
