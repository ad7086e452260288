//! Immutable simple-graph model and the structural primitives the rest of
//! the crate builds on: distances, complement, union, cut-vertices,
//! pendants, twins, path/unicyclic tests.
//!
//! Vertices are dense `0..n` ids. Display names ("v3", "T_2", "w", ...)
//! live in an optional label map and never influence the algorithms.

use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge endpoint {vertex} out of range for graph on {n} vertices")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("operation requires a connected graph")]
    Disconnected,
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("disjoint union of an empty graph list")]
    EmptyUnion,
}

/// Undirected simple graph with dense vertex ids `0..n`.
///
/// Invariants (enforced by every constructor): the adjacency relation is
/// symmetric and irreflexive, neighbour lists are sorted and duplicate-free,
/// and labels, when present, are unique.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    labels: BTreeMap<usize, String>,
}

impl Graph {
    /// Builds a graph from an edge list. Edges are deduplicated; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::EndpointOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::EndpointOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph {
            n,
            adj,
            labels: BTreeMap::new(),
        })
    }

    /// Attaches display labels. Labels must be unique and name existing vertices.
    pub fn with_labels<I, S>(mut self, labels: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, S)>,
        S: Into<String>,
    {
        let mut map = BTreeMap::new();
        let mut seen = std::collections::BTreeSet::new();
        for (v, s) in labels {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
            let s: String = s.into();
            if !seen.insert(s.clone()) {
                return Err(GraphError::DuplicateLabel(s));
            }
            map.insert(v, s);
        }
        self.labels = map;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    /// Finds the vertex carrying a given label.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels
            .iter()
            .find(|(_, s)| s.as_str() == label)
            .map(|(&v, _)| v)
    }

    /// The complement graph: `u ~ v` in the output iff `u != v` and `u !~ v`
    /// here. Labels carry over unchanged.
    pub fn complement(&self) -> Graph {
        let mut adj = vec![Vec::new(); self.n];
        for (u, row) in adj.iter_mut().enumerate() {
            for v in 0..self.n {
                if u != v && !self.has_edge(u, v) {
                    row.push(v);
                }
            }
        }
        Graph {
            n: self.n,
            adj,
            labels: self.labels.clone(),
        }
    }

    /// Disjoint union. Part `i`'s vertices are shifted by the returned
    /// offset `offsets[i]`. Labels are kept; if the same label occurs in
    /// several parts, each copy is suffixed with `^<part index>` (1-based).
    pub fn disjoint_union(parts: &[Graph]) -> Result<(Graph, Vec<usize>), GraphError> {
        if parts.is_empty() {
            return Err(GraphError::EmptyUnion);
        }
        let mut offsets = Vec::with_capacity(parts.len());
        let mut total = 0;
        for p in parts {
            offsets.push(total);
            total += p.n;
        }
        let mut adj = vec![Vec::new(); total];
        for (p, &off) in parts.iter().zip(&offsets) {
            for (u, list) in p.adj.iter().enumerate() {
                adj[off + u] = list.iter().map(|&v| off + v).collect();
            }
        }
        let mut label_counts: BTreeMap<&str, usize> = BTreeMap::new();
        for p in parts {
            for s in p.labels.values() {
                *label_counts.entry(s).or_default() += 1;
            }
        }
        let mut labels = BTreeMap::new();
        let mut used = std::collections::BTreeSet::new();
        for (k, (p, &off)) in parts.iter().zip(&offsets).enumerate() {
            for (&v, s) in &p.labels {
                let mut name = if label_counts[s.as_str()] > 1 {
                    format!("{}^{}", s, k + 1)
                } else {
                    s.clone()
                };
                // decorated names can still clash with labels a part brought
                // in from an earlier union; prime marks settle those
                while !used.insert(name.clone()) {
                    name.push('\'');
                }
                labels.insert(off + v, name);
            }
        }
        Ok((
            Graph {
                n: total,
                adj,
                labels,
            },
            offsets,
        ))
    }

    /// BFS distances from every vertex. Fails on disconnected input.
    pub fn distance_matrix(&self) -> Result<DistanceMatrix, GraphError> {
        let n = self.n;
        let mut d = vec![u32::MAX; n * n];
        let mut queue = std::collections::VecDeque::new();
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            row[s] = 0;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &v in &self.adj[u] {
                    if row[v] == u32::MAX {
                        row[v] = du + 1;
                        queue.push_back(v);
                    }
                }
            }
            if row.contains(&u32::MAX) {
                return Err(GraphError::Disconnected);
            }
        }
        Ok(DistanceMatrix { n, d })
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.connected_components().len() == 1
    }

    /// Cut-vertices of a connected graph, via DFS low-links.
    pub fn cut_vertices(&self) -> Result<Vec<usize>, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut parent = vec![usize::MAX; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;
        // Iterative DFS; (vertex, next neighbour index) frames.
        let mut stack: Vec<(usize, usize)> = Vec::new();
        if n > 0 {
            disc[0] = timer;
            low[0] = timer;
            timer += 1;
            stack.push((0, 0));
        }
        let mut root_children = 0;
        while let Some(&mut (u, ref mut idx)) = stack.last_mut() {
            if *idx < self.adj[u].len() {
                let v = self.adj[u][*idx];
                *idx += 1;
                if disc[v] == usize::MAX {
                    parent[v] = u;
                    if u == 0 {
                        root_children += 1;
                    }
                    disc[v] = timer;
                    low[v] = timer;
                    timer += 1;
                    stack.push((v, 0));
                } else if v != parent[u] {
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if p != 0 && low[u] >= disc[p] {
                        is_cut[p] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[0] = true;
        }
        Ok((0..n).filter(|&v| is_cut[v]).collect())
    }

    /// Degree-1 vertices.
    pub fn pendants(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// True iff the graph is a path P_n (single vertex counts).
    pub fn is_path(&self) -> Result<bool, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(self.edge_count() + 1 == self.n && (0..self.n).all(|v| self.degree(v) <= 2))
    }

    /// True iff the graph is connected with exactly one cycle, i.e. the
    /// number of edges equals the number of vertices.
    pub fn is_unicyclic(&self) -> Result<bool, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(self.edge_count() == self.n)
    }

    /// Removes a vertex. Returns the new graph and the old-id -> new-id map
    /// (`None` for the removed vertex). Labels are remapped.
    pub fn remove_vertex(&self, v: usize) -> Result<(Graph, Vec<Option<usize>>), GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        let (g, map) = self.induced_subgraph(&keep)?;
        let mut old_to_new = vec![None; self.n];
        for (new, &old) in map.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        Ok((g, old_to_new))
    }

    /// Induced subgraph on a vertex set. Ids are compacted; the returned map
    /// sends new ids to the original ones.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let mut picked: Vec<usize> = s.to_vec();
        picked.sort_unstable();
        picked.dedup();
        if let Some(&bad) = picked.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange {
                vertex: bad,
                n: self.n,
            });
        }
        let mut old_to_new = vec![usize::MAX; self.n];
        for (new, &old) in picked.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut adj = vec![Vec::new(); picked.len()];
        for (new, &old) in picked.iter().enumerate() {
            adj[new] = self.adj[old]
                .iter()
                .filter(|&&w| old_to_new[w] != usize::MAX)
                .map(|&w| old_to_new[w])
                .collect();
        }
        let labels = self
            .labels
            .iter()
            .filter(|(&v, _)| old_to_new[v] != usize::MAX)
            .map(|(&v, s)| (old_to_new[v], s.clone()))
            .collect();
        Ok((
            Graph {
                n: picked.len(),
                adj,
                labels,
            },
            picked,
        ))
    }

    /// Twin partition: maximal classes of pairwise-equal closed
    /// neighbourhoods (true twins) or open neighbourhoods (false twins),
    /// with everything else a singleton.
    pub fn twin_classes(&self) -> TwinClasses {
        let mut assigned = vec![false; self.n];
        let mut classes = Vec::new();

        // Group by closed-neighbourhood fingerprint.
        let mut closed: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (v, nbrs) in self.adj.iter().enumerate() {
            let mut key = nbrs.clone();
            key.push(v);
            key.sort_unstable();
            closed.entry(key).or_default().push(v);
        }
        for (_, vs) in closed {
            if vs.len() >= 2 {
                for &v in &vs {
                    assigned[v] = true;
                }
                classes.push(TwinClass {
                    kind: TwinKind::True,
                    vertices: vs,
                });
            }
        }

        // A vertex cannot sit in both a non-trivial true-twin class and a
        // non-trivial false-twin class, so the remaining groups are disjoint
        // from the ones above.
        let mut open: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (v, nbrs) in self.adj.iter().enumerate() {
            if !assigned[v] {
                open.entry(nbrs.clone()).or_default().push(v);
            }
        }
        for (_, vs) in open {
            if vs.len() >= 2 {
                for &v in &vs {
                    assigned[v] = true;
                }
                classes.push(TwinClass {
                    kind: TwinKind::False,
                    vertices: vs,
                });
            }
        }
        for (v, done) in assigned.iter().enumerate() {
            if !done {
                classes.push(TwinClass {
                    kind: TwinKind::Singleton,
                    vertices: vec![v],
                });
            }
        }
        classes.sort_by_key(|c| c.vertices[0]);
        TwinClasses { n: self.n, classes }
    }
}

/// All-pairs shortest-path distances of a connected graph.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> usize {
        self.d[u * self.n + v] as usize
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TwinKind {
    /// Pairwise equal closed neighbourhoods `N[u] = N[v]`.
    True,
    /// Pairwise equal open neighbourhoods N(u) = N(v).
    False,
    Singleton,
}

#[derive(Clone, Debug)]
pub struct TwinClass {
    pub kind: TwinKind,
    pub vertices: Vec<usize>,
}

/// Partition of the vertex set into twin classes.
#[derive(Clone, Debug)]
pub struct TwinClasses {
    n: usize,
    classes: Vec<TwinClass>,
}

impl TwinClasses {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[TwinClass] {
        &self.classes
    }

    pub fn non_singleton(&self) -> impl Iterator<Item = &TwinClass> {
        self.classes.iter().filter(|c| c.vertices.len() >= 2)
    }
}

/// Path on `n` vertices, 0-1-2-...
pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Cycle on `n >= 3` vertices, 0-1-...-0.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3);
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Complete graph on `n` vertices.
pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Star K_{1,n}: centre 0, leaves 1..=n.
pub fn star_graph(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edge_list(leaves + 1, &edges).unwrap()
}

/// Graph with no edges on `n` vertices.
pub fn empty_graph(n: usize) -> Graph {
    Graph::from_edge_list(n, &[]).unwrap()
}
