//! Graph corpora for the verification suite: seeded random connected
//! graphs (edge-probability sampling with rejection), random trees and
//! unicyclic graphs, and exhaustive generation of all graphs on up to
//! seven vertices up to isomorphism by canonical augmentation.

use crate::graph::Graph;
use crate::rng::SplitMix64;

/// Index of pair (i, j), i < j, in the upper-triangle bit layout.
fn pair_bit(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Upper-triangle edge mask of a graph on at most 8 vertices.
pub fn mask_of(g: &Graph) -> u64 {
    let n = g.n();
    g.edges()
        .iter()
        .fold(0u64, |m, &(u, v)| m | 1 << pair_bit(n, u, v))
}

/// Canonical form usable as an isomorphism key for graphs on at most 8
/// vertices.
pub fn canonical_form(g: &Graph) -> u64 {
    canonical_mask(g.n(), mask_of(g))
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if mask >> pair_bit(n, i, j) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// One connected graph drawn by edge probability `num/den`, resampled
/// until connected.
pub fn random_connected_graph(n: usize, num: u64, den: u64, rng: &mut SplitMix64) -> Graph {
    assert!(n >= 1);
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.chance(num, den) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// Random tree: each vertex beyond the first attaches to a uniform earlier
/// vertex.
pub fn random_tree(n: usize, rng: &mut SplitMix64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.next_below(v as u64) as usize, v));
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Random unicyclic graph: a random tree plus one uniformly chosen
/// non-tree edge.
pub fn random_unicyclic(n: usize, rng: &mut SplitMix64) -> Graph {
    assert!(n >= 3);
    loop {
        let tree = random_tree(n, rng);
        let u = rng.next_below(n as u64) as usize;
        let v = rng.next_below(n as u64) as usize;
        if u != v && !tree.has_edge(u, v) {
            let mut edges = tree.edges();
            edges.push((u.min(v), u.max(v)));
            return Graph::from_edge_list(n, &edges).unwrap();
        }
    }
}

/// The seeded corpus used by the verification suite: `count` connected
/// graphs on `n` vertices with densities cycling over a fixed ladder, so
/// sparse and dense instances both appear.
pub fn seeded_corpus(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = SplitMix64::new(seed);
    let densities: [(u64, u64); 5] = [(3, 10), (4, 10), (5, 10), (6, 10), (7, 10)];
    (0..count)
        .map(|i| {
            let (num, den) = densities[i % densities.len()];
            random_connected_graph(n, num, den, &mut rng)
        })
        .collect()
}

/// Canonical form of the graph encoded by `mask`: the minimum edge mask
/// over all vertex orderings that sort degrees descending. Isomorphic
/// graphs and only those share the form.
pub fn canonical_mask(n: usize, mask: u64) -> u64 {
    debug_assert!(n <= 8);
    let mut deg = [0usize; 8];
    for i in 0..n {
        for j in i + 1..n {
            if mask >> pair_bit(n, i, j) & 1 == 1 {
                deg[i] += 1;
                deg[j] += 1;
            }
        }
    }
    let mut sorted_deg: Vec<usize> = deg[..n].to_vec();
    sorted_deg.sort_unstable_by(|a, b| b.cmp(a));

    // backtrack over assignments position -> vertex, restricted to vertices
    // whose degree equals the sorted target for that position
    let mut best = u64::MAX;
    let mut perm = [usize::MAX; 8]; // position -> original vertex
    let mut used = [false; 8];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        pos: usize,
        n: usize,
        mask: u64,
        deg: &[usize; 8],
        target: &[usize],
        perm: &mut [usize; 8],
        used: &mut [bool; 8],
        best: &mut u64,
    ) {
        if pos == n {
            let mut m = 0u64;
            for a in 0..n {
                for b in a + 1..n {
                    let (x, y) = (perm[a].min(perm[b]), perm[a].max(perm[b]));
                    if mask >> pair_bit(n, x, y) & 1 == 1 {
                        m |= 1 << pair_bit(n, a, b);
                    }
                }
            }
            if m < *best {
                *best = m;
            }
            return;
        }
        for v in 0..n {
            if !used[v] && deg[v] == target[pos] {
                used[v] = true;
                perm[pos] = v;
                rec(pos + 1, n, mask, deg, target, perm, used, best);
                used[v] = false;
            }
        }
    }
    rec(
        0,
        n,
        mask,
        &deg,
        &sorted_deg,
        &mut perm,
        &mut used,
        &mut best,
    );
    best
}

/// All graphs on exactly `n <= 7` vertices, one per isomorphism class, by
/// augmenting each smaller canonical graph with a new vertex in every
/// possible way.
pub fn all_graphs_upto_iso(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "exhaustive generation is capped at 7");
    let mut level: Vec<u64> = vec![0]; // the single 1-vertex graph
    for k in 2..=n {
        let mut next = std::collections::BTreeSet::new();
        for &mask in &level {
            // reindex the (k-1)-graph into k vertices; pair bits must be
            // recomputed because the row widths change
            let small = graph_from_mask(k - 1, mask);
            let base: u64 = small
                .edges()
                .iter()
                .fold(0, |m, &(u, v)| m | 1 << pair_bit(k, u, v));
            for nbrs in 0u64..(1 << (k - 1)) {
                let mut m = base;
                for v in 0..k - 1 {
                    if nbrs >> v & 1 == 1 {
                        m |= 1 << pair_bit(k, v, k - 1);
                    }
                }
                next.insert(canonical_mask(k, m));
            }
        }
        level = next.into_iter().collect();
    }
    level.into_iter().map(|m| graph_from_mask(n, m)).collect()
}

/// All connected graphs on exactly `n <= 7` vertices up to isomorphism.
pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs_upto_iso(n)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts_match_the_literature() {
        // numbers of graphs and of connected graphs up to isomorphism
        let expected_all = [1usize, 2, 4, 11, 34, 156, 1044];
        let expected_connected = [1usize, 1, 2, 6, 21, 112, 853];
        for n in 1..=6 {
            assert_eq!(all_graphs_upto_iso(n).len(), expected_all[n - 1], "n={n}");
            assert_eq!(
                all_connected_graphs(n).len(),
                expected_connected[n - 1],
                "n={n}"
            );
        }
    }

    #[test]
    fn seven_vertex_counts() {
        assert_eq!(all_graphs_upto_iso(7).len(), 1044);
        assert_eq!(all_connected_graphs(7).len(), 853);
    }

    #[test]
    fn canonical_mask_is_permutation_invariant() {
        let mut rng = SplitMix64::new(99);
        for _ in 0..200 {
            let n = 4 + (rng.next_u64() % 4) as usize;
            let g = random_connected_graph(n, 1, 2, &mut rng);
            let mask = mask_of(&g);
            // random relabelling
            let mut perm: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                let j = rng.next_below(i as u64 + 1) as usize;
                perm.swap(i, j);
            }
            let edges: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .map(|&(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v])))
                .collect();
            let h = Graph::from_edge_list(n, &edges).unwrap();
            assert_eq!(canonical_mask(n, mask), canonical_mask(n, mask_of(&h)));
        }
    }

    #[test]
    fn random_generators_have_the_promised_shape() {
        let mut rng = SplitMix64::new(5);
        for n in 3..10 {
            let t = random_tree(n, &mut rng);
            assert!(t.is_connected());
            assert_eq!(t.edge_count(), n - 1);
            let u = random_unicyclic(n, &mut rng);
            assert!(u.is_unicyclic().unwrap());
            let g = random_connected_graph(n, 1, 2, &mut rng);
            assert!(g.is_connected());
        }
    }

    #[test]
    fn seeded_corpus_is_reproducible() {
        let a = seeded_corpus(6, 10, 42);
        let b = seeded_corpus(6, 10, 42);
        assert_eq!(a.len(), 10);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x, y);
        }
    }
}
