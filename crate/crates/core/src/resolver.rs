//! The exact engine: resolving-set verification, metric dimension via a
//! pruned branch-and-bound over the pair-distinguishing set-cover
//! formulation, enumeration of all metric bases, and per-vertex
//! classification (forced / void / flexible).
//!
//! Pair-cover masks are stored as fixed-width bit vectors over pair
//! indices, so `is_resolving` is a word-parallel OR/compare. The search
//! kernel additionally requires `n <= 64` so candidate vertex sets fit in
//! one machine word; `PairSystem` itself has no such limit.

use crate::bits::Bits;
use crate::graph::{DistanceMatrix, Graph, GraphError, TwinClasses};
use std::collections::BTreeSet;
use std::time::{Duration, Instant};
use thiserror::Error;

/// Vertex count limit for the branch-and-bound kernel.
pub const SEARCH_VERTEX_LIMIT: usize = 64;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ResolverError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("analysis needs at least two vertices (no convention fixed for a single vertex)")]
    TooSmall,
    #[error("graph on {n} vertices exceeds the exact-search limit of {SEARCH_VERTEX_LIMIT}")]
    TooLarge { n: usize },
    #[error(
        "search budget exceeded after {nodes} nodes / {elapsed_ms} ms \
         (best bounds: {lower_bound} <= dim <= {})",
        upper_bound.map_or("?".to_string(), |u| u.to_string())
    )]
    BudgetExceeded {
        nodes: u64,
        elapsed_ms: u64,
        lower_bound: usize,
        upper_bound: Option<usize>,
    },
    #[error("classification requires a nonempty basis list")]
    EmptyBasisList,
    #[error("replaced element {0} is not in the set")]
    ReplacedElementMissing(usize),
}

/// Node/time budget for the exact search. Partial results are never
/// returned: exceeding the budget is an error carrying the bounds found.
#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    pub max_nodes: u64,
    pub time_limit: Duration,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_nodes: 100_000_000,
            time_limit: Duration::from_secs(60),
        }
    }
}

/// The set-cover view of resolving: one item per unordered vertex pair, one
/// candidate set per vertex `w` holding the pairs `{x,y}` with
/// `d(w,x) != d(w,y)`.
#[derive(Clone, Debug)]
pub struct PairSystem {
    n: usize,
    pairs: Vec<(usize, usize)>,
    masks: Vec<Bits>,
}

impl PairSystem {
    /// Builds the cover masks from a distance matrix.
    pub fn new(dm: &DistanceMatrix) -> PairSystem {
        let n = dm.n();
        let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
        for x in 0..n {
            for y in x + 1..n {
                pairs.push((x, y));
            }
        }
        let masks = (0..n)
            .map(|w| {
                let mut m = Bits::new(pairs.len());
                for (i, &(x, y)) in pairs.iter().enumerate() {
                    if dm.get(w, x) != dm.get(w, y) {
                        m.set(i);
                    }
                }
                m
            })
            .collect();
        PairSystem { n, pairs, masks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn pair(&self, idx: usize) -> (usize, usize) {
        self.pairs[idx]
    }

    /// Mask of pairs distinguished by vertex `w`.
    pub fn vertex_mask(&self, w: usize) -> &Bits {
        &self.masks[w]
    }

    /// True iff the union of the cover masks of `r` is all pairs.
    pub fn is_resolving(&self, r: &[usize]) -> bool {
        let mut acc = Bits::new(self.pairs.len());
        for &w in r {
            acc.or_assign(&self.masks[w]);
        }
        acc.all_ones()
    }

    /// The pairs no element of `r` distinguishes, in lexicographic order.
    pub fn unresolved_pairs(&self, r: &[usize]) -> Vec<(usize, usize)> {
        let mut acc = Bits::new(self.pairs.len());
        for &w in r {
            acc.or_assign(&self.masks[w]);
        }
        acc.iter_zeros().map(|i| self.pairs[i]).collect()
    }
}

/// Sum of `|T| - 1` over non-singleton twin classes: a lower bound on the
/// size of every resolving set, since each class can spare at most one
/// member.
pub fn twin_lower_bound(tc: &TwinClasses) -> usize {
    tc.non_singleton().map(|c| c.vertices.len() - 1).sum()
}

/// `R[old <- new] = (R \ {old}) | {new}` with plain set semantics, so the
/// result shrinks when `new` is already present.
pub fn replace(
    r: &BTreeSet<usize>,
    old: usize,
    new: usize,
) -> Result<BTreeSet<usize>, ResolverError> {
    if !r.contains(&old) {
        return Err(ResolverError::ReplacedElementMissing(old));
    }
    let mut out = r.clone();
    out.remove(&old);
    out.insert(new);
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VertexClass {
    /// In every metric basis.
    BasisForced,
    /// In no metric basis.
    Void,
    /// In some metric bases but not all.
    Flexible,
}

/// Metric dimension, the complete basis list, and the vertex classification.
#[derive(Clone, Debug)]
pub struct ResolvingAnalysis {
    dim: usize,
    bases: Vec<Vec<usize>>,
    classification: Vec<VertexClass>,
}

impl ResolvingAnalysis {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// All metric bases, each sorted, in lexicographic order.
    pub fn bases(&self) -> &[Vec<usize>] {
        &self.bases
    }

    pub fn classification(&self) -> &[VertexClass] {
        &self.classification
    }

    pub fn class_of(&self, v: usize) -> VertexClass {
        self.classification[v]
    }

    pub fn basis_forced(&self) -> Vec<usize> {
        self.of_class(VertexClass::BasisForced)
    }

    pub fn void_vertices(&self) -> Vec<usize> {
        self.of_class(VertexClass::Void)
    }

    pub fn flexible_vertices(&self) -> Vec<usize> {
        self.of_class(VertexClass::Flexible)
    }

    /// Number of basis forced vertices (`k` in the bound checks).
    pub fn forced_count(&self) -> usize {
        self.basis_forced().len()
    }

    fn of_class(&self, c: VertexClass) -> Vec<usize> {
        self.classification
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == c)
            .map(|(v, _)| v)
            .collect()
    }
}

/// Intersection of all bases -> forced, complement of their union -> void,
/// the rest flexible.
pub fn classify_vertices(
    bases: &[Vec<usize>],
    n: usize,
) -> Result<Vec<VertexClass>, ResolverError> {
    if bases.is_empty() {
        return Err(ResolverError::EmptyBasisList);
    }
    let mut in_all = vec![true; n];
    let mut in_some = vec![false; n];
    for basis in bases {
        let mut member = vec![false; n];
        for &v in basis {
            member[v] = true;
            in_some[v] = true;
        }
        for v in 0..n {
            in_all[v] &= member[v];
        }
    }
    Ok((0..n)
        .map(|v| {
            if in_all[v] {
                VertexClass::BasisForced
            } else if in_some[v] {
                VertexClass::Flexible
            } else {
                VertexClass::Void
            }
        })
        .collect())
}

/// Exact metric dimension by branch-and-bound over the pair cover.
pub fn metric_dimension(
    ps: &PairSystem,
    tc: &TwinClasses,
    cfg: &SearchConfig,
) -> Result<usize, ResolverError> {
    let mut ctx = SearchCtx::new(ps, tc, cfg)?;
    ctx.minimum()
}

/// Every resolving set of cardinality `dim`, in lexicographic order. `dim`
/// must be the exact metric dimension.
pub fn enumerate_metric_bases(
    ps: &PairSystem,
    tc: &TwinClasses,
    dim: usize,
    cfg: &SearchConfig,
) -> Result<Vec<Vec<usize>>, ResolverError> {
    let mut ctx = SearchCtx::new(ps, tc, cfg)?;
    ctx.enumerate(dim)
}

/// Full pipeline: distances, pair system, twins, dimension, basis
/// enumeration, classification.
pub fn analyze(g: &Graph, cfg: &SearchConfig) -> Result<ResolvingAnalysis, ResolverError> {
    if g.n() < 2 {
        return Err(ResolverError::TooSmall);
    }
    let dm = g.distance_matrix()?;
    let ps = PairSystem::new(&dm);
    let tc = g.twin_classes();
    let mut ctx = SearchCtx::new(&ps, &tc, cfg)?;
    let dim = ctx.minimum()?;
    let bases = ctx.enumerate(dim)?;
    let classification = classify_vertices(&bases, g.n())?;
    Ok(ResolvingAnalysis {
        dim,
        bases,
        classification,
    })
}

// ---------------------------------------------------------------------------
// Search kernel
// ---------------------------------------------------------------------------

struct SearchCtx<'a> {
    ps: &'a PairSystem,
    /// All-vertices mask (low n bits).
    full: u64,
    /// Per pair: mask of vertices distinguishing it.
    coverers: Vec<u64>,
    /// Per non-singleton twin class: (member mask, required member count).
    twins: Vec<(u64, u32)>,
    max_nodes: u64,
    deadline: Instant,
    nodes: u64,
    start: Instant,
    /// Scratch buffer of (coverer count, pair index) for branching/bounds.
    scratch: Vec<(u32, u32)>,
}

enum Step {
    Solution,
    Infeasible,
    Branch { lb: u32, pair: usize },
}

impl<'a> SearchCtx<'a> {
    fn new(
        ps: &'a PairSystem,
        tc: &TwinClasses,
        cfg: &SearchConfig,
    ) -> Result<Self, ResolverError> {
        let n = ps.n();
        if n > SEARCH_VERTEX_LIMIT {
            return Err(ResolverError::TooLarge { n });
        }
        let mut coverers = vec![0u64; ps.pair_count()];
        for w in 0..n {
            for i in ps.vertex_mask(w).iter_ones() {
                coverers[i] |= 1 << w;
            }
        }
        let twins = tc
            .non_singleton()
            .map(|c| {
                let mask = c.vertices.iter().fold(0u64, |m, &v| m | 1 << v);
                (mask, (c.vertices.len() - 1) as u32)
            })
            .collect();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let start = Instant::now();
        Ok(SearchCtx {
            ps,
            full,
            coverers,
            twins,
            max_nodes: cfg.max_nodes,
            deadline: start + cfg.time_limit,
            nodes: 0,
            start,
            scratch: Vec::new(),
        })
    }

    fn budget_error(&self, lower: usize, upper: Option<usize>) -> ResolverError {
        ResolverError::BudgetExceeded {
            nodes: self.nodes,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
            lower_bound: lower,
            upper_bound: upper,
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return false;
        }
        if self.nodes.is_multiple_of(8192) && Instant::now() > self.deadline {
            return false;
        }
        true
    }

    /// Greedy cover: always a valid resolving set, used as the incumbent.
    fn greedy(&self) -> Vec<usize> {
        let mut uncovered = Bits::new(self.ps.pair_count());
        for i in 0..self.ps.pair_count() {
            uncovered.set(i);
        }
        let mut out = Vec::new();
        while !uncovered.is_empty() {
            let w = (0..self.ps.n())
                .max_by_key(|&w| (self.ps.vertex_mask(w).count_and(&uncovered), usize::MAX - w))
                .unwrap();
            out.push(w);
            uncovered.clear_assign(self.ps.vertex_mask(w));
        }
        out
    }

    /// Computes the lower bound and the fail-first branching pair.
    ///
    /// The bound is the max of three estimates: outstanding twin-class
    /// demand, a greedy packing of uncovered pairs with pairwise-disjoint
    /// coverer sets, and `ceil(uncovered / best single-vertex coverage)`.
    fn step(&mut self, chosen: u64, chosen_cnt: u32, forbidden: u64, uncovered: &Bits) -> Step {
        if uncovered.is_empty() {
            return Step::Solution;
        }
        let allowed = self.full & !(chosen | forbidden);

        let mut lb_twin = 0u32;
        for &(mask, need) in &self.twins {
            let have = (chosen & mask).count_ones();
            if have < need {
                let missing = need - have;
                if (allowed & mask).count_ones() < missing {
                    return Step::Infeasible;
                }
                lb_twin += missing;
            }
        }

        self.scratch.clear();
        let mut branch: Option<(u32, u32)> = None;
        for i in uncovered.iter_ones() {
            let cnt = (self.coverers[i] & allowed).count_ones();
            if cnt == 0 {
                return Step::Infeasible;
            }
            self.scratch.push((cnt, i as u32));
            if branch.is_none_or(|b| (cnt, i as u32) < b) {
                branch = Some((cnt, i as u32));
            }
        }
        self.scratch.sort_unstable();
        let mut packed = 0u32;
        let mut packed_union = 0u64;
        for &(_, i) in self.scratch.iter() {
            let cov = self.coverers[i as usize] & allowed;
            if cov & packed_union == 0 {
                packed += 1;
                packed_union |= cov;
            }
        }

        let uncovered_cnt = uncovered.count_ones();
        let mut best_cov = 0usize;
        let mut w_bits = allowed;
        while w_bits != 0 {
            let w = w_bits.trailing_zeros() as usize;
            w_bits &= w_bits - 1;
            best_cov = best_cov.max(self.ps.vertex_mask(w).count_and(uncovered));
        }
        if best_cov == 0 {
            return Step::Infeasible;
        }
        let lb_ceil = uncovered_cnt.div_ceil(best_cov) as u32;

        let (_, pair) = branch.unwrap();
        let _ = chosen_cnt;
        Step::Branch {
            lb: lb_twin.max(packed).max(lb_ceil),
            pair: pair as usize,
        }
    }

    fn root_lower_bound(&mut self) -> usize {
        let all = {
            let mut b = Bits::new(self.ps.pair_count());
            for i in 0..self.ps.pair_count() {
                b.set(i);
            }
            b
        };
        match self.step(0, 0, 0, &all) {
            Step::Branch { lb, .. } => lb as usize,
            Step::Solution => 0,
            Step::Infeasible => 0,
        }
    }

    fn minimum(&mut self) -> Result<usize, ResolverError> {
        if self.ps.pair_count() == 0 {
            return Ok(0);
        }
        let incumbent = self.greedy();
        let root_lb = self.root_lower_bound();
        let mut best = incumbent.len() as u32;
        if root_lb as u32 == best {
            return Ok(best as usize);
        }
        let mut uncovered = Bits::new(self.ps.pair_count());
        for i in 0..self.ps.pair_count() {
            uncovered.set(i);
        }
        if !self.dfs_min(0, 0, 0, &uncovered, &mut best) {
            return Err(self.budget_error(root_lb, Some(best as usize)));
        }
        Ok(best as usize)
    }

    /// Returns false when the budget runs out.
    fn dfs_min(
        &mut self,
        chosen: u64,
        cnt: u32,
        mut forbidden: u64,
        uncovered: &Bits,
        best: &mut u32,
    ) -> bool {
        if !self.tick() {
            return false;
        }
        let pair = match self.step(chosen, cnt, forbidden, uncovered) {
            Step::Solution => {
                *best = (*best).min(cnt);
                return true;
            }
            Step::Infeasible => return true,
            Step::Branch { lb, pair } => {
                if cnt + lb >= *best {
                    return true;
                }
                pair
            }
        };
        let mut candidates = self.coverers[pair] & !(chosen | forbidden);
        while candidates != 0 {
            let w = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            let mut next_uncovered = uncovered.clone();
            next_uncovered.clear_assign(self.ps.vertex_mask(w));
            if !self.dfs_min(chosen | 1 << w, cnt + 1, forbidden, &next_uncovered, best) {
                return false;
            }
            forbidden |= 1 << w;
        }
        true
    }

    fn enumerate(&mut self, dim: usize) -> Result<Vec<Vec<usize>>, ResolverError> {
        if self.ps.pair_count() == 0 {
            return Ok(vec![Vec::new()]);
        }
        let mut uncovered = Bits::new(self.ps.pair_count());
        for i in 0..self.ps.pair_count() {
            uncovered.set(i);
        }
        let mut out: Vec<u64> = Vec::new();
        if !self.dfs_enum(0, 0, 0, &uncovered, dim as u32, &mut out) {
            return Err(self.budget_error(dim, Some(dim)));
        }
        let mut bases: Vec<Vec<usize>> = out
            .into_iter()
            .map(|set| {
                let mut vs = Vec::with_capacity(set.count_ones() as usize);
                let mut bits = set;
                while bits != 0 {
                    vs.push(bits.trailing_zeros() as usize);
                    bits &= bits - 1;
                }
                vs
            })
            .collect();
        bases.sort();
        debug_assert!(bases.windows(2).all(|w| w[0] != w[1]));
        Ok(bases)
    }

    fn dfs_enum(
        &mut self,
        chosen: u64,
        cnt: u32,
        mut forbidden: u64,
        uncovered: &Bits,
        dim: u32,
        out: &mut Vec<u64>,
    ) -> bool {
        if !self.tick() {
            return false;
        }
        let pair = match self.step(chosen, cnt, forbidden, uncovered) {
            Step::Solution => {
                // A complete cover below the true dimension would contradict
                // minimality; the branching only ever adds useful vertices.
                debug_assert_eq!(cnt, dim);
                if cnt == dim {
                    out.push(chosen);
                }
                return true;
            }
            Step::Infeasible => return true,
            Step::Branch { lb, pair } => {
                if cnt + lb > dim {
                    return true;
                }
                pair
            }
        };
        let mut candidates = self.coverers[pair] & !(chosen | forbidden);
        while candidates != 0 {
            let w = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            let mut next_uncovered = uncovered.clone();
            next_uncovered.clear_assign(self.ps.vertex_mask(w));
            if !self.dfs_enum(
                chosen | 1 << w,
                cnt + 1,
                forbidden,
                &next_uncovered,
                dim,
                out,
            ) {
                return false;
            }
            forbidden |= 1 << w;
        }
        true
    }
}
