//! The two-copy 3-SAT gadget graph and its resolving-set certificates.
//!
//! From a 3-CNF formula over `n` variables and `m` clauses the builder
//! produces a graph on `2(6n + 5m) + 1` vertices: two copies of a
//! variable/clause gadget construction, cross-wired clause contacts, and a
//! probe vertex `w` adjacent to every third clause contact. A satisfying
//! assignment yields a resolving set of size `2n + 2m` avoiding `w`; a set
//! of size `2n + 2m + 1` through `w` resolves unconditionally.

use crate::graph::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error("literal references variable {var} but the formula has {num_vars} variables")]
    VariableOutOfRange { var: usize, num_vars: usize },
    #[error("clause {0} repeats a variable; the gadget wiring needs three distinct variables")]
    MalformedClause(usize),
    #[error("assignment has {got} values for {expected} variables")]
    AssignmentLength { got: usize, expected: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A literal: variable index (0-based) plus polarity.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Lit {
    pub var: usize,
    pub positive: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Lit {
        Lit {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Lit {
        Lit {
            var,
            positive: false,
        }
    }
}

/// A 3-CNF formula: every clause holds exactly three literals.
#[derive(Clone, Debug)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<[Lit; 3]>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<[Lit; 3]>) -> Result<CnfFormula, ReductionError> {
        for clause in &clauses {
            for lit in clause {
                if lit.var >= num_vars {
                    return Err(ReductionError::VariableOutOfRange {
                        var: lit.var,
                        num_vars,
                    });
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[Lit; 3]] {
        &self.clauses
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|clause| clause.iter().any(|lit| assignment[lit.var] == lit.positive))
    }
}

/// Roles inside a variable gadget.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VarVertex {
    A1,
    A2,
    B1,
    B2,
    T,
    F,
}

#[derive(Clone, Copy, Debug)]
struct Layout {
    num_vars: usize,
    num_clauses: usize,
}

impl Layout {
    fn copy_offset(&self, copy: usize) -> usize {
        assert!(copy == 1 || copy == 2, "copy must be 1 or 2");
        (copy - 1) * (6 * self.num_vars + 5 * self.num_clauses)
    }

    fn var_vertex(&self, copy: usize, i: usize, role: VarVertex) -> usize {
        assert!(i < self.num_vars);
        let base = self.copy_offset(copy) + 6 * i;
        base + match role {
            VarVertex::A1 => 0,
            VarVertex::A2 => 1,
            VarVertex::B1 => 2,
            VarVertex::B2 => 3,
            VarVertex::T => 4,
            VarVertex::F => 5,
        }
    }

    fn clause_vertex(&self, copy: usize, j: usize, pos: usize) -> usize {
        assert!(j < self.num_clauses);
        assert!((1..=5).contains(&pos));
        self.copy_offset(copy) + 6 * self.num_vars + 5 * j + (pos - 1)
    }

    fn probe(&self) -> usize {
        2 * (6 * self.num_vars + 5 * self.num_clauses)
    }
}

/// The reduction graph with its vertex directory.
#[derive(Clone, Debug)]
pub struct ReductionGraph {
    graph: Graph,
    layout: Layout,
}

impl ReductionGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn num_vars(&self) -> usize {
        self.layout.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.layout.num_clauses
    }

    /// Vertex of the variable gadget `i` (0-based) in `copy` (1 or 2).
    pub fn var_vertex(&self, copy: usize, i: usize, role: VarVertex) -> usize {
        self.layout.var_vertex(copy, i, role)
    }

    /// Vertex `c_{j,pos}` (pos in 1..=5) of clause `j` (0-based) in `copy`.
    pub fn clause_vertex(&self, copy: usize, j: usize, pos: usize) -> usize {
        self.layout.clause_vertex(copy, j, pos)
    }

    /// The probe vertex `w`.
    pub fn probe(&self) -> usize {
        self.layout.probe()
    }
}

/// Builds the reduction graph of a 3-CNF formula whose clauses each use
/// three distinct variables.
pub fn sat_reduction(f: &CnfFormula) -> Result<ReductionGraph, ReductionError> {
    let n = f.num_vars();
    let m = f.clauses().len();
    for (j, clause) in f.clauses().iter().enumerate() {
        let mut vars = [clause[0].var, clause[1].var, clause[2].var];
        vars.sort_unstable();
        if vars[0] == vars[1] || vars[1] == vars[2] {
            return Err(ReductionError::MalformedClause(j));
        }
    }

    let total = 2 * (6 * n + 5 * m) + 1;
    let layout = Layout {
        num_vars: n,
        num_clauses: m,
    };
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut labels: Vec<(usize, String)> = Vec::new();

    for copy in 1..=2 {
        for i in 0..n {
            let a1 = layout.var_vertex(copy, i, VarVertex::A1);
            let a2 = layout.var_vertex(copy, i, VarVertex::A2);
            let b1 = layout.var_vertex(copy, i, VarVertex::B1);
            let b2 = layout.var_vertex(copy, i, VarVertex::B2);
            let t = layout.var_vertex(copy, i, VarVertex::T);
            let fv = layout.var_vertex(copy, i, VarVertex::F);
            // the gadget is the 6-cycle T a1 b1 F b2 a2
            edges.extend_from_slice(&[(t, a1), (a1, b1), (b1, fv), (fv, b2), (b2, a2), (a2, t)]);
            labels.extend_from_slice(&[
                (a1, format!("a{},1^{copy}", i + 1)),
                (a2, format!("a{},2^{copy}", i + 1)),
                (b1, format!("b{},1^{copy}", i + 1)),
                (b2, format!("b{},2^{copy}", i + 1)),
                (t, format!("T{}^{copy}", i + 1)),
                (fv, format!("F{}^{copy}", i + 1)),
            ]);
        }
        for (j, clause) in f.clauses().iter().enumerate() {
            let c: Vec<usize> = (1..=5)
                .map(|pos| layout.clause_vertex(copy, j, pos))
                .collect();
            for (pos, &v) in c.iter().enumerate() {
                labels.push((v, format!("c{},{}^{copy}", j + 1, pos + 1)));
            }
            // clause gadget: star centred on c_{j,2}
            edges.extend_from_slice(&[(c[1], c[0]), (c[1], c[2]), (c[1], c[3]), (c[1], c[4])]);

            for i in 0..n {
                let t = layout.var_vertex(copy, i, VarVertex::T);
                let fv = layout.var_vertex(copy, i, VarVertex::F);
                // the first contact reaches both poles of every variable
                // gadget, keeping it two steps from each of them; the
                // third contact reaches only the falsifying side of an
                // occurring variable (both sides of the others), so a
                // satisfied literal pushes it to distance three
                edges.push((c[0], t));
                edges.push((c[0], fv));
                match clause.iter().find(|lit| lit.var == i) {
                    Some(lit) => edges.push((c[2], if lit.positive { fv } else { t })),
                    None => {
                        edges.push((c[2], t));
                        edges.push((c[2], fv));
                    }
                }
            }

            // cross wiring: c1 and c3 of this copy reach both gadget poles
            // of every variable in the other copy
            let other = 3 - copy;
            for i in 0..n {
                let t = layout.var_vertex(other, i, VarVertex::T);
                let fv = layout.var_vertex(other, i, VarVertex::F);
                edges.extend_from_slice(&[(c[0], t), (c[0], fv), (c[2], t), (c[2], fv)]);
            }

            edges.push((layout.probe(), c[2]));
        }
    }
    labels.push((layout.probe(), "w".to_string()));

    let graph = Graph::from_edge_list(total, &edges)?.with_labels(labels)?;
    Ok(ReductionGraph { graph, layout })
}

/// The satisfying-side certificate: all `c_{j,4}` plus, per variable, the
/// `a_{i,1}` vertices when the assignment sets it true and the `b_{i,1}`
/// vertices otherwise (in both copies). Has `2n + 2m` elements and never
/// contains the probe; it resolves the graph iff the assignment satisfies
/// the formula.
pub fn satisfiable_side_certificate(
    rg: &ReductionGraph,
    assignment: &[bool],
) -> Result<Vec<usize>, ReductionError> {
    if assignment.len() != rg.num_vars() {
        return Err(ReductionError::AssignmentLength {
            got: assignment.len(),
            expected: rg.num_vars(),
        });
    }
    let mut out = Vec::with_capacity(2 * rg.num_vars() + 2 * rg.num_clauses());
    for copy in 1..=2 {
        for (i, &value) in assignment.iter().enumerate() {
            let role = if value { VarVertex::A1 } else { VarVertex::B1 };
            out.push(rg.var_vertex(copy, i, role));
        }
        for j in 0..rg.num_clauses() {
            out.push(rg.clause_vertex(copy, j, 4));
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// The unconditional certificate: the probe `w` plus all `a_{i,1}` and
/// `c_{j,4}` vertices of both copies, `2n + 2m + 1` elements in total.
/// Resolves the graph for every formula.
pub fn universal_certificate(rg: &ReductionGraph) -> Vec<usize> {
    let mut out = Vec::with_capacity(2 * rg.num_vars() + 2 * rg.num_clauses() + 1);
    out.push(rg.probe());
    for copy in 1..=2 {
        for i in 0..rg.num_vars() {
            out.push(rg.var_vertex(copy, i, VarVertex::A1));
        }
        for j in 0..rg.num_clauses() {
            out.push(rg.clause_vertex(copy, j, 4));
        }
    }
    out.sort_unstable();
    out
}
