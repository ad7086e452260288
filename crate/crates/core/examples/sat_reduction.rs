//! The two-copy 3-SAT gadget graph and its certificates.
//!
//! From a formula with `n` variables and `m` clauses the builder produces
//! a graph on `2(6n+5m)+1` vertices with a probe vertex `w`. A satisfying
//! assignment certifies a resolving set of size `2n+2m` avoiding `w`; a
//! falsified clause leaves its two clause contacts unresolved; and a set
//! of size `2n+2m+1` through `w` resolves no matter what. Deciding where
//! between those two sizes the dimension lands is exactly as hard as
//! deciding satisfiability, which is why the exact solver is not the tool
//! for these graphs.
//!
//! ```bash
//! cargo run --release --example sat_reduction
//! ```

use metric_basis::reduction::{
    sat_reduction, satisfiable_side_certificate, universal_certificate, CnfFormula, Lit,
};
use metric_basis::resolver::PairSystem;

fn main() {
    // (x1 v x2 v ~x3) ^ (~x1 v x2 v x4)
    let formula = CnfFormula::new(
        4,
        vec![
            [Lit::pos(0), Lit::pos(1), Lit::neg(2)],
            [Lit::neg(0), Lit::pos(1), Lit::pos(3)],
        ],
    )
    .unwrap();
    let n = formula.num_vars();
    let m = formula.clauses().len();
    let rg = sat_reduction(&formula).unwrap();
    let g = rg.graph();
    println!(
        "reduction graph: {} vertices (2(6n+5m)+1 = {}), {} edges",
        g.n(),
        2 * (6 * n + 5 * m) + 1,
        g.edge_count()
    );
    println!(
        "probe vertex {} ({}), degree {} (= 2m)",
        rg.probe(),
        g.label(rg.probe()).unwrap(),
        g.degree(rg.probe())
    );

    let ps = PairSystem::new(&g.distance_matrix().unwrap());

    // a satisfying assignment gives the small certificate
    let assignment = [true, true, false, false];
    assert!(formula.is_satisfied_by(&assignment));
    let cert = satisfiable_side_certificate(&rg, &assignment).unwrap();
    println!(
        "\nsatisfying assignment {:?}: certificate of {} vertices (2n+2m = {}), resolving: {}",
        assignment,
        cert.len(),
        2 * n + 2 * m,
        ps.is_resolving(&cert)
    );
    assert!(ps.is_resolving(&cert));
    assert!(!cert.contains(&rg.probe()));

    // a falsifying assignment leaves the contact pair of the violated
    // clause unseparated
    let falsifying = [true, false, true, false]; // clause 1 has no true literal
    assert!(!formula.is_satisfied_by(&falsifying));
    let cert = satisfiable_side_certificate(&rg, &falsifying).unwrap();
    let unresolved = ps.unresolved_pairs(&cert);
    println!(
        "\nfalsifying assignment {:?}: {} unresolved pair(s):",
        falsifying,
        unresolved.len()
    );
    for &(x, y) in &unresolved {
        println!(
            "  {{{}, {}}}",
            g.label(x).unwrap_or("?"),
            g.label(y).unwrap_or("?")
        );
    }
    let c1 = rg.clause_vertex(1, 1, 1); // second clause is the violated one
    let c3 = rg.clause_vertex(1, 1, 3);
    assert!(unresolved.contains(&(c1.min(c3), c1.max(c3))));

    // the probe always completes a resolving set
    let cert = universal_certificate(&rg);
    println!(
        "\nuniversal certificate: {} vertices (2n+2m+1 = {}), resolving: {}",
        cert.len(),
        2 * n + 2 * m + 1,
        ps.is_resolving(&cert)
    );
    assert!(ps.is_resolving(&cert));
}
