//! Condensing the index order leaves the two-point constraint product
//! unchanged, and smaller products embed in larger ones.

use finitop::mahavier::{quotient_invariance, subset_check};
use finitop::{Preorder, SetRelation};

fn main() {
    for (name, q) in [
        ("3-cycle", Preorder::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()),
        ("two classes", Preorder::from_pairs(3, &[(0, 1), (1, 0), (0, 2)]).unwrap()),
        ("already a poset", Preorder::from_pairs(3, &[(0, 1), (1, 2)]).unwrap()),
    ] {
        let report = quotient_invariance(&q, 1 << 16).unwrap();
        println!(
            "{}: |M(2,γ,Q)|={}, |M(2,γ,Q*)|={}, well-defined={}, bijective={}, homeomorphic={}",
            name,
            report.source_cardinality,
            report.quotient_cardinality,
            report.well_defined,
            report.bijective,
            report.homeomorphic
        );
    }

    // Any relation with a Γ configuration contains a relabeled copy of γ,
    // so its product contains the two-point one.
    let f = SetRelation::from_pairs(3, &[(0, 0), (0, 1), (1, 1), (1, 2), (2, 1)]).unwrap();
    let (x, y) = f.satisfies_gamma().unwrap();
    println!("\nΓ witness of f: ({}, {})", x, y);
    let q = Preorder::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
    let gamma = SetRelation::gamma(2, 0, 1).unwrap();
    let outcome = subset_check(&[x, y], &gamma, 3, &f, &q, 1 << 16).unwrap();
    println!(
        "M({{{},{}}}, γ, Q) ⊆ M(3, f, Q): {} ({} of {} elements)",
        x, y, outcome.holds, outcome.sub_cardinality, outcome.super_cardinality
    );
}
