//! Enumerate constraint products and line them up with downward
//! subsets via characteristic vectors.

use finitop::ideal::enumerate_ideals;
use finitop::mahavier::{enumerate_product, h_map};
use finitop::{Poset, SetRelation};

fn main() {
    let gamma = SetRelation::gamma(2, 0, 1).unwrap();
    println!("γ on two points: {:?}", gamma.pairs());

    for (name, poset) in [
        ("chain of 2", Poset::chain(2)),
        ("antichain of 2", Poset::antichain(2)),
        ("v poset", Poset::from_pairs(3, &[(0, 1), (0, 2)]).unwrap()),
    ] {
        let m = enumerate_product(2, &gamma, poset.as_preorder(), 1 << 16).unwrap();
        println!("\nM(2, γ, {}) has {} elements: {:?}", name, m.len(), m.elements());

        let family = enumerate_ideals(&poset, 1 << 20).unwrap();
        let h = h_map(&family, 1 << 16).unwrap();
        println!("characteristic map is a bijection: {}", h.bijective);
        for (ideal, vector) in family.ideals().iter().zip(&h.vectors) {
            println!("  {:?} <-> {:?}", ideal.to_vec(), vector);
        }
    }

    // The identity relation collapses each mutually-comparable class
    // to a single value.
    let cycle = finitop::Preorder::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
    let m = enumerate_product(2, &SetRelation::identity(2), &cycle, 1 << 16).unwrap();
    println!("\nM(2, ι, 3-cycle) = {:?}", m.elements());
}
