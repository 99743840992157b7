//! The downset space of a poset: its points are the downward subsets,
//! ordered by inclusion and topologized by cone complements. The order
//! relation is closed in the square, witnessed three ways.

use finitop::ideal::enumerate_ideals;
use finitop::{is_continuous_pots, pots_topology, Poset};

fn main() {
    let poset = Poset::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
    let family = enumerate_ideals(&poset, 1 << 20).unwrap();
    println!("2x2 grid has {} downward subsets:", family.len());
    for (i, a) in family.ideals().iter().enumerate() {
        println!("  point {} = {:?}", i, a.to_vec());
    }

    let containment = family.containment_poset().unwrap();
    let space = pots_topology(&containment, 1 << 16).unwrap();
    println!("\ndownset space: {} opens", space.space.opens().len());

    let report = is_continuous_pots(&space);
    println!("open-pair separation:        {}", report.separation);
    println!("order graph closed in square: {}", report.order_closed);
    println!("disjoint monotone opens:      {}", report.cone_separation);
    println!("verdicts agree: {}", report.agree());
}
