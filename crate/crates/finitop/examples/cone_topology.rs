//! Build the topology generated by cone complements and inspect its
//! separation properties.

use finitop::catalog::boolean_poset;
use finitop::{pots_topology, Poset};

fn inspect(name: &str, poset: &Poset) {
    let ordered = pots_topology(poset, 1 << 16).unwrap();
    let report = ordered.space.separation();
    println!(
        "{}: {} points, {} opens, t1={}, hausdorff={}, witness={:?}",
        name,
        ordered.space.k(),
        ordered.space.opens().len(),
        report.t1,
        report.hausdorff,
        report.witness
    );
    println!(
        "  minimal basis: {:?}",
        ordered
            .space
            .minimal_basis()
            .iter()
            .map(|b| b.to_vec())
            .collect::<Vec<_>>()
    );
}

fn main() {
    inspect("chain of 2", &Poset::chain(2));
    inspect("antichain of 3", &Poset::antichain(3));
    // Subsets of {0,1} under inclusion: the cone subbasis isolates
    // every point of a finite poset, so this comes out discrete.
    inspect("subsets of {0,1}", &boolean_poset(2));
    inspect("subsets of {0,1,2}", &boolean_poset(3));
}
