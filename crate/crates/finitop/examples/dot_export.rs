//! Emit Hasse diagrams in DOT form, for a poset and for its lattice of
//! downward subsets.

use finitop::dot::{ideal_lattice_dot, poset_dot};
use finitop::ideal::enumerate_ideals;
use finitop::Poset;

fn main() {
    let mut diamond = Poset::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
    diamond
        .set_labels(vec!["bot".into(), "left".into(), "right".into(), "top".into()])
        .unwrap();
    println!("{}", poset_dot(&diamond));

    let family = enumerate_ideals(&diamond, 1 << 20).unwrap();
    println!("{}", ideal_lattice_dot(&family));
}
