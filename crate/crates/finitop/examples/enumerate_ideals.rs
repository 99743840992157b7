//! Enumerate and count downward subsets, and slice them with the
//! basic sets B⟨T,F⟩.

use finitop::ideal::{count_ideals, enumerate_ideals};
use finitop::pointset::PointSet;
use finitop::Poset;

fn show(name: &str, poset: &Poset) {
    let family = enumerate_ideals(poset, 1 << 20).unwrap();
    let sets: Vec<Vec<usize>> = family.ideals().iter().map(|a| a.to_vec()).collect();
    println!("{} (n={}): {} ideals", name, poset.n(), family.len());
    println!("  {:?}", sets);
    assert_eq!(count_ideals(poset).unwrap(), family.len() as u64);
}

fn main() {
    show("chain of 3", &Poset::chain(3));
    show("antichain of 3", &Poset::antichain(3));
    show("v poset", &Poset::from_pairs(3, &[(0, 1), (0, 2)]).unwrap());
    let grid = Poset::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
    show("2x2 grid", &grid);

    // Counting scales past anything worth materializing.
    println!("\nantichain of 30 has {} ideals", count_ideals(&Poset::antichain(30)).unwrap());

    // Basic sets: ideals through 0 avoiding 3, in the grid.
    let family = enumerate_ideals(&grid, 1 << 20).unwrap();
    let slice = family.basis_btf(PointSet::singleton(0), PointSet::singleton(3));
    let sets: Vec<Vec<usize>> = slice.iter().map(|a| a.to_vec()).collect();
    println!("grid ideals containing 0 and avoiding 3: {:?}", sets);
    println!(
        "principal ideal of 3 in the grid: {:?}",
        family.principal_ideal(3).unwrap().to_vec()
    );
}
