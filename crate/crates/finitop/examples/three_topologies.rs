//! The downset space carries one topology reachable three ways: cone
//! complements, the basic sets B⟨T,F⟩, and the subspace topology of
//! the characteristic vectors inside the power of the discrete
//! two-point space.

use finitop::mahavier::homeomorphism_theorem;
use finitop::Poset;

fn main() {
    for (name, poset) in [
        ("point", Poset::chain(1)),
        ("chain of 4", Poset::chain(4)),
        ("antichain of 3", Poset::antichain(3)),
        ("v poset", Poset::from_pairs(3, &[(0, 1), (0, 2)]).unwrap()),
        ("2x2 grid", Poset::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()),
        (
            "fence on 5",
            Poset::from_pairs(5, &[(0, 2), (1, 2), (1, 3), (4, 3)]).unwrap(),
        ),
    ] {
        let verdict = homeomorphism_theorem(&poset, 1 << 20, 1 << 16).unwrap();
        println!(
            "{}: {} points; neighborhood maps equal: {}; open families equal: {}",
            name,
            verdict.points,
            verdict.neighborhoods_equal,
            match verdict.extensional_equal {
                Some(v) => v.to_string(),
                None => "not materialized".to_string(),
            }
        );
    }
}
