//! DOT export of Hasse diagrams, with stable node names.

use crate::ideal::IdealFamily;
use crate::order::Poset;

/// Hasse diagram of a poset: the transitive reduction, nodes `p0..`,
/// bottom-to-top rank direction.
pub fn poset_dot(poset: &Poset) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    for p in 0..poset.n() {
        out.push_str(&format!("  p{} [label=\"{}\"];\n", p, poset.label(p)));
    }
    for (p, q) in poset.covers() {
        out.push_str(&format!("  p{} -> p{};\n", p, q));
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of an ideal family ordered by inclusion. Nodes are
/// named by canonical position and labeled with their members.
pub fn ideal_lattice_dot(family: &IdealFamily) -> String {
    let ideals = family.ideals();
    let mut out = String::from("digraph ideals {\n  rankdir=BT;\n");
    for (i, a) in ideals.iter().enumerate() {
        let members: Vec<String> = a.iter().map(|p| p.to_string()).collect();
        out.push_str(&format!("  i{} [label=\"{{{}}}\"];\n", i, members.join(",")));
    }
    for (a, set_a) in ideals.iter().enumerate() {
        for (b, set_b) in ideals.iter().enumerate() {
            if a != b && set_a.is_subset(*set_b) {
                let covered = !ideals.iter().enumerate().any(|(c, set_c)| {
                    c != a
                        && c != b
                        && set_a.is_subset(*set_c)
                        && set_c.is_subset(*set_b)
                });
                if covered {
                    out.push_str(&format!("  i{} -> i{};\n", a, b));
                }
            }
        }
    }
    out.push_str("}\n");
    out
}
