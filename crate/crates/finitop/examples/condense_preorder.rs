//! Condense a preorder with cycles to its canonical partial order.

use finitop::Preorder;

fn main() {
    // 0 and 1 are mutually comparable, 4 sits above the cycle 2 ⪯ 3 ⪯ 2.
    let q = Preorder::from_pairs(5, &[(0, 1), (1, 0), (1, 2), (2, 3), (3, 2), (3, 4)]).unwrap();
    println!("preorder pairs: {:?}", q.proper_pairs());
    println!("is a poset: {}", q.is_poset());
    if let Some((p, r)) = q.antisymmetry_witness() {
        println!("antisymmetry fails at: {} ⪯ {} ⪯ {}", p, r, p);
    }

    let result = q.quotient();
    println!("\ncondensation has {} classes:", result.classes.len());
    for (i, class) in result.classes.iter().enumerate() {
        println!("  class {} = {:?}", i, class.to_vec());
    }
    println!("class of each element: {:?}", result.class_of);
    println!("quotient pairs: {:?}", result.quotient.proper_pairs());
    println!("quotient is a poset: {}", result.quotient.as_preorder().is_poset());
}
