//! Check the V-relation axioms, find Γ configurations, and scan all
//! relations on small discrete spaces.

use finitop::relation::gamma_scan;
use finitop::SetRelation;

fn main() {
    for (name, rel) in [
        ("γ on 2", SetRelation::gamma(2, 0, 1).unwrap()),
        ("ι on 3", SetRelation::identity(3)),
        ("single pair {(0,1)}", SetRelation::from_pairs(2, &[(0, 1)]).unwrap()),
    ] {
        let report = rel.v_report(None).unwrap();
        println!(
            "{}: closed={} idempotent={} surjective={} serial={} => V-relation={}",
            name,
            report.closed,
            report.idempotent,
            report.surjective,
            report.serial,
            report.is_v_relation()
        );
        println!("  Γ witness: {:?}", rel.satisfies_gamma());
    }

    println!();
    for m in 1..=4 {
        let scan = gamma_scan(m).unwrap();
        println!(
            "m={}: scanned {} relations, {} V-relations besides ι, counterexample: {:?}",
            m, scan.relations_scanned, scan.v_relations_checked, scan.counterexample
        );
    }
}
