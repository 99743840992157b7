//! Property tests for the structural invariants.

use proptest::prelude::*;

use finitop::ideal::{count_ideals, enumerate_ideals};
use finitop::mahavier::{enumerate_product, enumerate_product_brute};
use finitop::pointset::PointSet;
use finitop::relation::SetRelation;
use finitop::{FinSpace, Poset, Preorder};

// A preorder of up to six elements, from arbitrary generating pairs.
fn preorders() -> impl Strategy<Value = Preorder> {
    (0usize..=6).prop_flat_map(|n| {
        prop::collection::vec((0..n.max(1), 0..n.max(1)), 0..12)
            .prop_map(move |pairs| {
                let pairs: Vec<(usize, usize)> =
                    pairs.into_iter().filter(|&(p, q)| p < n && q < n).collect();
                Preorder::from_pairs(n, &pairs).expect("pairs are in range")
            })
    })
}

// A poset of up to six elements: ascending generating pairs.
fn posets() -> impl Strategy<Value = Poset> {
    (0usize..=6).prop_flat_map(|n| {
        prop::collection::vec((0..n.max(1), 0..n.max(1)), 0..12).prop_map(move |pairs| {
            let pairs: Vec<(usize, usize)> = pairs
                .into_iter()
                .filter(|&(p, q)| p < q && q < n)
                .collect();
            Poset::from_pairs(n, &pairs).expect("ascending pairs are antisymmetric")
        })
    })
}

fn relations(m: usize) -> impl Strategy<Value = SetRelation> {
    prop::collection::vec(any::<bool>(), m * m).prop_map(move |bits| {
        let pairs: Vec<(usize, usize)> = bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| (i / m, i % m))
            .collect();
        SetRelation::from_pairs(m, &pairs).expect("pairs are in range")
    })
}

proptest! {
    #[test]
    fn closure_is_a_fixpoint(q in preorders()) {
        let again = Preorder::from_pairs(q.n(), &q.pairs()).unwrap();
        prop_assert_eq!(again.pairs(), q.pairs());
    }

    #[test]
    fn quotient_is_a_poset_and_the_map_is_monotone(q in preorders()) {
        let result = q.quotient();
        prop_assert!(result.quotient.as_preorder().is_poset());
        for p in 0..q.n() {
            for r in 0..q.n() {
                if q.le(p, r) {
                    prop_assert!(result.quotient.le(result.class_of[p], result.class_of[r]));
                }
                // Classes collapse exactly mutual comparability, and the
                // class order is representative-independent.
                prop_assert_eq!(
                    result.class_of[p] == result.class_of[r],
                    q.le(p, r) && q.le(r, p)
                );
            }
        }
        // Idempotence: condensing again changes nothing.
        let twice = result.quotient.as_preorder().quotient();
        prop_assert!(twice.classes.iter().all(|c| c.len() == 1));
        prop_assert_eq!(twice.quotient.pairs(), result.quotient.pairs());
    }

    #[test]
    fn ideal_count_matches_enumeration(p in posets()) {
        let family = enumerate_ideals(&p, 1 << 20).unwrap();
        prop_assert_eq!(count_ideals(&p).unwrap(), family.len() as u64);
        // And the family is a lattice.
        for a in family.ideals() {
            for b in family.ideals() {
                prop_assert!(family.index_of(a.union(*b)).is_some());
                prop_assert!(family.index_of(a.intersect(*b)).is_some());
            }
        }
    }

    #[test]
    fn basic_sets_multiply_by_intersection(
        p in posets(),
        t1 in any::<u64>(),
        f1 in any::<u64>(),
        t2 in any::<u64>(),
        f2 in any::<u64>(),
    ) {
        let family = enumerate_ideals(&p, 1 << 20).unwrap();
        let full = PointSet::full(p.n()).mask();
        let (t1, f1, t2, f2) = (t1 & full, f1 & full, t2 & full, f2 & full);
        let combined = family.basis_btf(
            PointSet::from_mask(t1 | t2),
            PointSet::from_mask(f1 | f2),
        );
        let left = family.basis_btf(PointSet::from_mask(t1), PointSet::from_mask(f1));
        let right = family.basis_btf(PointSet::from_mask(t2), PointSet::from_mask(f2));
        let meet: Vec<PointSet> = left.into_iter().filter(|a| right.contains(a)).collect();
        prop_assert_eq!(combined, meet);
    }

    #[test]
    fn gamma_condition_is_monotone(m in 1usize..=5, seed in any::<u64>()) {
        // Build f ⊆ g by clearing random bits of g.
        let g_bits = seed;
        let f_bits = seed & seed.rotate_left(13);
        let to_rel = |bits: u64| {
            let pairs: Vec<(usize, usize)> = (0..m * m)
                .filter(|i| bits >> (i % 64) & 1 == 1 || bits >> ((i * 7 + 3) % 64) & 1 == 1)
                .map(|i| (i / m, i % m))
                .collect();
            SetRelation::from_pairs(m, &pairs).unwrap()
        };
        let g = to_rel(g_bits);
        let f = to_rel(f_bits & g_bits);
        if f.is_subrelation(&g) && f.satisfies_gamma().is_some() {
            prop_assert!(g.satisfies_gamma().is_some());
        }
    }

    #[test]
    fn generated_topologies_are_idempotent(k in 0usize..=4, masks in prop::collection::vec(any::<u64>(), 0..4)) {
        let full = PointSet::full(k).mask();
        let subbasis: Vec<PointSet> =
            masks.iter().map(|m| PointSet::from_mask(m & full)).collect();
        let x = FinSpace::generate(k, &subbasis, 1 << 16).unwrap();
        let again = FinSpace::generate(k, x.opens(), 1 << 16).unwrap();
        prop_assert_eq!(x.opens(), again.opens());
        // The minimal basis is contained in the open family and every
        // open is a union of basis members.
        for b in x.minimal_basis() {
            prop_assert!(x.is_open(b));
        }
        for o in x.opens() {
            let union = x
                .minimal_basis()
                .into_iter()
                .filter(|b| b.is_subset(*o))
                .fold(PointSet::EMPTY, |acc, b| acc.union(b));
            prop_assert_eq!(union, *o);
        }
    }

    #[test]
    fn product_enumeration_routes_agree(q in preorders(), bits in any::<u64>()) {
        for x_size in 1usize..=2 {
            let pairs: Vec<(usize, usize)> = (0..x_size * x_size)
                .filter(|i| bits >> i & 1 == 1)
                .map(|i| (i / x_size, i % x_size))
                .collect();
            let f = SetRelation::from_pairs(x_size, &pairs).unwrap();
            let fast = enumerate_product(x_size, &f, &q, 1 << 20).unwrap();
            let brute = enumerate_product_brute(x_size, &f, &q, 1 << 20).unwrap();
            prop_assert_eq!(fast.elements(), brute.as_slice());
        }
    }

    #[test]
    fn product_cardinality_equals_ideal_count(p in posets()) {
        let f = SetRelation::gamma(2, 0, 1).unwrap();
        let m = enumerate_product(2, &f, p.as_preorder(), 1 << 20).unwrap();
        prop_assert_eq!(m.len() as u64, count_ideals(&p).unwrap());
    }

    #[test]
    fn relation_composition_is_associative(m in 1usize..=5, fs in prop::collection::vec(any::<u64>(), 3)) {
        let rels: Vec<SetRelation> = fs
            .iter()
            .map(|bits| {
                let pairs: Vec<(usize, usize)> = (0..m * m)
                    .filter(|i| bits >> i & 1 == 1)
                    .map(|i| (i / m, i % m))
                    .collect();
                SetRelation::from_pairs(m, &pairs).unwrap()
            })
            .collect();
        let left = rels[0].compose(&rels[1]).unwrap().compose(&rels[2]).unwrap();
        let right = rels[0].compose(&rels[1].compose(&rels[2]).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

proptest! {
    #[test]
    fn v_relation_reports_are_consistent(f in relations(3)) {
        let report = f.v_report(None).unwrap();
        prop_assert_eq!(report.idempotent, f.compose(&f).unwrap() == f);
        if report.is_v_relation() {
            prop_assert!(report.serial && report.surjective);
        }
    }
}
