//! Bundled test instances: every poset on at most four elements up to
//! isomorphism, stored explicitly by Hasse edges, plus seeded random
//! generators for posets, preorders, relations, and ordered spaces.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::order::{Poset, Preorder};
use crate::pointset::PointSet;
use crate::relation::SetRelation;
use crate::topology::{FinSpace, OrderedSpace};

/// Deterministic RNG for all seeded suites.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One catalog instance: a name, the element count, and Hasse edges.
pub struct CatalogEntry {
    pub name: &'static str,
    pub n: usize,
    pub covers: &'static [(usize, usize)],
}

/// All posets on `0..=4` elements, one per isomorphism class
/// (1 + 1 + 2 + 5 + 16 = 25 entries).
pub const SMALL_POSETS: &[CatalogEntry] = &[
    CatalogEntry { name: "empty", n: 0, covers: &[] },
    CatalogEntry { name: "point", n: 1, covers: &[] },
    CatalogEntry { name: "antichain2", n: 2, covers: &[] },
    CatalogEntry { name: "chain2", n: 2, covers: &[(0, 1)] },
    CatalogEntry { name: "antichain3", n: 3, covers: &[] },
    CatalogEntry { name: "chain2+point", n: 3, covers: &[(0, 1)] },
    CatalogEntry { name: "chain3", n: 3, covers: &[(0, 1), (1, 2)] },
    CatalogEntry { name: "v", n: 3, covers: &[(0, 1), (0, 2)] },
    CatalogEntry { name: "wedge", n: 3, covers: &[(0, 2), (1, 2)] },
    CatalogEntry { name: "antichain4", n: 4, covers: &[] },
    CatalogEntry { name: "chain2+2points", n: 4, covers: &[(0, 1)] },
    CatalogEntry { name: "two-chains", n: 4, covers: &[(0, 1), (2, 3)] },
    CatalogEntry { name: "chain3+point", n: 4, covers: &[(0, 1), (1, 2)] },
    CatalogEntry { name: "v+point", n: 4, covers: &[(0, 1), (0, 2)] },
    CatalogEntry { name: "wedge+point", n: 4, covers: &[(0, 2), (1, 2)] },
    CatalogEntry { name: "chain4", n: 4, covers: &[(0, 1), (1, 2), (2, 3)] },
    CatalogEntry { name: "claw-up", n: 4, covers: &[(0, 1), (0, 2), (0, 3)] },
    CatalogEntry { name: "claw-down", n: 4, covers: &[(0, 3), (1, 3), (2, 3)] },
    CatalogEntry { name: "fence", n: 4, covers: &[(0, 2), (1, 2), (1, 3)] },
    CatalogEntry { name: "y-up", n: 4, covers: &[(0, 1), (1, 2), (1, 3)] },
    CatalogEntry { name: "y-down", n: 4, covers: &[(0, 2), (1, 2), (2, 3)] },
    CatalogEntry { name: "chain3+side-top", n: 4, covers: &[(0, 1), (1, 3), (2, 3)] },
    CatalogEntry { name: "chain3+side-bottom", n: 4, covers: &[(0, 1), (0, 3), (1, 2)] },
    CatalogEntry { name: "diamond", n: 4, covers: &[(0, 1), (0, 2), (1, 3), (2, 3)] },
    CatalogEntry { name: "bowtie", n: 4, covers: &[(0, 2), (0, 3), (1, 2), (1, 3)] },
];

pub fn small_posets() -> Vec<(String, Poset)> {
    SMALL_POSETS
        .iter()
        .map(|e| {
            let poset = Poset::from_pairs(e.n, e.covers).expect("catalog entries are posets");
            (e.name.to_string(), poset)
        })
        .collect()
}

/// The subsets of `{0, .., atoms-1}` ordered by inclusion, indexed by
/// subset mask.
pub fn boolean_poset(atoms: usize) -> Poset {
    let size = 1usize << atoms;
    let mut pairs = Vec::new();
    for a in 0..size {
        for b in 0..size {
            if a & !b == 0 {
                pairs.push((a, b));
            }
        }
    }
    Poset::from_pairs(size, &pairs).expect("inclusion is a partial order")
}

/// Random poset: ascending edges with density ~0.4, closed, then
/// relabeled by a random permutation so linear extensions are not the
/// identity.
pub fn random_poset(n: usize, rng: &mut ChaCha8Rng) -> Poset {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.4) {
                pairs.push((i, j));
            }
        }
    }
    let poset = Poset::from_pairs(n, &pairs).expect("ascending edges stay antisymmetric");
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    poset.relabel(&perm).expect("shuffled identity is a permutation")
}

/// Random preorder: directed pairs in both directions, so condensation
/// classes of size greater than one show up regularly.
pub fn random_preorder(n: usize, rng: &mut ChaCha8Rng) -> Preorder {
    let mut pairs = Vec::new();
    for p in 0..n {
        for q in 0..n {
            if p != q && rng.gen_bool(0.3) {
                pairs.push((p, q));
            }
        }
    }
    Preorder::from_pairs(n, &pairs).expect("pairs are in range")
}

pub fn random_relation(m: usize, rng: &mut ChaCha8Rng) -> SetRelation {
    let mut pairs = Vec::new();
    for x in 0..m {
        for y in 0..m {
            if rng.gen_bool(0.5) {
                pairs.push((x, y));
            }
        }
    }
    SetRelation::from_pairs(m, &pairs).expect("pairs are in range")
}

/// Random topology on `k` points, generated from a few random subsets.
pub fn random_space(k: usize, rng: &mut ChaCha8Rng) -> FinSpace {
    let sets = rng.gen_range(0..=3);
    let subbasis: Vec<PointSet> = (0..sets)
        .map(|_| PointSet::from_mask(rng.gen_range(0..1u64 << k)))
        .collect();
    FinSpace::generate(k, &subbasis, 1 << 16).expect("small spaces stay under the cap")
}

pub fn random_ordered_space(k: usize, rng: &mut ChaCha8Rng) -> OrderedSpace {
    let space = random_space(k, rng);
    let order = random_poset(k, rng);
    OrderedSpace::new(space, order).expect("matching point counts")
}

/// Every labeled poset on `n` elements, by exhaustive scan over the
/// ascending-pair choices of all acyclic relations. Used to validate
/// the explicit catalog.
pub fn all_labeled_posets(n: usize) -> Vec<Poset> {
    assert!(n <= 4, "exhaustive scan meant for tiny sizes");
    let mut slots = Vec::new();
    for p in 0..n {
        for q in 0..n {
            if p != q {
                slots.push((p, q));
            }
        }
    }
    let mut out = Vec::new();
    for mask in 0u64..1 << slots.len() {
        let pairs: Vec<(usize, usize)> = slots
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &pq)| pq)
            .collect();
        // Keep only relations that are already transitively closed and
        // antisymmetric, so each labeled poset appears exactly once.
        if let Ok(p) = Poset::from_pairs(n, &pairs) {
            if p.proper_pairs() == pairs {
                out.push(p);
            }
        }
    }
    out
}

/// Minimal row-matrix encoding over all relabelings; equal forms mean
/// isomorphic posets.
pub fn canonical_form(poset: &Poset) -> Vec<u64> {
    let n = poset.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u64>> = None;
    permute(&mut perm, 0, &mut |perm| {
        let mut rows = vec![0u64; n];
        for p in 0..n {
            for q in 0..n {
                if poset.le(p, q) {
                    rows[perm[p]] |= 1u64 << perm[q];
                }
            }
        }
        if best.as_ref().is_none_or(|b| rows < *b) {
            best = Some(rows);
        }
    });
    best.unwrap_or_default()
}

fn permute(perm: &mut Vec<usize>, i: usize, visit: &mut impl FnMut(&[usize])) {
    if i == perm.len() {
        visit(perm);
        return;
    }
    for j in i..perm.len() {
        perm.swap(i, j);
        permute(perm, i + 1, visit);
        perm.swap(i, j);
    }
}
