//! Set-valued relations `f ⊆ X²` on a finite point set.
//!
//! Rows are images: bit `y` of row `x` means `y ∈ f(x)`.

use crate::error::{capacity_err, input_err, Result};
use crate::pointset::{PointSet, MAX_POINTS};
use crate::topology::FinSpace;

#[derive(Clone, PartialEq, Eq)]
pub struct SetRelation {
    m: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for SetRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SetRelation(m={}, {:?})", self.m, self.pairs())
    }
}

/// The four axioms checked separately, plus the combined verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VRelationReport {
    pub closed: bool,
    pub idempotent: bool,
    pub surjective: bool,
    pub serial: bool,
}

impl VRelationReport {
    pub fn is_v_relation(&self) -> bool {
        self.closed && self.idempotent && self.surjective && self.serial
    }
}

/// Outcome of the exhaustive scan over all relations on a discrete
/// `m`-point space.
#[derive(Clone, Debug)]
pub struct GammaScanReport {
    pub m: usize,
    pub relations_scanned: u64,
    /// V-relations distinct from the identity.
    pub v_relations_checked: u64,
    /// A V-relation `f ≠ ι` violating condition Γ, if one exists.
    pub counterexample: Option<Vec<(usize, usize)>>,
}

impl SetRelation {
    pub fn from_pairs(m: usize, pairs: &[(usize, usize)]) -> Result<SetRelation> {
        if m > MAX_POINTS {
            return capacity_err(format!("relation on {} points exceeds {}", m, MAX_POINTS));
        }
        let mut rows = vec![0u64; m];
        for &(x, y) in pairs {
            if x >= m || y >= m {
                return input_err(format!("pair ({},{}) out of range for m={}", x, y, m));
            }
            rows[x] |= 1u64 << y;
        }
        Ok(SetRelation { m, rows })
    }

    /// The identity relation ι.
    pub fn identity(m: usize) -> SetRelation {
        SetRelation { m, rows: (0..m).map(|x| 1u64 << x).collect() }
    }

    pub fn empty(m: usize) -> SetRelation {
        SetRelation { m, rows: vec![0; m] }
    }

    pub fn full(m: usize) -> SetRelation {
        SetRelation { m, rows: vec![PointSet::full(m).mask(); m] }
    }

    /// `γ`: the designated `zero` point maps to all of `X`, every other
    /// point maps to `{one}`.
    pub fn gamma(m: usize, zero: usize, one: usize) -> Result<SetRelation> {
        if zero >= m || one >= m {
            return input_err(format!("points ({},{}) out of range for m={}", zero, one, m));
        }
        if zero == one {
            return input_err("the designated points 0 and 1 must be distinct");
        }
        let rows = (0..m)
            .map(|x| if x == zero { PointSet::full(m).mask() } else { 1u64 << one })
            .collect();
        Ok(SetRelation { m, rows })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x] >> y & 1 == 1
    }

    /// The image `f(x)` as a set.
    pub fn image(&self, x: usize) -> PointSet {
        PointSet::from_mask(self.rows[x])
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.m {
            for y in self.image(x).iter() {
                out.push((x, y));
            }
        }
        out
    }

    pub fn is_subrelation(&self, other: &SetRelation) -> bool {
        self.m == other.m && (0..self.m).all(|x| self.rows[x] & !other.rows[x] == 0)
    }

    /// `(self ∘ inner)(x) = ⋃ { self(y) : y ∈ inner(x) }`; `inner` is
    /// applied first, so `f.compose(&f)` is `f²`.
    pub fn compose(&self, inner: &SetRelation) -> Result<SetRelation> {
        if self.m != inner.m {
            return input_err(format!(
                "cannot compose relations on {} and {} points",
                self.m, inner.m
            ));
        }
        let rows = (0..self.m)
            .map(|x| inner.image(x).iter().fold(0u64, |acc, y| acc | self.rows[y]))
            .collect();
        Ok(SetRelation { m: self.m, rows })
    }

    /// Checks the four V-relation axioms. With no space supplied the
    /// topology is taken to be discrete, where every subset is closed.
    pub fn v_report(&self, space: Option<&FinSpace>) -> Result<VRelationReport> {
        let closed = match space {
            None => true,
            Some(x) => {
                if x.k() != self.m {
                    return input_err(format!(
                        "space has {} points but relation has {}",
                        x.k(),
                        self.m
                    ));
                }
                self.graph_closed_in_square(x)
            }
        };
        let idempotent = self.compose(self)? == *self;
        let surjective = {
            let hit = self.rows.iter().fold(0u64, |acc, r| acc | r);
            hit == PointSet::full(self.m).mask()
        };
        let serial = self.rows.iter().all(|r| *r != 0);
        Ok(VRelationReport { closed, idempotent, surjective, serial })
    }

    // Pointwise closure of the graph in the square of `x`: a pair
    // outside the graph whose minimal box neighborhood meets the graph
    // witnesses non-closedness.
    fn graph_closed_in_square(&self, x: &FinSpace) -> bool {
        let nb = x.min_nbhds();
        for a in 0..self.m {
            for b in 0..self.m {
                if self.contains(a, b) {
                    continue;
                }
                let meets = nb.nbhd(a).iter().any(|r| self.rows[r] & nb.nbhd(b).mask() != 0);
                if meets {
                    return false;
                }
            }
        }
        true
    }

    /// Condition Γ: distinct `x, y` with `(x,x)`, `(x,y)`, `(y,y)` all
    /// in the relation; returns the lexicographically least witness.
    pub fn satisfies_gamma(&self) -> Option<(usize, usize)> {
        for x in 0..self.m {
            for y in 0..self.m {
                if x != y && self.contains(x, x) && self.contains(x, y) && self.contains(y, y) {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

/// Scans every relation on a discrete `m`-point space and checks that
/// each V-relation other than the identity satisfies condition Γ.
pub fn gamma_scan(m: usize) -> Result<GammaScanReport> {
    if m > 4 {
        return capacity_err(format!("scan of 2^{} relations refused (m={} > 4)", m * m, m));
    }
    let identity = SetRelation::identity(m);
    let total: u64 = 1u64 << (m * m);
    let mut v_checked = 0u64;
    let mut counterexample = None;
    for code in 0..total {
        let rows: Vec<u64> = (0..m).map(|x| code >> (x * m) & ((1u64 << m) - 1)).collect();
        let f = SetRelation { m, rows };
        if f == identity {
            continue;
        }
        let report = f.v_report(None).expect("discrete check cannot fail");
        if !report.is_v_relation() {
            continue;
        }
        v_checked += 1;
        if f.satisfies_gamma().is_none() && counterexample.is_none() {
            counterexample = Some(f.pairs());
        }
    }
    Ok(GammaScanReport {
        m,
        relations_scanned: total,
        v_relations_checked: v_checked,
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_identity_and_empty() {
        let f = SetRelation::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let id = SetRelation::identity(3);
        assert_eq!(id.compose(&f).unwrap(), f);
        assert_eq!(f.compose(&id).unwrap(), f);
        let empty = SetRelation::empty(3);
        assert_eq!(empty.compose(&f).unwrap(), empty);
        assert_eq!(f.compose(&empty).unwrap(), empty);
    }

    #[test]
    fn gamma_squared_expands_by_hand() {
        // γ on 2 points: γ(0) = {0,1}, γ(1) = {1}. By direct union,
        // γ²(0) = γ(0) ∪ γ(1) = {0,1} and γ²(1) = γ(1) = {1}.
        let g = SetRelation::gamma(2, 0, 1).unwrap();
        let g2 = g.compose(&g).unwrap();
        assert_eq!(g2.image(0).to_vec(), vec![0, 1]);
        assert_eq!(g2.image(1).to_vec(), vec![1]);
        assert_eq!(g2, g);
    }

    #[test]
    fn compose_size_mismatch() {
        let f = SetRelation::identity(2);
        let g = SetRelation::identity(3);
        assert!(f.compose(&g).is_err());
    }

    #[test]
    fn gamma_definition_expansion() {
        let g = SetRelation::gamma(2, 0, 1).unwrap();
        assert_eq!(g.pairs(), vec![(0, 0), (0, 1), (1, 1)]);
        let g3 = SetRelation::gamma(3, 0, 1).unwrap();
        assert_eq!(g3.pairs(), vec![(0, 0), (0, 1), (0, 2), (1, 1), (2, 1)]);
        assert!(SetRelation::gamma(2, 1, 1).is_err());
        assert!(SetRelation::gamma(2, 0, 2).is_err());
    }

    #[test]
    fn gamma_is_a_v_relation() {
        for m in 2..=6 {
            for zero in 0..m {
                for one in 0..m {
                    if zero == one {
                        continue;
                    }
                    let g = SetRelation::gamma(m, zero, one).unwrap();
                    assert!(g.v_report(None).unwrap().is_v_relation());
                }
            }
        }
    }

    #[test]
    fn identity_is_a_v_relation() {
        for m in 1..=5 {
            let report = SetRelation::identity(m).v_report(None).unwrap();
            assert!(report.is_v_relation());
        }
    }

    #[test]
    fn single_pair_fails_surjective_and_serial() {
        let f = SetRelation::from_pairs(2, &[(0, 1)]).unwrap();
        let report = f.v_report(None).unwrap();
        assert!(!report.surjective); // nothing maps to 0
        assert!(!report.serial); // row 1 is empty
        assert!(!report.is_v_relation());
    }

    #[test]
    fn closedness_against_explicit_product() {
        // Cross-check the pointwise closure against materializing the
        // square and testing the complement for openness.
        let space = FinSpace::generate(3, &[[0].into_iter().collect(), [0, 1].into_iter().collect()], 1 << 16).unwrap();
        let square = space.product(2, 1 << 16, 1 << 16).unwrap();
        for code in 0u64..512 {
            let rows: Vec<u64> = (0..3).map(|x| code >> (x * 3) & 0b111).collect();
            let f = SetRelation { m: 3, rows };
            let graph: PointSet =
                f.pairs().iter().map(|&(x, y)| x + 3 * y).collect();
            let explicit = square.is_closed_set(graph).unwrap();
            assert_eq!(f.v_report(Some(&space)).unwrap().closed, explicit);
        }
    }

    #[test]
    fn condition_gamma_witnesses() {
        let g = SetRelation::gamma(2, 0, 1).unwrap();
        assert_eq!(g.satisfies_gamma(), Some((0, 1)));
        assert_eq!(SetRelation::identity(4).satisfies_gamma(), None);
        assert_eq!(SetRelation::full(3).satisfies_gamma(), Some((0, 1)));
    }

    #[test]
    fn condition_gamma_is_monotone() {
        // If f ⊆ g and f satisfies Γ then so does g: exhaustive over
        // relation pairs on 2 points.
        for a in 0u64..16 {
            for b in 0u64..16 {
                if a & !b != 0 {
                    continue;
                }
                let f = SetRelation { m: 2, rows: vec![a & 0b11, a >> 2 & 0b11] };
                let g = SetRelation { m: 2, rows: vec![b & 0b11, b >> 2 & 0b11] };
                assert!(f.is_subrelation(&g));
                if f.satisfies_gamma().is_some() {
                    assert!(g.satisfies_gamma().is_some());
                }
            }
        }
    }

    #[test]
    fn compose_is_associative() {
        let mut state = 0xdeadbeefcafef00du64;
        let mut rel = |m: usize| {
            let rows = (0..m)
                .map(|_| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                    state >> 40 & ((1u64 << m) - 1)
                })
                .collect();
            SetRelation { m, rows }
        };
        for m in 1..=5 {
            for _ in 0..20 {
                let (f, g, h) = (rel(m), rel(m), rel(m));
                let left = f.compose(&g).unwrap().compose(&h).unwrap();
                let right = f.compose(&g.compose(&h).unwrap()).unwrap();
                assert_eq!(left, right);
            }
        }
    }

    #[test]
    fn scan_finds_no_counterexample_for_small_sizes() {
        let r2 = gamma_scan(2).unwrap();
        assert_eq!(r2.relations_scanned, 16);
        // By hand: γ, its transpose, and the full relation are the only
        // V-relations on 2 points besides the identity.
        assert_eq!(r2.v_relations_checked, 3);
        assert!(r2.counterexample.is_none());

        let r3 = gamma_scan(3).unwrap();
        assert_eq!(r3.relations_scanned, 512);
        assert!(r3.counterexample.is_none());

        let r1 = gamma_scan(1).unwrap();
        assert_eq!(r1.v_relations_checked, 0);
        assert!(r1.counterexample.is_none());

        assert!(gamma_scan(5).is_err());
    }

    #[test]
    fn scan_at_four_points_is_clean() {
        let r4 = gamma_scan(4).unwrap();
        assert_eq!(r4.relations_scanned, 65536);
        assert!(r4.counterexample.is_none());
        assert!(r4.v_relations_checked > 0);
    }
}
