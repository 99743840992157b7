//! Finite preorders and posets on canonical indices `0..n-1`.
//!
//! A relation is stored as one `u64` row mask per element, where bit `q`
//! of row `p` means `p ⪯ q`. Rows are therefore up-cones and columns are
//! down-cones. Labels are presentation-only metadata.

use crate::error::{capacity_err, input_err, Result};
use crate::pointset::{PointSet, MAX_POINTS};

/// A reflexive, transitive relation on `0..n-1`.
#[derive(Clone, PartialEq, Eq)]
pub struct Preorder {
    n: usize,
    rows: Vec<u64>,
    labels: Option<Vec<String>>,
}

/// A preorder that is also antisymmetric.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset(Preorder);

impl std::fmt::Debug for Preorder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Preorder(n={}, {:?})", self.n, self.proper_pairs())
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset(n={}, {:?})", self.n(), self.proper_pairs())
    }
}

/// Outcome of condensing a preorder to its canonical partial order:
/// the quotient poset, the class index of each source element, and the
/// classes themselves (indexed by their smallest member).
#[derive(Clone)]
pub struct QuotientResult {
    pub quotient: Poset,
    pub class_of: Vec<usize>,
    pub classes: Vec<PointSet>,
}

impl Preorder {
    /// Smallest reflexive-transitive relation containing `pairs`.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Preorder> {
        if n > MAX_POINTS {
            return capacity_err(format!("preorder size {} exceeds {} elements", n, MAX_POINTS));
        }
        let mut rows = vec![0u64; n];
        for (i, row) in rows.iter_mut().enumerate() {
            *row = 1u64 << i;
        }
        for &(p, q) in pairs {
            if p >= n || q >= n {
                return input_err(format!("pair ({},{}) out of range for n={}", p, q, n));
            }
            rows[p] |= 1u64 << q;
        }
        transitive_close(&mut rows);
        Ok(Preorder { n, rows, labels: None })
    }

    /// The discrete preorder: only the reflexive loops.
    pub fn discrete(n: usize) -> Preorder {
        Preorder::from_pairs(n, &[]).expect("discrete preorder is always valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn le(&self, p: usize, q: usize) -> bool {
        self.rows[p] >> q & 1 == 1
    }

    pub fn lt(&self, p: usize, q: usize) -> bool {
        p != q && self.le(p, q)
    }

    /// Mutual comparability: `p ⪯ q ⪯ p`.
    pub fn equivalent(&self, p: usize, q: usize) -> bool {
        self.le(p, q) && self.le(q, p)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<()> {
        if labels.len() != self.n {
            return input_err(format!(
                "{} labels supplied for {} elements",
                labels.len(),
                self.n
            ));
        }
        self.labels = Some(labels);
        Ok(())
    }

    pub fn label(&self, p: usize) -> String {
        match &self.labels {
            Some(ls) => ls[p].clone(),
            None => p.to_string(),
        }
    }

    /// All related pairs, loops included, in row-major order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for p in 0..self.n {
            for q in PointSet::from_mask(self.rows[p]).iter() {
                out.push((p, q));
            }
        }
        out
    }

    /// Related pairs without the reflexive loops.
    pub fn proper_pairs(&self) -> Vec<(usize, usize)> {
        self.pairs().into_iter().filter(|&(p, q)| p != q).collect()
    }

    /// `None` when antisymmetric, otherwise the lexicographically least
    /// pair `p < q` with `p ⪯ q ⪯ p`.
    pub fn antisymmetry_witness(&self) -> Option<(usize, usize)> {
        for p in 0..self.n {
            for q in p + 1..self.n {
                if self.le(p, q) && self.le(q, p) {
                    return Some((p, q));
                }
            }
        }
        None
    }

    pub fn is_poset(&self) -> bool {
        self.antisymmetry_witness().is_none()
    }

    /// Condenses mutually comparable elements into classes and returns
    /// the canonical partial order on them. Class indices are assigned
    /// by smallest member, so the output is deterministic.
    pub fn quotient(&self) -> QuotientResult {
        let mut class_of = vec![usize::MAX; self.n];
        let mut classes: Vec<PointSet> = Vec::new();
        for p in 0..self.n {
            if class_of[p] != usize::MAX {
                continue;
            }
            let idx = classes.len();
            let mut members = PointSet::EMPTY;
            for q in p..self.n {
                if self.equivalent(p, q) {
                    class_of[q] = idx;
                    members.insert(q);
                }
            }
            classes.push(members);
        }
        let k = classes.len();
        let mut rows = vec![0u64; k];
        for (a, members) in classes.iter().enumerate() {
            let rep = members.iter().next().expect("classes are nonempty");
            for (b, other) in classes.iter().enumerate() {
                let rep_b = other.iter().next().expect("classes are nonempty");
                if self.le(rep, rep_b) {
                    rows[a] |= 1u64 << b;
                }
            }
        }
        let labels = self.labels.as_ref().map(|ls| {
            classes
                .iter()
                .map(|c| {
                    let names: Vec<&str> = c.iter().map(|p| ls[p].as_str()).collect();
                    format!("{{{}}}", names.join(","))
                })
                .collect()
        });
        let quotient = Poset(Preorder { n: k, rows, labels });
        debug_assert!(quotient.0.is_poset());
        QuotientResult { quotient, class_of, classes }
    }

    /// Up-cone `{q : p ⪯ q}` as a set.
    pub fn row(&self, p: usize) -> PointSet {
        PointSet::from_mask(self.rows[p])
    }
}

impl Poset {
    /// Closure of `pairs` checked for antisymmetry.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        Poset::try_from_preorder(Preorder::from_pairs(n, pairs)?)
    }

    pub fn try_from_preorder(q: Preorder) -> Result<Poset> {
        match q.antisymmetry_witness() {
            None => Ok(Poset(q)),
            Some((p, r)) => input_err(format!(
                "relation is not antisymmetric: {} and {} are mutually comparable",
                p, r
            )),
        }
    }

    pub fn chain(n: usize) -> Poset {
        let pairs: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_pairs(n, &pairs).expect("chains are posets")
    }

    pub fn antichain(n: usize) -> Poset {
        Poset::from_pairs(n, &[]).expect("antichains are posets")
    }

    pub fn as_preorder(&self) -> &Preorder {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn le(&self, p: usize, q: usize) -> bool {
        self.0.le(p, q)
    }

    pub fn lt(&self, p: usize, q: usize) -> bool {
        self.0.lt(p, q)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.0.labels()
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<()> {
        self.0.set_labels(labels)
    }

    pub fn label(&self, p: usize) -> String {
        self.0.label(p)
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.0.pairs()
    }

    pub fn proper_pairs(&self) -> Vec<(usize, usize)> {
        self.0.proper_pairs()
    }

    fn check_elem(&self, p: usize) -> Result<()> {
        if p >= self.n() {
            input_err(format!("element {} out of range for n={}", p, self.n()))
        } else {
            Ok(())
        }
    }

    /// `p^≤ = {r : r ≤ p}`.
    pub fn lower_cone(&self, p: usize) -> PointSet {
        (0..self.n()).filter(|&r| self.le(r, p)).collect()
    }

    /// `p^< = {r : r < p}`.
    pub fn strict_lower(&self, p: usize) -> PointSet {
        let mut s = self.lower_cone(p);
        s.remove(p);
        s
    }

    /// `p^≥ = {r : r ≥ p}`.
    pub fn upper_cone(&self, p: usize) -> PointSet {
        self.0.row(p)
    }

    /// `p^> = {r : r > p}`.
    pub fn strict_upper(&self, p: usize) -> PointSet {
        let mut s = self.upper_cone(p);
        s.remove(p);
        s
    }

    /// `{r : r ≰ p}`, the complement of the lower cone.
    pub fn not_below(&self, p: usize) -> PointSet {
        self.lower_cone(p).complement(self.n())
    }

    /// `{r : r ≱ p}`, the complement of the upper cone. Identical to
    /// `{r : p ≰ r}`, the other way the complement notation can be read.
    pub fn not_above(&self, p: usize) -> PointSet {
        self.upper_cone(p).complement(self.n())
    }

    /// Half-open interval `(p, q] = p^> ∩ q^≤`.
    pub fn interval(&self, p: usize, q: usize) -> Result<PointSet> {
        self.check_elem(p)?;
        self.check_elem(q)?;
        Ok(self.strict_upper(p).intersect(self.lower_cone(q)))
    }

    /// Checked variants of the cone accessors for external callers.
    pub fn cone(&self, kind: ConeKind, p: usize) -> Result<PointSet> {
        self.check_elem(p)?;
        Ok(match kind {
            ConeKind::Lower => self.lower_cone(p),
            ConeKind::StrictLower => self.strict_lower(p),
            ConeKind::Upper => self.upper_cone(p),
            ConeKind::StrictUpper => self.strict_upper(p),
            ConeKind::NotBelow => self.not_below(p),
            ConeKind::NotAbove => self.not_above(p),
        })
    }

    /// True when every element below a member of `a` is in `a`.
    pub fn is_downward(&self, a: PointSet) -> bool {
        a.iter().all(|p| self.lower_cone(p).is_subset(a))
    }

    pub fn is_upward(&self, a: PointSet) -> bool {
        a.iter().all(|p| self.upper_cone(p).is_subset(a))
    }

    /// A linear extension: repeatedly takes the least-index minimal
    /// element among the remainder.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut remaining = PointSet::full(self.n());
        let mut out = Vec::with_capacity(self.n());
        while !remaining.is_empty() {
            let v = remaining
                .iter()
                .find(|&v| self.strict_lower(v).intersect(remaining).is_empty())
                .expect("a finite poset always has a minimal element");
            out.push(v);
            remaining.remove(v);
        }
        out
    }

    /// Covering pairs `p ⋖ q` (the Hasse diagram edges).
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for p in 0..self.n() {
            for q in 0..self.n() {
                if self.lt(p, q)
                    && !(0..self.n()).any(|r| self.lt(p, r) && self.lt(r, q))
                {
                    out.push((p, q));
                }
            }
        }
        out
    }

    /// Relabels elements by `perm`, where `perm[i]` is the new index of
    /// element `i`. Used by the random generators to avoid always
    /// producing orders aligned with the index order.
    pub fn relabel(&self, perm: &[usize]) -> Result<Poset> {
        if perm.len() != self.n() {
            return input_err("permutation length mismatch");
        }
        let mut seen = PointSet::EMPTY;
        for &i in perm {
            if i >= self.n() || seen.contains(i) {
                return input_err("not a permutation");
            }
            seen.insert(i);
        }
        let mut rows = vec![0u64; self.n()];
        for p in 0..self.n() {
            for q in 0..self.n() {
                if self.le(p, q) {
                    rows[perm[p]] |= 1u64 << perm[q];
                }
            }
        }
        let labels = self.labels().map(|ls| {
            let mut moved = vec![String::new(); self.n()];
            for (i, l) in ls.iter().enumerate() {
                moved[perm[i]] = l.clone();
            }
            moved
        });
        Ok(Poset(Preorder { n: self.n(), rows, labels }))
    }
}

fn transitive_close(rows: &mut [u64]) {
    // Warshall over row masks: if p reaches q, fold in q's row.
    let n = rows.len();
    for q in 0..n {
        for p in 0..n {
            if rows[p] >> q & 1 == 1 {
                rows[p] |= rows[q];
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeKind {
    Lower,
    StrictLower,
    Upper,
    StrictUpper,
    NotBelow,
    NotAbove,
}

#[cfg(test)]
mod tests {
    use super::*;

    // Naive fixpoint closure used as the oracle for `from_pairs`.
    fn closure_oracle(n: usize, pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
        let mut rel = vec![vec![false; n]; n];
        for i in 0..n {
            rel[i][i] = true;
        }
        for &(p, q) in pairs {
            rel[p][q] = true;
        }
        loop {
            let mut changed = false;
            for p in 0..n {
                for q in 0..n {
                    for r in 0..n {
                        if rel[p][q] && rel[q][r] && !rel[p][r] {
                            rel[p][r] = true;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let mut out = Vec::new();
        for p in 0..n {
            for q in 0..n {
                if rel[p][q] {
                    out.push((p, q));
                }
            }
        }
        out
    }

    #[test]
    fn closure_adds_transitive_pair_and_loops() {
        let q = Preorder::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(q.le(0, 2));
        assert!(q.le(0, 0) && q.le(1, 1) && q.le(2, 2));
        assert_eq!(q.pairs(), closure_oracle(3, &[(0, 1), (1, 2)]));
    }

    #[test]
    fn closure_of_empty_is_discrete() {
        let q = Preorder::from_pairs(2, &[]).unwrap();
        assert_eq!(q.pairs(), vec![(0, 0), (1, 1)]);
    }

    #[test]
    fn closure_of_two_cycle_is_total() {
        let q = Preorder::from_pairs(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(q.pairs(), closure_oracle(2, &[(0, 1), (1, 0)]));
        assert_eq!(q.pairs().len(), 4);
    }

    #[test]
    fn closure_rejects_out_of_range() {
        assert!(Preorder::from_pairs(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn antisymmetry_witness_cases() {
        assert!(Poset::chain(2).as_preorder().antisymmetry_witness().is_none());
        let two_cycle = Preorder::from_pairs(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(two_cycle.antisymmetry_witness(), Some((0, 1)));
        let three_cycle = Preorder::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!three_cycle.is_poset());
    }

    #[test]
    fn quotient_of_cycle_is_point() {
        let q = Preorder::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let res = q.quotient();
        assert_eq!(res.quotient.n(), 1);
        assert_eq!(res.class_of, vec![0, 0, 0]);
        assert_eq!(res.classes[0].to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn quotient_with_two_classes_is_two_chain() {
        // 0 ~ 1 and both precede 2.
        let q = Preorder::from_pairs(3, &[(0, 1), (1, 0), (0, 2)]).unwrap();
        let res = q.quotient();
        assert_eq!(res.quotient.n(), 2);
        assert!(res.quotient.le(0, 1));
        assert!(!res.quotient.le(1, 0));
        assert_eq!(res.classes[0].to_vec(), vec![0, 1]);
        assert_eq!(res.classes[1].to_vec(), vec![2]);
        // Compare against brute-force partition by mutual reachability.
        for p in 0..3 {
            for r in 0..3 {
                assert_eq!(res.class_of[p] == res.class_of[r], q.equivalent(p, r));
            }
        }
    }

    #[test]
    fn quotient_of_poset_is_isomorphic_identity() {
        let p = Poset::from_pairs(4, &[(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap();
        let res = p.as_preorder().quotient();
        assert_eq!(res.quotient.n(), 4);
        assert!(res.classes.iter().all(|c| c.len() == 1));
        assert_eq!(res.quotient.pairs(), p.pairs());
    }

    #[test]
    fn cones_on_chain_and_grid() {
        let chain = Poset::chain(3);
        assert_eq!(chain.lower_cone(1).to_vec(), vec![0, 1]);
        assert_eq!(Poset::antichain(3).strict_lower(1).to_vec(), Vec::<usize>::new());
        // 2x2 grid a<b, a<c, b<d, c<d with a=0, b=1, c=2, d=3.
        let grid = Poset::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(grid.upper_cone(1).to_vec(), vec![1, 3]);
        assert_eq!(grid.not_below(1).to_vec(), vec![2, 3]);
        assert_eq!(grid.not_above(1).to_vec(), vec![0, 2]);
        assert_eq!(grid.interval(0, 3).unwrap().to_vec(), vec![1, 2, 3]);
        assert!(grid.cone(ConeKind::Lower, 9).is_err());
    }

    #[test]
    fn downward_checks() {
        let chain = Poset::chain(3);
        assert!(chain.is_downward([0, 1].into_iter().collect()));
        assert!(!chain.is_downward([1].into_iter().collect()));
        let grid = Poset::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert!(grid.is_downward([0, 1, 2].into_iter().collect()));
        assert!(grid.is_upward([1, 2, 3].into_iter().collect()));
    }

    #[test]
    fn cones_are_downward_upward_and_minimal() {
        let grid = Poset::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        for p in 0..grid.n() {
            let down = grid.lower_cone(p);
            assert!(grid.is_downward(down));
            assert!(grid.is_upward(grid.upper_cone(p)));
            // Smallest downward set containing p, by brute force.
            for mask in 0u64..16 {
                let s = PointSet::from_mask(mask);
                if s.contains(p) && grid.is_downward(s) {
                    assert!(down.is_subset(s));
                }
            }
        }
    }

    #[test]
    fn empty_preorder_is_legal() {
        let q = Preorder::from_pairs(0, &[]).unwrap();
        let res = q.quotient();
        assert_eq!(res.quotient.n(), 0);
        assert!(res.classes.is_empty());
    }

    #[test]
    fn linear_extension_respects_order() {
        let grid = Poset::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let ext = grid.linear_extension();
        let pos: Vec<usize> = {
            let mut pos = vec![0; 4];
            for (i, &v) in ext.iter().enumerate() {
                pos[v] = i;
            }
            pos
        };
        for (p, q) in grid.proper_pairs() {
            assert!(pos[p] < pos[q]);
        }
    }

    #[test]
    fn covers_of_chain() {
        assert_eq!(Poset::chain(3).covers(), vec![(0, 1), (1, 2)]);
        let grid = Poset::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(grid.covers(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }
}
