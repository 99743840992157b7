//! Enumeration and algebra of downward sets.

use std::collections::HashMap;

use crate::error::{capacity_err, Result};
use crate::order::Poset;
use crate::pointset::PointSet;

/// Default guard on enumerated ideal families.
pub const DEFAULT_MAX_IDEALS: u64 = 1 << 20;

/// Width guard for counting: set arithmetic and memo keys use one
/// 64-bit word, and counts stay well inside `u64` for 40 elements.
pub const COUNT_WIDTH_LIMIT: usize = 40;

/// The complete list of downward subsets of a poset, in canonical order
/// (cardinality, then lexicographic on the element lists).
#[derive(Clone)]
pub struct IdealFamily {
    poset: Poset,
    ideals: Vec<PointSet>,
}

impl std::fmt::Debug for IdealFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IdealFamily({} ideals of {:?})", self.ideals.len(), self.poset)
    }
}

/// Every downward subset, found by depth-first extension along a linear
/// extension: at each element the set either stays as is or grows by
/// that element when all its strict predecessors are already present.
/// Each branch of the search extends to at least one ideal, so the work
/// is proportional to the answer, not to `2^n`.
pub fn enumerate_ideals(poset: &Poset, max_ideals: u64) -> Result<IdealFamily> {
    let ext = poset.linear_extension();
    let mut out: Vec<PointSet> = Vec::new();
    let mut stack: Vec<(usize, PointSet)> = vec![(0, PointSet::EMPTY)];
    while let Some((i, set)) = stack.pop() {
        if i == ext.len() {
            if out.len() as u64 >= max_ideals {
                return capacity_err(format!(
                    "poset on {} elements has more than {} ideals",
                    poset.n(),
                    max_ideals
                ));
            }
            out.push(set);
            continue;
        }
        let v = ext[i];
        if poset.strict_lower(v).is_subset(set) {
            let mut grown = set;
            grown.insert(v);
            stack.push((i + 1, grown));
        }
        stack.push((i + 1, set));
    }
    out.sort_by(|a, b| PointSet::canonical_cmp(*a, *b));
    Ok(IdealFamily { poset: poset.clone(), ideals: out })
}

/// Number of downward subsets, computed without materializing them:
/// memoized recursion along a linear extension. For the least-index
/// minimal element `v` of the remaining sub-poset, the ideals split
/// into those avoiding `v` (ideals of the remainder minus the up-cone
/// of `v`) and those containing `v` (ideals of the remainder minus
/// `v`).
pub fn count_ideals(poset: &Poset) -> Result<u64> {
    if poset.n() > COUNT_WIDTH_LIMIT {
        return capacity_err(format!(
            "ideal counting limited to {} elements, got {}",
            COUNT_WIDTH_LIMIT,
            poset.n()
        ));
    }
    fn go(poset: &Poset, remaining: PointSet, memo: &mut HashMap<u64, u64>) -> u64 {
        if remaining.is_empty() {
            return 1;
        }
        if let Some(&c) = memo.get(&remaining.mask()) {
            return c;
        }
        let v = remaining
            .iter()
            .find(|&v| poset.strict_lower(v).intersect(remaining).is_empty())
            .expect("nonempty sub-poset has a minimal element");
        let without = go(poset, remaining.difference(poset.upper_cone(v)), memo);
        let with = go(poset, remaining.difference(PointSet::singleton(v)), memo);
        let total = without + with;
        memo.insert(remaining.mask(), total);
        total
    }
    Ok(go(poset, PointSet::full(poset.n()), &mut HashMap::new()))
}

impl IdealFamily {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn ideals(&self) -> &[PointSet] {
        &self.ideals
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    /// Position of an ideal in the canonical order.
    pub fn index_of(&self, set: PointSet) -> Option<usize> {
        self.ideals
            .binary_search_by(|probe| PointSet::canonical_cmp(*probe, set))
            .ok()
    }

    /// The basic sets `B⟨T,F⟩`: ideals containing all of `t` and none
    /// of `f`, in canonical order. Overlapping `t` and `f` simply yield
    /// the empty list.
    pub fn basis_btf(&self, t: PointSet, f: PointSet) -> Vec<PointSet> {
        self.ideals
            .iter()
            .copied()
            .filter(|a| t.is_subset(*a) && f.is_disjoint(*a))
            .collect()
    }

    /// Same filter, as positions into the canonical order.
    pub fn basis_btf_indices(&self, t: PointSet, f: PointSet) -> Vec<usize> {
        self.ideals
            .iter()
            .enumerate()
            .filter(|(_, a)| t.is_subset(**a) && f.is_disjoint(**a))
            .map(|(i, _)| i)
            .collect()
    }

    /// `p^≤` wrapped as a member of the family.
    pub fn principal_ideal(&self, p: usize) -> Result<PointSet> {
        let cone = self.poset.cone(crate::order::ConeKind::Lower, p)?;
        debug_assert!(self.index_of(cone).is_some());
        Ok(cone)
    }

    /// The family ordered by inclusion, as a poset on the canonical
    /// positions. This is the index object of the downset space.
    pub fn containment_poset(&self) -> Result<Poset> {
        let m = self.ideals.len();
        if m > crate::pointset::MAX_POINTS {
            return capacity_err(format!(
                "ideal family with {} members exceeds the {}-element poset backing",
                m,
                crate::pointset::MAX_POINTS
            ));
        }
        let mut pairs = Vec::new();
        for a in 0..m {
            for b in 0..m {
                if self.ideals[a].is_subset(self.ideals[b]) {
                    pairs.push((a, b));
                }
            }
        }
        Poset::from_pairs(m, &pairs)
    }
}
