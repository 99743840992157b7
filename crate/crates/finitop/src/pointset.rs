//! Bit-indexed sets over a ground set of at most 64 points.

use std::fmt;

/// Hard limit on ground-set size: everything is backed by a `u64` mask.
pub const MAX_POINTS: usize = 64;

/// A subset of `{0, .., n-1}` stored as a bitmask.
///
/// Deliberately does not implement `Ord`: the canonical ordering used
/// throughout (cardinality first, then lexicographic on the ascending
/// element list) differs from plain mask order, so comparisons go through
/// [`PointSet::canonical_cmp`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PointSet(u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn full(n: usize) -> PointSet {
        debug_assert!(n <= MAX_POINTS);
        if n == MAX_POINTS {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(p: usize) -> PointSet {
        debug_assert!(p < MAX_POINTS);
        PointSet(1u64 << p)
    }

    pub fn from_mask(mask: u64) -> PointSet {
        PointSet(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, p: usize) -> bool {
        p < MAX_POINTS && self.0 >> p & 1 == 1
    }

    pub fn insert(&mut self, p: usize) {
        debug_assert!(p < MAX_POINTS);
        self.0 |= 1u64 << p;
    }

    pub fn remove(&mut self, p: usize) {
        self.0 &= !(1u64 << p);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: PointSet) -> PointSet {
        PointSet(self.0 | other.0)
    }

    pub fn intersect(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    pub fn difference(self, other: PointSet) -> PointSet {
        PointSet(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> PointSet {
        PointSet(!self.0 & Self::full(n).0)
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: PointSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Elements in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let p = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(p)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Canonical order: cardinality first, then lexicographic on the
    /// ascending element lists. For equal cardinality the lists first
    /// differ at the lowest bit of `a XOR b`; the set owning that bit
    /// has the smaller leading element.
    pub fn canonical_cmp(a: PointSet, b: PointSet) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match a.len().cmp(&b.len()) {
            Ordering::Equal => {
                let d = a.0 ^ b.0;
                if d == 0 {
                    Ordering::Equal
                } else if a.0 >> d.trailing_zeros() & 1 == 1 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            ord => ord,
        }
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = PointSet::EMPTY;
        for p in iter {
            s.insert(p);
        }
        s
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "}}")
    }
}

/// Sorts a family of sets into canonical order and removes duplicates.
pub fn canonicalize_family(sets: &mut Vec<PointSet>) {
    sets.sort_by(|a, b| PointSet::canonical_cmp(*a, *b));
    sets.dedup();
}
