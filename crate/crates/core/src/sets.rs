//! Fixed-width bitsets keyed to the canonical root order.

use std::cmp::Ordering;
use std::fmt;

/// Maximum number of positive roots a [`RootSet`] can address.
pub const MAX_ROOTS: usize = 128;

/// A set of positive-root indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RootSet(u128);

impl RootSet {
    pub const EMPTY: RootSet = RootSet(0);

    /// The set `{0, .., len - 1}`.
    pub fn full(len: usize) -> Self {
        debug_assert!(len <= MAX_ROOTS);
        if len == MAX_ROOTS {
            RootSet(u128::MAX)
        } else {
            RootSet((1u128 << len) - 1)
        }
    }

    pub fn from_bits(bits: u128) -> Self {
        RootSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(index: usize) -> Self {
        RootSet(1u128 << index)
    }

    #[inline]
    pub fn contains(self, index: usize) -> bool {
        (self.0 >> index) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, index: usize) {
        self.0 |= 1u128 << index;
    }

    #[inline]
    pub fn remove(&mut self, index: usize) {
        self.0 &= !(1u128 << index);
    }

    #[inline]
    pub fn union(self, other: RootSet) -> RootSet {
        RootSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: RootSet) -> RootSet {
        RootSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: RootSet) -> RootSet {
        RootSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: RootSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Largest index in the set.
    pub fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(127 - self.0.leading_zeros() as usize)
        }
    }

    pub fn iter(self) -> RootSetIter {
        RootSetIter(self.0)
    }

    /// Canonical order: by cardinality, then lexicographically on the sorted
    /// index lists.
    pub fn canonical_cmp(self, other: RootSet) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut set = RootSet::EMPTY;
        for i in iter {
            set.insert(i);
        }
        set
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_braced(f, self.iter())
    }
}

pub(crate) fn write_braced(f: &mut impl fmt::Write, items: impl Iterator<Item = usize>) -> fmt::Result {
    f.write_char('{')?;
    for (k, i) in items.enumerate() {
        if k > 0 {
            f.write_char(',')?;
        }
        write!(f, "{i}")?;
    }
    f.write_char('}')
}

/// Ascending iterator over the members of a [`RootSet`].
#[derive(Clone)]
pub struct RootSetIter(u128);

impl Iterator for RootSetIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for RootSetIter {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_operations() {
        let a: RootSet = [0, 2].into_iter().collect();
        let b: RootSet = [1, 2].into_iter().collect();
        assert_eq!(a.union(b), RootSet::full(3));
        assert_eq!(a.intersection(b), RootSet::singleton(2));
        assert!(RootSet::singleton(2).is_subset(a));
        assert!(!a.is_subset(b));
        assert_eq!(a.difference(b), RootSet::singleton(0));
        assert_eq!(a.max(), Some(2));
        assert_eq!(RootSet::EMPTY.max(), None);
        assert_eq!(a.to_string(), "{0,2}");
    }

    #[test]
    fn full_width() {
        assert_eq!(RootSet::full(128).len(), 128);
        assert_eq!(RootSet::full(120).max(), Some(119));
        assert_eq!(RootSet::singleton(127).iter().collect::<Vec<_>>(), vec![127]);
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let mut sets: Vec<RootSet> = vec![
            [0, 1, 2].into_iter().collect(),
            [1, 2].into_iter().collect(),
            RootSet::singleton(2),
            [0, 2].into_iter().collect(),
            RootSet::EMPTY,
        ];
        sets.sort_by(|a, b| a.canonical_cmp(*b));
        let shown: Vec<String> = sets.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["{}", "{2}", "{0,2}", "{1,2}", "{0,1,2}"]);
    }
}
