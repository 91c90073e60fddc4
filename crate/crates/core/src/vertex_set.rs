//! Word-sized vertex sets.
//!
//! Every graph handled by this crate has at most [`MAX_ORDER`] vertices, so a
//! subset of `V(G)` fits in a single `u64`. All operations are by value and
//! leave their inputs untouched.

use std::fmt;

use serde::{Serialize, Serializer};

/// Largest supported graph order.
pub const MAX_ORDER: usize = 64;

/// A subset of `{0, .., n-1}` for some `n <= MAX_ORDER`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The full vertex set `{0, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    #[inline]
    #[must_use]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    #[inline]
    #[must_use]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Complement with respect to `{0, .., n-1}`.
    #[inline]
    pub const fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & Self::full(n).0)
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest member, if any.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

#[derive(Clone, Debug)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Serialized as an ascending array of vertex indices.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_complement() {
        assert_eq!(VertexSet::full(0), VertexSet::EMPTY);
        assert_eq!(VertexSet::full(64).len(), 64);
        let s: VertexSet = [0, 2].into_iter().collect();
        assert_eq!(s.complement(4).to_vec(), vec![1, 3]);
    }

    #[test]
    fn iteration_is_ascending() {
        let s: VertexSet = [9, 3, 63, 0].into_iter().collect();
        assert_eq!(s.to_vec(), vec![0, 3, 9, 63]);
        assert_eq!(s.first(), Some(0));
        assert_eq!(format!("{s}"), "{0,3,9,63}");
    }

    proptest! {
        #[test]
        fn set_algebra(a in any::<u64>(), b in any::<u64>(), n in 1usize..=64) {
            let full = VertexSet::full(n);
            let a = VertexSet::from_bits(a).intersection(full);
            let b = VertexSet::from_bits(b).intersection(full);
            prop_assert_eq!(a.union(b).len() + a.intersection(b).len(), a.len() + b.len());
            prop_assert_eq!(a.complement(n).complement(n), a);
            prop_assert!(a.difference(b).is_subset(a));
            prop_assert!(!a.difference(b).intersects(b));
            prop_assert_eq!(a.iter().collect::<VertexSet>(), a);
        }
    }
}
