//! Fixed-width bitsets over node indices.
//!
//! Every hypergraph in this crate indexes its nodes densely into a shared
//! [`Universe`](crate::hypergraph::Universe); a [`NodeSet`] is a set of such
//! indices. Index order coincides with lexicographic name order, so the
//! iteration order of a set is also its deterministic output order.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub, SubAssign};

/// Largest number of distinct nodes a universe may hold.
pub const MAX_NODES: usize = 128;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct NodeSet(u128);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    #[inline]
    pub const fn empty() -> Self {
        NodeSet(0)
    }

    #[inline]
    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_NODES, "node index {i} out of range");
        NodeSet(1u128 << i)
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn prefix(n: usize) -> Self {
        assert!(n <= MAX_NODES, "node count {n} out of range");
        if n == MAX_NODES {
            NodeSet(u128::MAX)
        } else {
            NodeSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub const fn from_bits(bits: u128) -> Self {
        NodeSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u128 {
        self.0
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < MAX_NODES && self.0 & (1u128 << i) != 0
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        *self |= NodeSet::singleton(i);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if i < MAX_NODES {
            self.0 &= !(1u128 << i);
        }
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: NodeSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_proper_subset(self, other: NodeSet) -> bool {
        self.is_subset(other) && self.0 != other.0
    }

    #[inline]
    pub const fn intersects(self, other: NodeSet) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: NodeSet) -> bool {
        !self.intersects(other)
    }

    /// Least member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl FromIterator<usize> for NodeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = NodeSet::empty();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl IntoIterator for NodeSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
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

impl ExactSizeIterator for Iter {}

/// Submask enumeration in increasing numeric order.
pub struct Subsets {
    mask: u128,
    next: Option<u128>,
}

impl Iterator for Subsets {
    type Item = NodeSet;

    fn next(&mut self) -> Option<NodeSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(NodeSet(cur))
    }
}

/// Lexicographic order on the ascending member sequences, so `{A}` < `{A,B}` < `{B}`.
impl Ord for NodeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for NodeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitOr for NodeSet {
    type Output = NodeSet;
    #[inline]
    fn bitor(self, rhs: NodeSet) -> NodeSet {
        NodeSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for NodeSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: NodeSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for NodeSet {
    type Output = NodeSet;
    #[inline]
    fn bitand(self, rhs: NodeSet) -> NodeSet {
        NodeSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for NodeSet {
    #[inline]
    fn bitand_assign(&mut self, rhs: NodeSet) {
        self.0 &= rhs.0;
    }
}

impl Sub for NodeSet {
    type Output = NodeSet;
    #[inline]
    fn sub(self, rhs: NodeSet) -> NodeSet {
        NodeSet(self.0 & !rhs.0)
    }
}

impl SubAssign for NodeSet {
    #[inline]
    fn sub_assign(&mut self, rhs: NodeSet) {
        self.0 &= !rhs.0;
    }
}

impl Not for NodeSet {
    type Output = NodeSet;
    #[inline]
    fn not(self) -> NodeSet {
        NodeSet(!self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_all_submasks() {
        let s: NodeSet = [0, 2, 5].into_iter().collect();
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert_eq!(subs[0], NodeSet::empty());
        assert_eq!(*subs.last().unwrap(), s);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(NodeSet::empty().subsets().count(), 1);
    }

    #[test]
    fn order_is_lexicographic_on_members() {
        let a = NodeSet::singleton(0);
        let ab: NodeSet = [0, 1].into_iter().collect();
        let b = NodeSet::singleton(1);
        assert!(a < ab && ab < b);
    }

    #[test]
    fn high_indices() {
        let mut s = NodeSet::singleton(127);
        s.insert(64);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![64, 127]);
        assert_eq!(NodeSet::prefix(128).len(), 128);
        s.remove(127);
        assert_eq!(s.first(), Some(64));
    }
}
