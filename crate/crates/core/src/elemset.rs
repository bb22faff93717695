//! Fixed-width bit set over element indices.
//!
//! Product-set closures are unions and table-indexed translations of small
//! subsets, so a single `u128` word covers every supported semigroup order.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

use serde::{Serialize, Serializer};

use crate::semigroup::{ElementId, MAX_ORDER};

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet(u128);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn singleton(x: ElementId) -> Self {
        ElemSet(1u128 << x.index())
    }

    /// The set `{0, …, order-1}`.
    pub fn full(order: usize) -> Self {
        debug_assert!(order <= MAX_ORDER);
        if order == 128 {
            ElemSet(u128::MAX)
        } else {
            ElemSet((1u128 << order) - 1)
        }
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn insert(&mut self, x: ElementId) -> bool {
        let fresh = !self.contains(x);
        self.0 |= 1u128 << x.index();
        fresh
    }

    pub fn remove(&mut self, x: ElementId) -> bool {
        let had = self.contains(x);
        self.0 &= !(1u128 << x.index());
        had
    }

    pub fn contains(self, x: ElementId) -> bool {
        self.0 >> x.index() & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: ElemSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn intersects(self, other: ElemSet) -> bool {
        !self.is_disjoint(other)
    }

    /// Least element, if any.
    pub fn first(self) -> Option<ElementId> {
        (self.0 != 0).then(|| ElementId::new(self.0.trailing_zeros() as usize))
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<ElementId> {
        self.iter().collect()
    }
}

/// Ascending iterator over the members of an [`ElemSet`].
#[derive(Clone)]
pub struct Iter(u128);

impl Iterator for Iter {
    type Item = ElementId;

    fn next(&mut self) -> Option<ElementId> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(ElementId::new(i))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for ElemSet {
    type Item = ElementId;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<ElementId> for ElemSet {
    fn from_iter<I: IntoIterator<Item = ElementId>>(iter: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl Extend<ElementId> for ElemSet {
    fn extend<I: IntoIterator<Item = ElementId>>(&mut self, iter: I) {
        for x in iter {
            self.insert(x);
        }
    }
}

impl BitOr for ElemSet {
    type Output = ElemSet;
    fn bitor(self, rhs: ElemSet) -> ElemSet {
        ElemSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for ElemSet {
    fn bitor_assign(&mut self, rhs: ElemSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for ElemSet {
    type Output = ElemSet;
    fn bitand(self, rhs: ElemSet) -> ElemSet {
        ElemSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for ElemSet {
    fn bitand_assign(&mut self, rhs: ElemSet) {
        self.0 &= rhs.0;
    }
}

impl Sub for ElemSet {
    type Output = ElemSet;
    fn sub(self, rhs: ElemSet) -> ElemSet {
        ElemSet(self.0 & !rhs.0)
    }
}

impl Not for ElemSet {
    type Output = ElemSet;
    fn not(self) -> ElemSet {
        ElemSet(!self.0)
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.iter().map(|x| x.index()))
            .finish()
    }
}

impl Serialize for ElemSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}
