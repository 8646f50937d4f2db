//! Dense subsets of a carrier of at most 64 elements.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

/// Largest carrier the crate handles; subsets are single machine words.
pub const MAX_ELEMENTS: usize = 64;

/// A subset of `0..n`, stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(x: usize) -> Subset {
        Subset(1u64 << x)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(iter: I) -> Subset {
        iter.into_iter().fold(Subset::EMPTY, |s, x| s.with(x))
    }

    #[inline]
    pub fn contains(self, x: usize) -> bool {
        self.0 >> x & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        let fresh = !self.contains(x);
        self.0 |= 1u64 << x;
        fresh
    }

    #[inline]
    pub fn with(self, x: usize) -> Subset {
        Subset(self.0 | 1u64 << x)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }

    /// Canonical family order: by cardinality, then by the sorted list of
    /// members compared lexicographically.
    pub fn canonical_cmp(&self, other: &Subset) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }

    /// Renders `{a,b,1}` using the given element names.
    pub fn display_with<S: AsRef<str>>(self, names: &[S]) -> String {
        let inner: Vec<&str> = self.iter().map(|x| names[x].as_ref()).collect();
        format!("{{{}}}", inner.join(","))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_elements(iter)
    }
}

pub struct SubsetIter(u64);

impl Iterator for SubsetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for SubsetIter {}

/// Sorts a family of subsets into canonical order and drops duplicates.
pub fn sort_family(family: &mut Vec<Subset>) {
    family.sort_by(Subset::canonical_cmp);
    family.dedup();
}
