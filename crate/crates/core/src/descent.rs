//! Subsets of generator indices, stored as bitmasks.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A subset of `[0, rank)` with `rank <= 32`. The subset `I` is encoded as
/// `sum of 2^i for i in I`, which is also its row/column index in the
/// descent-class matrix.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DescentSet(u32);

pub const MAX_RANK: usize = 32;

impl DescentSet {
    pub const EMPTY: Self = Self(0);

    pub const fn from_bits(bits: u32) -> Self {
        Self(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// `[0, rank)`.
    pub fn full(rank: usize) -> Self {
        assert!(rank <= MAX_RANK, "rank {rank} exceeds {MAX_RANK}");
        if rank == MAX_RANK {
            Self(u32::MAX)
        } else {
            Self((1u32 << rank) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        Self(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_RANK && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    pub fn with(mut self, i: usize) -> Self {
        self.insert(i);
        self
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        Self(self.0 & !other.0)
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }

    /// All subsets of `self`, the empty set first.
    pub fn subsets(self) -> impl Iterator<Item = Self> {
        let mask = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask { None } else { Some((cur | !mask).wrapping_add(1) & mask) };
            Some(Self(cur))
        })
    }

    /// Descents that survive deleting position `k`: elements below `k - 1`
    /// are kept, elements from `k` on move down by one, and `k - 1` is
    /// dropped unless `k` was present.
    pub fn dec(self, k: usize) -> Self {
        self.iter()
            .filter_map(|x| match x {
                _ if x + 1 < k => Some(x),
                _ if x >= k => Some(x - 1),
                _ => None,
            })
            .collect()
    }

    /// All subsets of `[0, rank)` in index order.
    pub fn all(rank: usize) -> impl Iterator<Item = Self> {
        assert!(rank < MAX_RANK, "rank {rank} too large to list all subsets");
        (0..1u32 << rank).map(Self)
    }
}

impl FromIterator<usize> for DescentSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}
