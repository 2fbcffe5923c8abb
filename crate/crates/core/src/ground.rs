//! Subsets of a ground set `{0, .., n-1}` with `n <= 64`, stored as machine words.
//!
//! Everything downstream (matroids, monomial supports, facet families) is built
//! on these two types. All set operations are O(1) word operations.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A subset of `{0, .., n-1}` with bitmask semantics.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSubset {
    mask: u64,
    n: usize,
}

impl GroundSubset {
    pub fn empty(n: usize) -> Self {
        GroundSubset { mask: 0, n }
    }

    pub fn full(n: usize) -> Self {
        GroundSubset { mask: full_mask(n), n }
    }

    pub fn singleton(n: usize, element: usize) -> Self {
        debug_assert!(element < n);
        GroundSubset { mask: 1 << element, n }
    }

    pub fn new(n: usize, members: &[usize]) -> Result<Self> {
        if n > 64 {
            return Err(Error::GroundSetTooLarge(n));
        }
        let mut mask = 0u64;
        for &e in members {
            if e >= n {
                return Err(Error::ElementOutOfRange { element: e, n });
            }
            mask |= 1 << e;
        }
        Ok(GroundSubset { mask, n })
    }

    pub fn from_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n <= 64 && mask & !full_mask(n) == 0);
        GroundSubset { mask, n }
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, element: usize) -> bool {
        element < self.n && self.mask >> element & 1 == 1
    }

    pub fn is_subset_of(&self, other: &GroundSubset) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn union(&self, other: &GroundSubset) -> GroundSubset {
        GroundSubset { mask: self.mask | other.mask, n: self.n }
    }

    pub fn intersection(&self, other: &GroundSubset) -> GroundSubset {
        GroundSubset { mask: self.mask & other.mask, n: self.n }
    }

    pub fn difference(&self, other: &GroundSubset) -> GroundSubset {
        GroundSubset { mask: self.mask & !other.mask, n: self.n }
    }

    pub fn complement(&self) -> GroundSubset {
        GroundSubset { mask: !self.mask & full_mask(self.n), n: self.n }
    }

    pub fn with(&self, element: usize) -> GroundSubset {
        debug_assert!(element < self.n);
        GroundSubset { mask: self.mask | 1 << element, n: self.n }
    }

    pub fn without(&self, element: usize) -> GroundSubset {
        GroundSubset { mask: self.mask & !(1 << element), n: self.n }
    }

    /// Member indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.mask)
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for GroundSubset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for i in self.iter() {
            seq.serialize_element(&i)?;
        }
        seq.end()
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// A list of subsets of a common ground set, kept in canonical order
/// (ascending as integers under the bitmask encoding).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SubsetFamily {
    n: usize,
    masks: Vec<u64>,
}

impl SubsetFamily {
    pub fn new(n: usize, subsets: Vec<GroundSubset>) -> Result<Self> {
        if n > 64 {
            return Err(Error::GroundSetTooLarge(n));
        }
        for s in &subsets {
            if s.n() != n {
                return Err(Error::MixedAmbient(n, s.n()));
            }
        }
        Ok(Self::from_masks(n, subsets.into_iter().map(|s| s.mask()).collect()))
    }

    pub fn from_index_lists(n: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let subsets = lists
            .iter()
            .map(|l| GroundSubset::new(n, l))
            .collect::<Result<Vec<_>>>()?;
        SubsetFamily::new(n, subsets)
    }

    /// Builds a family from raw bitmasks, sorting and deduplicating.
    pub fn from_masks(n: usize, mut masks: Vec<u64>) -> Self {
        masks.sort_unstable();
        masks.dedup();
        SubsetFamily { n, masks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn iter(&self) -> impl Iterator<Item = GroundSubset> + '_ {
        self.masks.iter().map(|&m| GroundSubset::from_mask(self.n, m))
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        self.masks.binary_search(&mask).is_ok()
    }

    /// True when no member is contained in another.
    pub fn is_antichain(&self) -> bool {
        for (i, &a) in self.masks.iter().enumerate() {
            for &b in &self.masks[i + 1..] {
                if a & !b == 0 || b & !a == 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_index_lists(&self) -> Vec<Vec<usize>> {
        self.iter().map(|s| s.indices()).collect()
    }
}

impl Serialize for SubsetFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for s in self.iter() {
            seq.serialize_element(&s)?;
        }
        seq.end()
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

/// All submasks of `mask` of size `k`, in increasing numeric order.
pub(crate) fn submasks_of_size(mask: u64, k: usize) -> Vec<u64> {
    let bits: Vec<usize> = BitIter(mask).collect();
    if k > bits.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    // Gosper's hack on the compressed index space, then scatter back.
    for compressed in k_subset_masks(bits.len(), k) {
        let mut m = 0u64;
        let mut c = compressed;
        while c != 0 {
            let i = c.trailing_zeros() as usize;
            m |= 1 << bits[i];
            c &= c - 1;
        }
        out.push(m);
    }
    out.sort_unstable();
    out
}

/// All masks of popcount `k` over `{0,..,n-1}`, in increasing numeric order
/// (Gosper's hack).
pub fn k_subset_masks(n: usize, k: usize) -> Vec<u64> {
    debug_assert!(n <= 64);
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    if k == n {
        return vec![full_mask(n)];
    }
    let limit = full_mask(n);
    let mut out = Vec::new();
    let mut v: u64 = (1u64 << k) - 1;
    loop {
        out.push(v);
        // next mask with the same popcount
        let t = v | (v - 1);
        if t == !0 {
            break;
        }
        let next = (t + 1) | (((!t & (t + 1)) - 1) >> (v.trailing_zeros() + 1));
        if next > limit {
            break;
        }
        v = next;
    }
    out
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
