//! Bitmask subsets of a ground set `{1, ..., n}`.
//!
//! Element `e` (1-based) lives at bit `e - 1`. All set operations are single
//! word operations; the only thing a [`GroundSubset`] does not know is `n`,
//! so complements take the full mask explicitly.

use std::fmt;

/// Largest ground set for which a full rank table may be materialized.
pub const DEFAULT_MAX_GROUND: usize = 24;

/// Hard ceiling imposed by the 32-bit mask and table indexing.
pub const HARD_MAX_GROUND: usize = 30;

/// Ground-set cap for power-set operations. `MATROID_MAX_N` raises or lowers
/// it, clamped to [`HARD_MAX_GROUND`].
pub fn max_ground_size() -> usize {
    static CAP: std::sync::OnceLock<usize> = std::sync::OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("MATROID_MAX_N")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .map(|v| v.min(HARD_MAX_GROUND))
            .unwrap_or(DEFAULT_MAX_GROUND)
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroundSubset(u32);

impl GroundSubset {
    pub const EMPTY: GroundSubset = GroundSubset(0);

    #[inline]
    pub const fn from_mask(mask: u32) -> Self {
        GroundSubset(mask)
    }

    /// The full set `{1, ..., n}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 32 {
            GroundSubset(u32::MAX)
        } else {
            GroundSubset((1u32 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(element: usize) -> Self {
        debug_assert!((1..=32).contains(&element));
        GroundSubset(1 << (element - 1))
    }

    /// Builds a subset from 1-based element labels.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        elements.into_iter().fold(Self::EMPTY, |acc, e| acc.with(e))
    }

    #[inline]
    pub const fn mask(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
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
    pub fn contains(self, element: usize) -> bool {
        (1..=32).contains(&element) && self.0 & (1 << (element - 1)) != 0
    }

    #[inline]
    pub fn with(self, element: usize) -> Self {
        GroundSubset(self.0 | (1 << (element - 1)))
    }

    #[inline]
    pub fn without(self, element: usize) -> Self {
        GroundSubset(self.0 & !(1 << (element - 1)))
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        GroundSubset(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        GroundSubset(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        GroundSubset(self.0 & !other.0)
    }

    /// Complement inside `{1, ..., n}`.
    #[inline]
    pub const fn complement(self, n: usize) -> Self {
        GroundSubset(Self::full(n).0 & !self.0)
    }

    #[inline]
    pub const fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_proper_subset_of(self, other: Self) -> bool {
        self.is_subset_of(other) && self.0 != other.0
    }

    /// True when no bit at position `n` or above is set.
    #[inline]
    pub const fn fits(self, n: usize) -> bool {
        self.0 & !Self::full(n).0 == 0
    }

    /// Smallest element, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Elements in increasing order, 1-based.
    pub fn elements(self) -> Elements {
        Elements(self.0)
    }

    /// All submasks, including the set itself and the empty set.
    pub fn submasks(self) -> Submasks {
        Submasks {
            set: self.0,
            next: Some(self.0),
        }
    }

    /// Maps the set through a strictly increasing relabeling: the `i`-th
    /// element of `domain` (in increasing order) becomes element `i`.
    pub fn compress(self, domain: GroundSubset) -> GroundSubset {
        let mut out = 0u32;
        for (slot, e) in domain.elements().enumerate() {
            if self.contains(e) {
                out |= 1 << slot;
            }
        }
        GroundSubset(out)
    }

    /// Inverse of [`compress`](Self::compress).
    pub fn expand(self, domain: GroundSubset) -> GroundSubset {
        let mut out = GroundSubset::EMPTY;
        for (slot, e) in domain.elements().enumerate() {
            if self.0 & (1 << slot) != 0 {
                out = out.with(e);
            }
        }
        out
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.elements().collect()
    }
}

impl fmt::Debug for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", e)?;
        }
        f.write_str("}")
    }
}

pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(tz as usize + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Elements {}

/// Descending submask enumeration (`s = (s - 1) & set`).
pub struct Submasks {
    set: u32,
    next: Option<u32>,
}

impl Iterator for Submasks {
    type Item = GroundSubset;

    #[inline]
    fn next(&mut self) -> Option<GroundSubset> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & self.set)
        };
        Some(GroundSubset(cur))
    }
}

/// All subsets of `{1, ..., n}` in mask order.
pub fn all_subsets(n: usize) -> impl Iterator<Item = GroundSubset> {
    (0..(1u64 << n)).map(|m| GroundSubset(m as u32))
}

/// All `k`-subsets of `{1, ..., n}` in increasing mask order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    let next = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some((1u64 << k) - 1)
    };
    KSubsets {
        limit: 1u64 << n,
        next,
    }
}

pub struct KSubsets {
    limit: u64,
    next: Option<u64>,
}

impl Iterator for KSubsets {
    type Item = GroundSubset;

    fn next(&mut self) -> Option<GroundSubset> {
        let cur = self.next?;
        if cur >= self.limit {
            self.next = None;
            return None;
        }
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(GroundSubset(cur as u32))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let s = GroundSubset::from_elements([1, 3, 4]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(3));
        assert!(!s.contains(2));
        assert_eq!(s.complement(5), GroundSubset::from_elements([2, 5]));
        assert_eq!(s.to_vec(), vec![1, 3, 4]);
        assert_eq!(format!("{}", s), "{1,3,4}");
        assert!(s.fits(4));
        assert!(!s.fits(3));
    }

    #[test]
    fn submasks_cover_power_set() {
        let s = GroundSubset::from_elements([2, 4, 5]);
        let subs: Vec<_> = s.submasks().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset_of(s)));
        assert_eq!(subs.last(), Some(&GroundSubset::EMPTY));
    }

    #[test]
    fn k_subsets_counts() {
        for n in 0..=8 {
            for k in 0..=n + 1 {
                let got: Vec<_> = k_subsets(n, k).collect();
                let expect = all_subsets(n).filter(|s| s.len() == k).count();
                assert_eq!(got.len(), expect, "n={n} k={k}");
                assert!(got.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn compress_expand_roundtrip() {
        let domain = GroundSubset::from_elements([2, 3, 6]);
        let s = GroundSubset::from_elements([3, 6]);
        let c = s.compress(domain);
        assert_eq!(c, GroundSubset::from_elements([2, 3]));
        assert_eq!(c.expand(domain), s);
    }
}
