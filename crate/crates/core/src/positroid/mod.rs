//! Positroids: matroids cut out by rank conditions on cyclic intervals, with
//! their two encodings (cyclic rank matrices and bounded affine
//! permutations), lengths and essential sets.

mod affine;
mod essential;
mod interval;
mod rank_matrix;

use std::collections::BTreeMap;

use num_bigint::BigInt;

pub use affine::{
    all_bounded_affine_permutations, from_affine_permutation, random_bounded_affine_permutation,
    to_affine_permutation, AffinePermutation, MAX_AFFINE_N,
};
pub use essential::{essential_set, EssentialPosition};
pub use interval::{is_cyclic_interval, is_noncrossing, CyclicInterval};
pub use rank_matrix::{cyclic_rank_matrix, validate_rank_matrix, CyclicRankMatrix};

use crate::ecodim::coeff_a;
use crate::error::{Error, Result};
use crate::family::SubsetFamily;
use crate::matroid::Matroid;
use crate::subset::{k_subsets, max_ground_size, GroundSubset};

/// Upper bounds on the ranks of some cyclic intervals of `[n]`. The rank
/// of the generated matroid is the bound on the full interval, or `n` when
/// none is given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalRanks {
    n: usize,
    bounds: BTreeMap<CyclicInterval, usize>,
}

impl IntervalRanks {
    pub fn new(n: usize) -> Self {
        IntervalRanks {
            n,
            bounds: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds the bound `rk [i, j] ≤ rank`, keeping the smaller of two bounds
    /// on the same set.
    pub fn bound(mut self, i: i64, j: i64, rank: usize) -> Result<Self> {
        let iv = CyclicInterval::new(self.n, i, j).ok_or_else(|| {
            Error::InconsistentRanks(format!(
                "[{i},{j}] is not a cyclic interval of [{}]",
                self.n
            ))
        })?;
        let iv = self.canonical(iv);
        let slot = self.bounds.entry(iv).or_insert(rank);
        *slot = (*slot).min(rank);
        Ok(self)
    }

    pub fn from_matrix(r: &CyclicRankMatrix) -> Self {
        let mut out = IntervalRanks::new(r.n());
        for (iv, rank) in r.intervals() {
            let iv = out.canonical(iv);
            let slot = out.bounds.entry(iv).or_insert(rank as usize);
            *slot = (*slot).min(rank as usize);
        }
        out
    }

    pub fn from_essential_set(n: usize, k: usize, ess: &[EssentialPosition]) -> Self {
        let mut out = IntervalRanks::new(n);
        out.bounds.insert(out.full(), k);
        for e in ess {
            let iv = out.canonical(e.interval);
            let slot = out.bounds.entry(iv).or_insert(e.rank_bound);
            *slot = (*slot).min(e.rank_bound);
        }
        out
    }

    /// Every interval covering all of `[n]` is stored as `[1, n]`.
    fn canonical(&self, iv: CyclicInterval) -> CyclicInterval {
        if iv.cardinality() == self.n {
            self.full()
        } else {
            iv
        }
    }

    fn full(&self) -> CyclicInterval {
        CyclicInterval::new(self.n, 1, self.n as i64).expect("n ≥ 1")
    }

    pub fn rank(&self) -> usize {
        self.bounds
            .get(&self.full())
            .copied()
            .unwrap_or(self.n)
            .min(self.n)
    }

    pub fn iter(&self) -> impl Iterator<Item = (CyclicInterval, usize)> + '_ {
        self.bounds.iter().map(|(iv, r)| (*iv, *r))
    }

    fn admits(&self, b: GroundSubset) -> bool {
        self.bounds
            .iter()
            .all(|(iv, &r)| b.intersection(iv.to_subset()).len() <= r)
    }

    fn bases(&self) -> Vec<GroundSubset> {
        k_subsets(self.n, self.rank())
            .filter(|&b| self.admits(b))
            .collect()
    }
}

/// The matroid whose bases are the `k`-sets meeting every bounded interval
/// `I` in at most `r(I)` elements. Fails unless the result attains every
/// bound exactly.
pub fn positroid_from_interval_ranks(r: &IntervalRanks) -> Result<Matroid> {
    let n = r.n();
    if n == 0 {
        return Err(Error::InconsistentRanks("positroids need n ≥ 1".into()));
    }
    if n > max_ground_size() {
        return Err(Error::GroundTooLarge {
            n,
            max: max_ground_size(),
        });
    }
    let bases = r.bases();
    if bases.is_empty() {
        return Err(Error::InconsistentRanks(format!(
            "no {}-subset satisfies every bound",
            r.rank()
        )));
    }
    let m = Matroid::from_bases(n, &bases)
        .map_err(|e| Error::InconsistentRanks(format!("bounds do not generate a matroid: {e}")))?;
    for (iv, bound) in r.iter() {
        let got = m.rank_of(iv.to_subset());
        if got != bound {
            return Err(Error::InconsistentRanks(format!(
                "rk {iv} = {got} in the generated matroid, but the bound is {bound}"
            )));
        }
    }
    Ok(m)
}

/// The positroid encoded by `p`.
pub fn positroid_from_permutation(p: &AffinePermutation) -> Result<Matroid> {
    positroid_from_interval_ranks(&IntervalRanks::from_matrix(&p.rank_matrix()))
}

/// Whether the interval ranks of `m` already determine `m`.
pub fn is_positroid(m: &Matroid) -> bool {
    if m.n() == 0 {
        return true;
    }
    let bounds = IntervalRanks::from_matrix(&cyclic_rank_matrix(m));
    bounds.bases() == m.bases()
}

/// The affine permutation of a positroid. Other matroids are rejected
/// rather than mapped to their positroid envelope.
pub fn affine_permutation_of(m: &Matroid) -> Result<AffinePermutation> {
    if !is_positroid(m) {
        return Err(Error::NotPositroid);
    }
    to_affine_permutation(&cyclic_rank_matrix(m))
}

/// `ec` over the cyclic-interval family, read off the permutation: the
/// coefficient `a` is the permutation-matrix entry, so only the intervals
/// `[i, π(i)]` with `π(i) < i + n` contribute, each with `k − rk`.
pub fn ec_positroid(p: &AffinePermutation) -> usize {
    let n = p.n() as i64;
    let k = p.rank();
    let r = p.rank_matrix();
    (1..=n)
        .filter(|&i| p.image(i) < i + n)
        .map(|i| k - r.get(i, p.image(i)) as usize)
        .sum()
}

/// All cyclic intervals of `[n]`, including `∅` and `[n]`.
pub fn interval_family(n: usize) -> SubsetFamily {
    let sets = CyclicInterval::all(n, n)
        .map(|iv| iv.to_subset())
        .chain(std::iter::once(GroundSubset::EMPTY));
    SubsetFamily::new(n, sets).expect("intervals fit")
}

/// Intervals `[i, j]` with `0 ≤ j − i ≤ n − 2` where the coefficient `a`
/// over the interval family disagrees with the permutation-matrix entry.
pub fn interval_coefficient_mismatches(
    m: &Matroid,
    p: &AffinePermutation,
) -> Vec<(CyclicInterval, BigInt)> {
    let n = m.n();
    let a = coeff_a(m, &interval_family(n));
    CyclicInterval::all(n, n.saturating_sub(2))
        .filter(|_| n >= 2)
        .filter_map(|iv| {
            let got = a.get(iv.to_subset()).cloned().unwrap_or_default();
            let want = BigInt::from(p.has_one(iv.start() as i64, iv.end() as i64) as u8);
            (got != want).then_some((iv, got))
        })
        .collect()
}

/// The two sums over the positions of the 1s in one period of the
/// permutation matrix, together with their closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentitySums {
    /// `Σ (π(i) − i + 1)`.
    pub cardinalities: usize,
    /// `n k + n`.
    pub cardinalities_expected: usize,
    /// `Σ #{m ∈ [i, π(i)] : π(m) ≤ π(i)}`.
    pub nested: usize,
    /// `l(π) + n`.
    pub nested_expected: usize,
}

impl IdentitySums {
    pub fn holds(&self) -> bool {
        self.cardinalities == self.cardinalities_expected && self.nested == self.nested_expected
    }
}

pub fn identity_sums(p: &AffinePermutation) -> IdentitySums {
    let n = p.n() as i64;
    let (mut cardinalities, mut nested) = (0usize, 0usize);
    for i in 1..=n {
        let pi = p.image(i);
        cardinalities += (pi - i + 1) as usize;
        nested += (i..=pi).filter(|&m| p.image(m) <= pi).count();
    }
    IdentitySums {
        cardinalities,
        cardinalities_expected: p.n() * p.rank() + p.n(),
        nested,
        nested_expected: p.length() + p.n(),
    }
}
