use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::positroid::rank_matrix::CyclicRankMatrix;

/// Largest `n` accepted by the permutation-side operations.
pub const MAX_AFFINE_N: usize = 64;

/// A bounded affine permutation: a bijection `π` of the integers with
/// `π(i + n) = π(i) + n` and `i ≤ π(i) ≤ i + n`, given by its window
/// `π(1), ..., π(n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePermutation {
    window: Vec<i64>,
}

impl AffinePermutation {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len();
        if n == 0 {
            return Err(Error::InvalidWindow("empty window".into()));
        }
        if n > MAX_AFFINE_N {
            return Err(Error::InvalidWindow(format!(
                "n = {n} exceeds {MAX_AFFINE_N}"
            )));
        }
        let mut seen = vec![false; n];
        for (idx, &v) in window.iter().enumerate() {
            let i = idx as i64 + 1;
            if v < i || v > i + n as i64 {
                return Err(Error::InvalidWindow(format!(
                    "π({i}) = {v} is outside [{i}, {}]",
                    i + n as i64
                )));
            }
            let residue = (v - 1).rem_euclid(n as i64) as usize;
            if std::mem::replace(&mut seen[residue], true) {
                return Err(Error::InvalidWindow(format!(
                    "two values share the residue of {v} mod {n}"
                )));
            }
        }
        Ok(AffinePermutation { window })
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `π(m)` for any integer `m`.
    pub fn image(&self, m: i64) -> i64 {
        let n = self.n() as i64;
        let r = (m - 1).rem_euclid(n);
        self.window[r as usize] + (m - 1 - r)
    }

    /// `π⁻¹(m)` for any integer `m`.
    pub fn preimage(&self, m: i64) -> i64 {
        let n = self.n() as i64;
        let r = (m - 1).rem_euclid(n);
        let idx = self
            .window
            .iter()
            .position(|&v| (v - 1).rem_euclid(n) == r)
            .expect("window is a bijection on residues");
        // π(idx + 1 + t n) = window[idx] + t n, and m − window[idx] is a multiple of n.
        idx as i64 + 1 + (m - self.window[idx])
    }

    /// Rank `k = Σ (π(i) − i) / n` of the associated positroid.
    pub fn rank(&self) -> usize {
        let excess: i64 = self
            .window
            .iter()
            .enumerate()
            .map(|(idx, &v)| v - (idx as i64 + 1))
            .sum();
        (excess / self.n() as i64) as usize
    }

    /// Number of inversions: pairs `i ∈ [n]`, `i < m < i + n` with
    /// `π(m) < π(i)`, i.e. `i, m, π(m), π(i)` cyclically consecutive.
    pub fn length(&self) -> usize {
        let n = self.n() as i64;
        (1..=n)
            .map(|i| {
                let pi = self.image(i);
                (i + 1..i + n).filter(|&m| self.image(m) < pi).count()
            })
            .sum()
    }

    /// Whether the permutation matrix has a 1 at `(i, j)`.
    pub fn has_one(&self, i: i64, j: i64) -> bool {
        self.image(i) == j
    }

    /// `r[i][j] = (j − i + 1) − #{m ∈ [i, j] : π(m) ≤ j}`.
    pub fn rank_matrix(&self) -> CyclicRankMatrix {
        let n = self.n() as i64;
        let rows = (1..=n)
            .map(|i| {
                (i..=i + n)
                    .map(|j| {
                        let nested = (i..=j).filter(|&m| self.image(m) <= j).count() as i64;
                        (j - i + 1 - nested) as u8
                    })
                    .collect()
            })
            .collect();
        CyclicRankMatrix::from_rows(rows).expect("rows have n + 1 entries")
    }

    /// Permutation whose window is lifted from a permutation `w` of `[n]`
    /// (1-based images): forced except at fixed points, where `choose_loop`
    /// decides between `π(i) = i` and `π(i) = i + n`.
    fn lift(w: &[usize], mut choose_loop: impl FnMut(usize) -> bool) -> Self {
        let n = w.len() as i64;
        let window = w
            .iter()
            .enumerate()
            .map(|(idx, &target)| {
                let i = idx as i64 + 1;
                let t = target as i64;
                if t > i {
                    t
                } else if t < i {
                    t + n
                } else if choose_loop(idx) {
                    i
                } else {
                    i + n
                }
            })
            .collect();
        AffinePermutation { window }
    }
}

impl fmt::Debug for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffinePermutation({})", self)
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(i64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Reads the permutation off a rank matrix: a 1 sits at `(i, j)` when
/// `r[i][j] = r[i][j−1] = r[i+1][j] ≠ r[i+1][j−1]`.
pub fn to_affine_permutation(r: &CyclicRankMatrix) -> Result<AffinePermutation> {
    let n = r.n() as i64;
    let mut window = Vec::with_capacity(n as usize);
    for i in 1..=n {
        let ones: Vec<i64> = (i..=i + n)
            .filter(|&j| {
                let here = r.get_extended(i, j);
                here == r.get_extended(i, j - 1)
                    && here == r.get_extended(i + 1, j)
                    && here != r.get_extended(i + 1, j - 1)
            })
            .collect();
        match ones.as_slice() {
            [j] => window.push(*j),
            _ => {
                return Err(Error::MalformedMatrix(format!(
                    "row {i} has {} ones (expected exactly one)",
                    ones.len()
                )))
            }
        }
    }
    AffinePermutation::new(window)
        .map_err(|e| Error::MalformedMatrix(format!("columns do not form a permutation: {e}")))
}

pub fn from_affine_permutation(p: &AffinePermutation) -> CyclicRankMatrix {
    p.rank_matrix()
}

/// Uniform permutation of `[n]`, lifted to the window with a fair coin at
/// every fixed point. Deterministic per seed.
pub fn random_bounded_affine_permutation(n: usize, seed: u64) -> AffinePermutation {
    assert!(
        (1..=MAX_AFFINE_N).contains(&n),
        "n must be in 1..={MAX_AFFINE_N}"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut w: Vec<usize> = (1..=n).collect();
    w.shuffle(&mut rng);
    AffinePermutation::lift(&w, |_| rng.gen_bool(0.5))
}

/// Every bounded affine permutation of size `n`, in a fixed order.
pub fn all_bounded_affine_permutations(n: usize) -> Vec<AffinePermutation> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut w: Vec<usize> = (1..=n).collect();
    loop {
        let fixed: Vec<usize> = (0..n).filter(|&i| w[i] == i + 1).collect();
        for bits in 0..1u64 << fixed.len() {
            out.push(AffinePermutation::lift(&w, |idx| {
                let slot = fixed.iter().position(|&f| f == idx).expect("fixed point");
                bits >> slot & 1 == 1
            }));
        }
        if !next_permutation(&mut w) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
