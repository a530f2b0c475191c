//! Test corpora: every binary matroid on a small ground set, and seeded
//! random matroids, families and positroids.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::family::SubsetFamily;
use crate::linalg::RealizationMatrix;
use crate::matroid::Matroid;
use crate::positroid::{positroid_from_permutation, random_bounded_affine_permutation};
use crate::subset::{all_subsets, k_subsets, GroundSubset};

/// GF(2) rank of a list of row bitmasks.
fn gf2_rank(rows: impl IntoIterator<Item = u32>) -> usize {
    let mut basis: Vec<u32> = Vec::new();
    for mut v in rows {
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// Column matroid of a binary matrix whose rows are bitmasks over the
/// columns (bit `j − 1` is column `j`).
pub fn binary_matroid(n: usize, rows: &[u32]) -> Matroid {
    let table = all_subsets(n)
        .map(|s| gf2_rank(rows.iter().map(|&r| r & s.mask())) as u8)
        .collect();
    Matroid::from_trusted_table(n, table)
}

/// Row spaces of GF(2)^n in reduced row echelon form: one matrix per
/// subspace, including the zero subspace.
pub fn binary_row_spaces(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for k in 0..=n {
        for pivots in k_subsets(n, k) {
            let pivot_cols: Vec<usize> = pivots.elements().map(|e| e - 1).collect();
            // Free positions: columns right of the row's pivot that are not pivots.
            let free: Vec<(usize, usize)> = pivot_cols
                .iter()
                .enumerate()
                .flat_map(|(r, &p)| {
                    (p + 1..n)
                        .filter(|c| !pivots.contains(c + 1))
                        .map(move |c| (r, c))
                })
                .collect();
            for bits in 0..1u64 << free.len() {
                let mut rows: Vec<u32> = pivot_cols.iter().map(|&p| 1 << p).collect();
                for (t, &(r, c)) in free.iter().enumerate() {
                    if bits >> t & 1 == 1 {
                        rows[r] |= 1 << c;
                    }
                }
                out.push(rows);
            }
        }
    }
    out
}

/// Every binary matroid on `{1, ..., n}`, one per row space.
pub fn all_binary_matroids(n: usize) -> Vec<Matroid> {
    let mut out: Vec<Matroid> = binary_row_spaces(n)
        .iter()
        .map(|rows| binary_matroid(n, rows))
        .collect();
    out.sort_by(|a, b| a.rank_table().cmp(b.rank_table()));
    out.dedup();
    out
}

pub fn connected_binary_matroids(n: usize) -> Vec<Matroid> {
    all_binary_matroids(n)
        .into_iter()
        .filter(Matroid::is_connected)
        .collect()
}

/// A uniformly random `k × n` binary matrix's column matroid.
pub fn random_binary_matroid<R: Rng>(rng: &mut R, n: usize, k: usize) -> Matroid {
    let rows: Vec<u32> = (0..k).map(|_| rng.gen_range(0..1u32 << n)).collect();
    binary_matroid(n, &rows)
}

/// Random connected binary matroid on `n ≥ 2` elements by rejection.
pub fn random_connected_binary_matroid<R: Rng>(rng: &mut R, n: usize) -> Matroid {
    loop {
        let k = rng.gen_range(1..n);
        let m = random_binary_matroid(rng, n, k);
        if m.is_connected() {
            return m;
        }
    }
}

/// Random matroid drawn from a mix of sources: binary and ternary column
/// matroids, positroids and uniform matroids.
pub fn random_matroid<R: Rng>(rng: &mut R, n: usize) -> Matroid {
    match rng.gen_range(0..4) {
        0 => {
            let k = rng.gen_range(0..=n);
            random_binary_matroid(rng, n, k)
        }
        1 if n > 0 => {
            let k = rng.gen_range(1..=n);
            let rows: Vec<Vec<i64>> = (0..k)
                .map(|_| (0..n).map(|_| rng.gen_range(0..3)).collect())
                .collect();
            Matroid::from_matrix(&RealizationMatrix::over_prime(3, rows).expect("3 is prime"))
                .expect("column matroid")
        }
        2 if n > 0 => positroid_from_permutation(&random_bounded_affine_permutation(n, rng.gen()))
            .expect("bounded affine permutations give positroids"),
        _ => {
            let k = rng.gen_range(0..=n);
            Matroid::uniform(k, n).expect("k ≤ n")
        }
    }
}

/// Each subset is kept with probability `density`; `∅` and `E` are added
/// on a coin flip each.
pub fn random_family<R: Rng>(rng: &mut R, n: usize, density: f64) -> SubsetFamily {
    let mut sets: Vec<GroundSubset> = all_subsets(n)
        .filter(|s| !s.is_empty() && s.len() < n)
        .filter(|_| rng.gen_bool(density))
        .collect();
    if rng.gen_bool(0.5) {
        sets.push(GroundSubset::EMPTY);
    }
    if rng.gen_bool(0.5) || sets.is_empty() {
        sets.push(GroundSubset::full(n));
    }
    SubsetFamily::new(n, sets).expect("subsets fit")
}

pub fn random_subset<R: Rng>(rng: &mut R, n: usize) -> GroundSubset {
    GroundSubset::from_mask(rng.gen_range(0..1u32 << n))
}

pub fn random_member<R: Rng>(rng: &mut R, f: &SubsetFamily) -> Option<GroundSubset> {
    f.members().choose(rng).copied()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn gf2_ranks() {
        assert_eq!(gf2_rank([0b011, 0b110, 0b101]), 2);
        assert_eq!(gf2_rank([0b001, 0b010, 0b100]), 3);
        assert_eq!(gf2_rank([0, 0]), 0);
    }

    /// Oracle: Gaussian binomial sums, the number of subspaces of GF(2)^n.
    fn subspace_count(n: u32) -> usize {
        let q = 2u128;
        (0..=n)
            .map(|k| {
                let mut num = 1u128;
                let mut den = 1u128;
                for i in 0..k {
                    num *= q.pow(n - i) - 1;
                    den *= q.pow(i + 1) - 1;
                }
                (num / den) as usize
            })
            .sum()
    }

    #[test]
    fn row_space_counts() {
        for n in 1..=6 {
            assert_eq!(binary_row_spaces(n as usize).len(), subspace_count(n));
        }
        assert_eq!(subspace_count(6), 2825);
    }

    #[test]
    fn distinct_row_spaces_give_distinct_matroids() {
        assert_eq!(all_binary_matroids(5).len(), subspace_count(5));
    }

    #[test]
    fn binary_matroid_matches_matrix_rank() {
        let m = binary_matroid(3, &[0b101, 0b011]);
        let via = Matroid::from_matrix(
            &RealizationMatrix::over_prime(2, vec![vec![1, 0, 1], vec![0, 1, 1]]).unwrap(),
        )
        .unwrap();
        assert_eq!(m, via);
    }

    #[test]
    fn random_generators_are_seeded() {
        let a = random_matroid(&mut ChaCha8Rng::seed_from_u64(5), 6);
        let b = random_matroid(&mut ChaCha8Rng::seed_from_u64(5), 6);
        assert_eq!(a, b);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            assert!(random_connected_binary_matroid(&mut rng, 7).is_connected());
        }
    }
}
