//! Exact rank computations over prime fields and the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::subset::GroundSubset;

/// Largest admissible prime modulus.
pub const MAX_PRIME: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalars {
    /// Entries reduced into `0..p`.
    Prime { p: u64, rows: Vec<Vec<u64>> },
    /// Entries in lowest terms.
    Rational { rows: Vec<Vec<BigRational>> },
}

/// A `k × n` matrix whose columns realize a matroid on `{1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationMatrix {
    rows: usize,
    cols: usize,
    scalars: Scalars,
}

impl RealizationMatrix {
    /// Builds a matrix over GF(p), reducing every entry into `0..p`.
    pub fn over_prime(p: u64, rows: Vec<Vec<i64>>) -> Result<Self> {
        if !(2..=MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidMatrix(format!("{p} is not a prime ≤ 2^31")));
        }
        let (r, c) = shape(&rows)?;
        let rows = rows
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|x| x.rem_euclid(p as i64) as u64)
                    .collect()
            })
            .collect();
        Ok(RealizationMatrix {
            rows: r,
            cols: c,
            scalars: Scalars::Prime { p, rows },
        })
    }

    pub fn over_rationals(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let (r, c) = shape(&rows)?;
        // BigRational normalizes on construction.
        Ok(RealizationMatrix {
            rows: r,
            cols: c,
            scalars: Scalars::Rational { rows },
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn scalars(&self) -> &Scalars {
        &self.scalars
    }

    /// Dimension of the span of the columns in `subset`.
    pub fn column_rank(&self, subset: GroundSubset) -> usize {
        let cols: Vec<usize> = subset.elements().map(|e| e - 1).collect();
        match &self.scalars {
            Scalars::Prime { p, rows } => {
                let m: Vec<Vec<u64>> = rows
                    .iter()
                    .map(|row| cols.iter().map(|&c| row[c]).collect())
                    .collect();
                rank_mod_p(m, *p)
            }
            Scalars::Rational { rows } => {
                let m: Vec<Vec<BigRational>> = rows
                    .iter()
                    .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
                    .collect();
                rank_rational(m)
            }
        }
    }
}

fn shape<T>(rows: &[Vec<T>]) -> Result<(usize, usize)> {
    let r = rows.len();
    if r == 0 {
        return Err(Error::InvalidMatrix("matrix has no rows".into()));
    }
    let c = rows[0].len();
    if c == 0 {
        return Err(Error::InvalidMatrix("matrix has no columns".into()));
    }
    if rows.iter().any(|row| row.len() != c) {
        return Err(Error::InvalidMatrix("rows have unequal lengths".into()));
    }
    Ok((r, c))
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Row rank over GF(p). Entries must already be reduced.
pub fn rank_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = pow_mod(m[rank][col], p - 2, p);
        for r in rank + 1..rows {
            if m[r][col] == 0 {
                continue;
            }
            let factor = m[r][col] * inv % p;
            let (top, bottom) = m.split_at_mut(r);
            for (x, &y) in bottom[0][col..].iter_mut().zip(&top[rank][col..]) {
                *x = (*x + p - factor * y % p) % p;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Row rank over the rationals.
pub fn rank_rational(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].recip();
        for r in rank + 1..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &inv;
            let (top, bottom) = m.split_at_mut(r);
            for (x, y) in bottom[0][col..].iter_mut().zip(&top[rank][col..]) {
                *x -= &factor * y;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Row rank of an integer matrix, computed over the rationals.
pub fn rank_integer(m: &[Vec<i64>]) -> usize {
    rank_rational(
        m.iter()
            .map(|row| {
                row.iter()
                    .map(|&x| BigRational::from_integer(BigInt::from(x)))
                    .collect()
            })
            .collect(),
    )
}

/// Parses `"a"`, `"-a"` or `"a/b"` into a rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let parse_int = |s: &str| {
        s.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad rational `{text}`")))
    };
    match text.split_once('/') {
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{text}`")));
            }
            Ok(BigRational::new(parse_int(num)?, den))
        }
        None => Ok(BigRational::from_integer(parse_int(text)?)),
    }
}

pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else if q.is_negative() {
        format!("-{}/{}", q.numer().abs(), q.denom())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn gf2_identity_has_full_rank() {
        let m = RealizationMatrix::over_prime(2, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])
            .unwrap();
        assert_eq!(m.column_rank(GroundSubset::full(3)), 3);
        assert_eq!(m.column_rank(GroundSubset::from_elements([1, 3])), 2);
    }

    #[test]
    fn gf2_dependency() {
        // third column is the sum of the first two
        let m = RealizationMatrix::over_prime(2, vec![vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        assert_eq!(m.column_rank(GroundSubset::full(3)), 2);
        let m3 = RealizationMatrix::over_prime(3, vec![vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        assert_eq!(m3.column_rank(GroundSubset::full(3)), 2);
    }

    #[test]
    fn negative_entries_are_reduced() {
        let m = RealizationMatrix::over_prime(5, vec![vec![-1, 4]]).unwrap();
        match m.scalars() {
            Scalars::Prime { rows, .. } => assert_eq!(rows[0], vec![4, 4]),
            _ => unreachable!(),
        }
        assert_eq!(m.column_rank(GroundSubset::full(2)), 1);
    }

    #[test]
    fn rejects_composite_modulus_and_ragged_rows() {
        assert!(RealizationMatrix::over_prime(4, vec![vec![1]]).is_err());
        assert!(RealizationMatrix::over_prime(7, vec![vec![1, 2], vec![1]]).is_err());
        assert!(RealizationMatrix::over_prime(7, vec![]).is_err());
    }

    #[test]
    fn rational_rank() {
        let rows = vec![vec![q(1, 2), q(1, 3)], vec![q(3, 2), q(1, 1)]];
        assert_eq!(rank_rational(rows), 1);
        assert_eq!(rank_integer(&[vec![1, 0], vec![0, 1], vec![1, 1]]), 2);
    }

    #[test]
    fn rational_text_roundtrip() {
        for s in ["3", "-7/4", "0", "5/11"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
