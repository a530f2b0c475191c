use std::fmt;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::positroid::interval::CyclicInterval;

/// Ranks `r[i][j]` of the cyclic intervals `[i, j]`, stored on the
/// fundamental domain `1 ≤ i ≤ n`, `i ≤ j ≤ i + n` and extended periodically
/// by `r[i + n][j + n] = r[i][j]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclicRankMatrix {
    n: usize,
    entries: Vec<u8>,
}

impl CyclicRankMatrix {
    /// `rows[i - 1][w]` is `r[i][i + w]` for `w` in `0..=n`.
    pub fn from_rows(rows: Vec<Vec<u8>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::MalformedMatrix("no rows".into()));
        }
        if rows.iter().any(|r| r.len() != n + 1) {
            return Err(Error::MalformedMatrix(format!(
                "every row needs {} entries (widths 0..={n})",
                n + 1
            )));
        }
        Ok(CyclicRankMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank of the whole ground set, read off `r[1][n]`.
    pub fn rank(&self) -> usize {
        self.get(1, self.n as i64) as usize
    }

    /// `r[i][j]` for any integers with `0 ≤ j − i ≤ n`.
    pub fn get(&self, i: i64, j: i64) -> u8 {
        let width = j - i;
        assert!(
            (0..=self.n as i64).contains(&width),
            "entry ({i},{j}) is off the cylinder"
        );
        let row = (i - 1).rem_euclid(self.n as i64) as usize;
        self.entries[row * (self.n + 1) + width as usize]
    }

    /// `r[i][j]` extended below the diagonal: `0` on `j = i − 1` (the empty
    /// interval) and `−1` on `j = i − 2`.
    pub fn get_extended(&self, i: i64, j: i64) -> i64 {
        match j - i {
            -1 => 0,
            -2 => -1,
            _ => self.get(i, j) as i64,
        }
    }

    fn set(&mut self, i: usize, width: usize, value: u8) {
        self.entries[(i - 1) * (self.n + 1) + width] = value;
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        self.entries
            .chunks(self.n + 1)
            .map(<[u8]>::to_vec)
            .collect()
    }

    /// The first violated condition, if any.
    pub fn check(&self) -> Result<()> {
        let n = self.n as i64;
        let bad = |msg: String| Err(Error::MalformedMatrix(msg));
        for i in 1..=n {
            if self.get(i, i) > 1 {
                return bad(format!("r[{i}][{i}] = {} is not 0 or 1", self.get(i, i)));
            }
        }
        let k = self.get(1, n);
        for i in 1..=n {
            if self.get(i, i + n - 1) != k || self.get(i, i + n) != k {
                return bad(format!(
                    "full-interval entries in row {i} differ from r[1][n] = {k}"
                ));
            }
        }
        for i in 1..=n {
            for j in i..i + n {
                let r = self.get(i, j) as i64;
                let up = self.get(i - 1, j) as i64 - r;
                let right = self.get(i, j + 1) as i64 - r;
                if !(0..=1).contains(&up) {
                    return bad(format!("r[{}][{j}] − r[{i}][{j}] = {up}", i - 1));
                }
                if !(0..=1).contains(&right) {
                    return bad(format!("r[{i}][{}] − r[{i}][{j}] = {right}", j + 1));
                }
                if j + 1 - (i - 1) <= n
                    && up == 0
                    && right == 0
                    && self.get(i - 1, j + 1) as i64 != r
                {
                    return bad(format!(
                        "r[{i}][{j}] = r[{}][{j}] = r[{i}][{}] but r[{}][{}] differs",
                        i - 1,
                        j + 1,
                        i - 1,
                        j + 1
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }

    pub fn intervals(&self) -> impl Iterator<Item = (CyclicInterval, u8)> + '_ {
        CyclicInterval::all(self.n, self.n)
            .map(move |iv| (iv, self.get(iv.start() as i64, iv.end() as i64)))
    }
}

impl fmt::Debug for CyclicRankMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CyclicRankMatrix(n={})", self.n)?;
        write!(f, "{}", self)
    }
}

/// Staircase rendering: row `i` is indented by `i − 1` columns.
impl fmt::Display for CyclicRankMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().iter().enumerate() {
            let cells: Vec<String> = row.iter().map(u8::to_string).collect();
            writeln!(f, "{}{}", "  ".repeat(i), cells.join(" "))?;
        }
        Ok(())
    }
}

/// `r[i][j] = rk([i, j])` for every cyclic interval of `m`.
pub fn cyclic_rank_matrix(m: &Matroid) -> CyclicRankMatrix {
    let n = m.n();
    assert!(n > 0, "cyclic rank matrices need a nonempty ground set");
    let mut out = CyclicRankMatrix {
        n,
        entries: vec![0; n * (n + 1)],
    };
    for iv in CyclicInterval::all(n, n) {
        out.set(iv.start(), iv.width(), m.rank_of(iv.to_subset()) as u8);
    }
    out
}

pub fn validate_rank_matrix(r: &CyclicRankMatrix) -> bool {
    r.is_valid()
}
