use std::fmt;

use crate::positroid::affine::AffinePermutation;
use crate::positroid::interval::CyclicInterval;

/// A corner of the diagram together with the rank bound it imposes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EssentialPosition {
    pub interval: CyclicInterval,
    pub rank_bound: usize,
}

impl fmt::Display for EssentialPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.interval, self.rank_bound)
    }
}

/// Whether `(i, j)` escapes the crossing out: it is neither strictly left of
/// the 1 in row `i` nor strictly below the 1 in column `j`.
fn survives(p: &AffinePermutation, i: i64, j: i64) -> bool {
    let n = p.n() as i64;
    (0..=n).contains(&(j - i)) && p.image(i) <= j && p.preimage(j) >= i
}

/// Upper-right corners of the surviving region, off the `j − i = n` edge.
/// A surviving cell is a corner when the cells directly above it and
/// directly to its right are both crossed out.
pub fn essential_set(p: &AffinePermutation) -> Vec<EssentialPosition> {
    let n = p.n() as i64;
    let rank = p.rank_matrix();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i..i + n {
            if survives(p, i, j) && !survives(p, i - 1, j) && !survives(p, i, j + 1) {
                out.push(EssentialPosition {
                    interval: CyclicInterval::new(p.n(), i, j).expect("on the board"),
                    rank_bound: rank.get(i, j) as usize,
                });
            }
        }
    }
    out
}
