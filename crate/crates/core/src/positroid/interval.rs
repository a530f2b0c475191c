use std::fmt;

use crate::subset::GroundSubset;

/// The cyclic interval `[i, j] = {i, i+1, ..., j}` read mod `n`, with
/// `1 ≤ i ≤ n` and `0 ≤ j − i ≤ n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicInterval {
    n: usize,
    start: usize,
    end: usize,
}

impl CyclicInterval {
    /// Normalizes any integer pair with `0 ≤ j − i ≤ n` so that the start
    /// lies in `1..=n`.
    pub fn new(n: usize, i: i64, j: i64) -> Option<Self> {
        let width = j - i;
        if n == 0 || width < 0 || width > n as i64 {
            return None;
        }
        let start = (i - 1).rem_euclid(n as i64) + 1;
        Some(CyclicInterval {
            n,
            start: start as usize,
            end: (start + width) as usize,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn start(&self) -> usize {
        self.start
    }

    /// End representative; may exceed `n`.
    pub fn end(&self) -> usize {
        self.end
    }

    /// `j − i`.
    pub fn width(&self) -> usize {
        self.end - self.start
    }

    /// Number of distinct elements: `j − i + 1`, capped at `n`.
    pub fn cardinality(&self) -> usize {
        (self.width() + 1).min(self.n)
    }

    pub fn contains(&self, element: usize) -> bool {
        let offset = (element + self.n - self.start) % self.n;
        offset <= self.width()
    }

    pub fn to_subset(&self) -> GroundSubset {
        (0..self.cardinality())
            .map(|t| (self.start - 1 + t) % self.n + 1)
            .fold(GroundSubset::EMPTY, GroundSubset::with)
    }

    /// Every interval `[i, j]` with `1 ≤ i ≤ n` and `0 ≤ j − i ≤ max_width`.
    pub fn all(n: usize, max_width: usize) -> impl Iterator<Item = CyclicInterval> {
        (1..=n).flat_map(move |i| {
            (0..=max_width.min(n)).map(move |w| CyclicInterval {
                n,
                start: i,
                end: i + w,
            })
        })
    }
}

impl fmt::Display for CyclicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.start, self.end)
    }
}

/// Whether `s` is empty, everything, or a single cyclic run.
pub fn is_cyclic_interval(n: usize, s: GroundSubset) -> bool {
    if s.is_empty() || s == GroundSubset::full(n) {
        return true;
    }
    let starts = s
        .elements()
        .filter(|&x| {
            let prev = if x == 1 { n } else { x - 1 };
            !s.contains(prev)
        })
        .count();
    starts == 1
}

/// Whether the blocks form a non-crossing partition of the cycle `1..n`:
/// no `a < b < c < d` with `a, c` in one block and `b, d` in another.
pub fn is_noncrossing(blocks: &[GroundSubset]) -> bool {
    blocks.iter().enumerate().all(|(i, p)| {
        blocks[i + 1..].iter().all(|q| {
            // Label the elements of p ∪ q in order and count cyclic runs;
            // two blocks cross exactly when the labels alternate 4+ times.
            let labels: Vec<bool> = p.union(*q).elements().map(|x| p.contains(x)).collect();
            let mut runs = labels.windows(2).filter(|w| w[0] != w[1]).count() + 1;
            if runs > 1 && labels.first() == labels.last() {
                runs -= 1;
            }
            runs < 4
        })
    })
}
