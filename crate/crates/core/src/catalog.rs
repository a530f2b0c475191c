//! Named matroids used throughout the examples and checks.

use num_rational::BigRational;

use crate::linalg::RealizationMatrix;
use crate::matroid::{LinePresentation, Matroid};
use crate::subset::GroundSubset;

fn lines(n: usize, triples: &[[usize; 3]]) -> LinePresentation {
    LinePresentation::new(
        n,
        triples
            .iter()
            .map(|t| GroundSubset::from_elements(t.iter().copied()))
            .collect(),
    )
}

/// Rank 3 on `[8]`: four lines 123, 345, 567, 781 around a quadrilateral.
pub fn square_lines() -> LinePresentation {
    lines(8, &[[1, 2, 3], [3, 4, 5], [5, 6, 7], [7, 8, 1]])
}

pub fn square() -> Matroid {
    Matroid::rank3_from_lines(&square_lines()).expect("square presentation is valid")
}

/// Rank 3 on `[9]` with the nine lines of the Pappus configuration.
pub fn pappus_lines() -> LinePresentation {
    lines(
        9,
        &[
            [1, 2, 3],
            [4, 5, 6],
            [7, 8, 9],
            [1, 5, 7],
            [1, 6, 8],
            [2, 4, 7],
            [2, 6, 9],
            [3, 4, 8],
            [3, 5, 9],
        ],
    )
}

pub fn pappus() -> Matroid {
    Matroid::rank3_from_lines(&pappus_lines()).expect("Pappus presentation is valid")
}

/// Codimension of the Pappus matroid variety in `G(3, 9)`, as reported in
/// the literature (computed there with a computer algebra system, not here).
pub const PAPPUS_REPORTED_CODIM: usize = 8;

/// Codimension of the square matroid variety in `G(3, 8)`, as reported.
pub const SQUARE_REPORTED_CODIM: usize = 4;

/// Homogeneous coordinates of a planar model of the square matroid:
/// corners 1, 3, 5, 7 of the unit square and one point on each side.
pub fn square_model() -> RealizationMatrix {
    let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let points = [
        (q(0, 1), q(0, 1)),
        (q(1, 3), q(0, 1)),
        (q(1, 1), q(0, 1)),
        (q(1, 1), q(2, 5)),
        (q(1, 1), q(1, 1)),
        (q(3, 7), q(1, 1)),
        (q(0, 1), q(1, 1)),
        (q(0, 1), q(5, 11)),
    ];
    let rows = vec![
        points.iter().map(|p| p.0.clone()).collect(),
        points.iter().map(|p| p.1.clone()).collect(),
        points.iter().map(|_| q(1, 1)).collect(),
    ];
    RealizationMatrix::over_rationals(rows).expect("square model is well formed")
}

/// The rank-2 matroid on `[4]` in which `{1,3}` and `{2,4}` are parallel
/// classes. It is not a positroid.
pub fn crossing_parallel_pairs() -> Matroid {
    let b = |x: usize, y: usize| GroundSubset::from_elements([x, y]);
    Matroid::from_bases(4, &[b(1, 2), b(1, 4), b(2, 3), b(3, 4)])
        .expect("crossing pairs form a matroid")
}
