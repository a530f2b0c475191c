//! The trivariate polynomial `s_M`, its Tutte specialization, matroid
//! polytopes, and checks of the valuation identity on supplied matroidal
//! subdivisions.

mod poly;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

pub use poly::{BiPoly, TriPoly};

use crate::error::{Error, Result};
use crate::linalg::rank_integer;
use crate::matroid::Matroid;
use crate::subset::{all_subsets, GroundSubset};

/// Largest ground set accepted by [`s_poly`] (the pair sum costs `3^n`).
pub const S_POLY_MAX_N: usize = 20;

/// `s_M(x, y, z) = Σ_{S ⊆ T} x^{#S − rk S} y^{rk M − rk T} z^{#T − #S}`.
pub fn s_poly(m: &Matroid) -> Result<TriPoly> {
    if m.n() > S_POLY_MAX_N {
        return Err(Error::GroundTooLarge {
            n: m.n(),
            max: S_POLY_MAX_N,
        });
    }
    let k = m.rank() as u32;
    let counts = all_subsets(m.n())
        .par_bridge()
        .fold(HashMap::<(u32, u32, u32), u64>::new, |mut acc, t| {
            let dy = k - m.rank_of(t) as u32;
            for s in t.submasks() {
                let dx = (s.len() - m.rank_of(s)) as u32;
                let dz = (t.len() - s.len()) as u32;
                *acc.entry((dx, dy, dz)).or_default() += 1;
            }
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (key, v) in b {
                *a.entry(key).or_default() += v;
            }
            a
        });
    Ok(TriPoly::from_terms(
        counts.into_iter().map(|(key, v)| (key, BigInt::from(v))),
    ))
}

fn binomial_row(e: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..e {
        let mut next = vec![BigInt::one(); row.len() + 1];
        for i in 1..row.len() {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    row
}

/// `(x − 1)^e` as coefficients of `x^0 .. x^e`.
fn shifted_power(e: u32) -> Vec<BigInt> {
    binomial_row(e)
        .into_iter()
        .enumerate()
        .map(|(i, c)| if (e as usize - i) % 2 == 1 { -c } else { c })
        .collect()
}

/// `s(x − 1, y − 1, 0) = Σ_S (x − 1)^{#S − rk S} (y − 1)^{rk M − rk S}`,
/// read literally: `x` tracks nullity, so a coloop gives `y`.
pub fn tutte_from_s(s: &TriPoly) -> BiPoly {
    let mut out = BiPoly::zero();
    for ((a, b, c), v) in s.terms() {
        if c != 0 {
            continue;
        }
        let (px, py) = (shifted_power(a), shifted_power(b));
        for (i, cx) in px.iter().enumerate() {
            for (j, cy) in py.iter().enumerate() {
                out.add_term(i as u32, j as u32, v * cx * cy);
            }
        }
    }
    out
}

pub fn tutte(m: &Matroid) -> Result<BiPoly> {
    Ok(tutte_from_s(&s_poly(m)?))
}

/// The corank-nullity Tutte polynomial `Σ_S (x − 1)^{rk M − rk S} (y − 1)^{#S − rk S}`:
/// [`tutte`] with its variables exchanged.
pub fn tutte_standard(m: &Matroid) -> Result<BiPoly> {
    Ok(tutte(m)?.swap())
}

/// `∂²s/∂x∂y` at `(1, 1, −1)`, which is `Σ_{S ⊆ T} c(S) (k − rk T) (−1)^{#T − #S}`.
///
/// At `(0, 0, −1)` only pairs with `c(S) = 1` and `k − rk T = 1` would count,
/// which undercounts as soon as some `c(S)` reaches 2 (two loops and a coloop).
pub fn ec_from_s_poly(s: &TriPoly) -> BigInt {
    let one = BigInt::from(1);
    s.mixed_xy_derivative_at(&one, &one, &BigInt::from(-1))
}

pub fn ec_from_s(m: &Matroid) -> Result<BigInt> {
    Ok(ec_from_s_poly(&s_poly(m)?))
}

/// Indicator vectors of the bases.
pub fn polytope_vertices(m: &Matroid) -> Vec<Vec<u8>> {
    m.bases()
        .into_iter()
        .map(|b| (1..=m.n()).map(|e| b.contains(e) as u8).collect())
        .collect()
}

/// Dimension of the affine hull of the basis indicator vectors.
pub fn polytope_dim(m: &Matroid) -> usize {
    let vertices = polytope_vertices(m);
    let Some(first) = vertices.first() else {
        return 0;
    };
    let diffs: Vec<Vec<i64>> = vertices[1..]
        .iter()
        .map(|v| {
            v.iter()
                .zip(first)
                .map(|(&a, &b)| a as i64 - b as i64)
                .collect()
        })
        .collect();
    if diffs.is_empty() {
        0
    } else {
        rank_integer(&diffs)
    }
}

/// A matroid together with the internal faces of a matroidal subdivision of
/// its polytope, each with an asserted dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdivisionWitness {
    pub parent: Matroid,
    pub internal_faces: Vec<(Matroid, usize)>,
}

impl SubdivisionWitness {
    /// The trivial subdivision: the polytope itself is its only internal face.
    pub fn trivial(parent: Matroid) -> Self {
        let dim = polytope_dim(&parent);
        SubdivisionWitness {
            internal_faces: vec![(parent.clone(), dim)],
            parent,
        }
    }

    /// Checks the faces fit the parent and carry their asserted dimensions.
    pub fn validate(&self) -> Result<()> {
        let parent_bases: std::collections::HashSet<GroundSubset> =
            self.parent.bases().into_iter().collect();
        for (idx, (face, asserted)) in self.internal_faces.iter().enumerate() {
            if face.n() != self.parent.n() {
                return Err(Error::GroundSetMismatch(format!(
                    "face {idx} lives on {} elements, the parent on {}",
                    face.n(),
                    self.parent.n()
                )));
            }
            if let Some(basis) = face.bases().into_iter().find(|b| !parent_bases.contains(b)) {
                return Err(Error::FaceNotInParent { face: idx, basis });
            }
            let computed = polytope_dim(face);
            if computed != *asserted {
                return Err(Error::DimensionMismatch {
                    face: idx,
                    asserted: *asserted,
                    computed,
                });
            }
        }
        Ok(())
    }

    /// `(−1)^{dim P(M) − dim P(N)}` for each internal face.
    fn signs(&self) -> Vec<i64> {
        let top = polytope_dim(&self.parent) as i64;
        self.internal_faces
            .iter()
            .map(|(_, d)| if (top - *d as i64) % 2 == 0 { 1 } else { -1 })
            .collect()
    }
}

/// Both sides of the valuation identity for `s` and for `ec`, and the
/// signed face count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationReport {
    pub s_parent: TriPoly,
    pub s_signed_sum: TriPoly,
    pub ec_parent: BigInt,
    pub ec_signed_sum: BigInt,
    pub euler_sum: i64,
}

impl ValuationReport {
    pub fn s_holds(&self) -> bool {
        self.s_parent == self.s_signed_sum
    }

    pub fn ec_holds(&self) -> bool {
        self.ec_parent == self.ec_signed_sum
    }

    pub fn euler_holds(&self) -> bool {
        self.euler_sum == 1
    }

    pub fn holds(&self) -> bool {
        self.s_holds() && self.ec_holds() && self.euler_holds()
    }
}

pub fn check_valuation(w: &SubdivisionWitness) -> Result<ValuationReport> {
    w.validate()?;
    let signs = w.signs();
    let mut s_signed_sum = TriPoly::zero();
    let mut ec_signed_sum = BigInt::zero();
    for ((face, _), &sign) in w.internal_faces.iter().zip(&signs) {
        let s = s_poly(face)?;
        let e = crate::ecodim::ec(face);
        if sign > 0 {
            s_signed_sum = &s_signed_sum + &s;
            ec_signed_sum += e;
        } else {
            s_signed_sum = &s_signed_sum - &s;
            ec_signed_sum -= e;
        }
    }
    Ok(ValuationReport {
        s_parent: s_poly(&w.parent)?,
        s_signed_sum,
        ec_parent: crate::ecodim::ec(&w.parent),
        ec_signed_sum,
        euler_sum: signs.iter().sum(),
    })
}

/// The split of the hypersimplex `Δ(2, 4)` along `x1 + x2 = 1`: two
/// square pyramids meeting in the square with bases `13, 14, 23, 24`.
pub fn delta24_split() -> SubdivisionWitness {
    let pairs = |excluded: &[[usize; 2]]| -> Matroid {
        let bases: Vec<GroundSubset> = crate::subset::k_subsets(4, 2)
            .filter(|b| {
                !excluded
                    .iter()
                    .any(|e| *b == GroundSubset::from_elements(e.iter().copied()))
            })
            .collect();
        Matroid::from_bases(4, &bases).expect("hypersimplex pieces are matroids")
    };
    SubdivisionWitness {
        parent: Matroid::uniform(2, 4).expect("U(2,4)"),
        internal_faces: vec![
            (pairs(&[[3, 4]]), 3),
            (pairs(&[[1, 2]]), 3),
            (pairs(&[[1, 2], [3, 4]]), 2),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::ecodim::{ec, ec_with};
    use crate::family::SubsetFamily;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Oracle: the defining double sum, term by term.
    fn brute_s(m: &Matroid) -> TriPoly {
        let mut p = TriPoly::zero();
        for t in all_subsets(m.n()) {
            for s in all_subsets(m.n()).filter(|s| s.is_subset_of(t)) {
                p.add_term(
                    (s.len() - m.rank_of(s)) as u32,
                    (m.rank() - m.rank_of(t)) as u32,
                    (t.len() - s.len()) as u32,
                    int(1),
                );
            }
        }
        p
    }

    #[test]
    fn one_element_polynomials() {
        let lp = s_poly(&Matroid::single_loop()).unwrap();
        assert_eq!(
            lp,
            TriPoly::from_terms([
                ((0, 0, 0), int(1)),
                ((1, 0, 0), int(1)),
                ((0, 0, 1), int(1))
            ])
        );
        let cl = s_poly(&Matroid::single_coloop()).unwrap();
        assert_eq!(
            cl,
            TriPoly::from_terms([
                ((0, 1, 0), int(1)),
                ((0, 0, 1), int(1)),
                ((0, 0, 0), int(1))
            ])
        );
    }

    #[test]
    fn s_poly_matches_brute_force() {
        for m in [
            catalog::square(),
            Matroid::uniform(2, 5).unwrap(),
            catalog::crossing_parallel_pairs(),
        ] {
            assert_eq!(s_poly(&m).unwrap(), brute_s(&m));
        }
    }

    #[test]
    fn multiplicative_over_direct_sums() {
        let a = Matroid::uniform(1, 3).unwrap();
        let b = catalog::crossing_parallel_pairs();
        let sum = a.direct_sum(&b).unwrap();
        assert_eq!(
            s_poly(&sum).unwrap(),
            &s_poly(&a).unwrap() * &s_poly(&b).unwrap()
        );
    }

    #[test]
    fn tutte_conventions() {
        let coloop = Matroid::single_coloop();
        let t = tutte(&coloop).unwrap();
        assert_eq!(t.coeff(0, 1), int(1));
        assert_eq!(t.term_count(), 1);
        assert_eq!(tutte_standard(&coloop).unwrap().coeff(1, 0), int(1));
        let u = Matroid::uniform(1, 2).unwrap();
        assert_eq!(tutte(&u).unwrap().eval(&int(1), &int(1)), int(2));
        // T(U(2,4)) = x² + 2x + 2y + y² in either convention.
        let t = tutte_standard(&Matroid::uniform(2, 4).unwrap()).unwrap();
        let expected: Vec<((u32, u32), BigInt)> = vec![
            ((0, 1), int(2)),
            ((0, 2), int(1)),
            ((1, 0), int(2)),
            ((2, 0), int(1)),
        ];
        assert_eq!(
            t.terms().map(|(k, v)| (k, v.clone())).collect::<Vec<_>>(),
            expected
        );
    }

    #[test]
    fn ec_from_s_examples() {
        assert_eq!(ec_from_s(&Matroid::single_loop()).unwrap(), int(0));
        let mixed = Matroid::single_coloop()
            .direct_sum(&Matroid::single_loop())
            .unwrap();
        assert_eq!(ec_from_s(&mixed).unwrap(), int(1));
        assert_eq!(ec_with(&mixed, &SubsetFamily::power_set(2)), int(1));
        assert_eq!(ec_from_s(&catalog::square()).unwrap(), int(4));
        assert_eq!(ec_from_s(&catalog::pappus()).unwrap(), int(9));
        let two_loops = Matroid::uniform(1, 1)
            .unwrap()
            .direct_sum(&Matroid::uniform(0, 2).unwrap())
            .unwrap();
        assert_eq!(ec_from_s(&two_loops).unwrap(), int(2));
        assert_eq!(ec_with(&two_loops, &SubsetFamily::power_set(3)), int(2));
        let s = s_poly(&two_loops).unwrap();
        assert_eq!(s.mixed_xy_derivative_at(&int(0), &int(0), &int(-1)), int(0));
    }

    #[test]
    fn polytope_examples() {
        assert_eq!(polytope_vertices(&Matroid::uniform(2, 4).unwrap()).len(), 6);
        let cl = Matroid::single_coloop()
            .direct_sum(&Matroid::single_loop())
            .unwrap();
        assert_eq!(polytope_vertices(&cl), vec![vec![1, 0]]);
        assert_eq!(polytope_vertices(&catalog::square()).len(), 52);
        assert_eq!(polytope_dim(&cl), 0);
        assert_eq!(polytope_dim(&Matroid::uniform(2, 4).unwrap()), 3);
        assert_eq!(polytope_dim(&Matroid::uniform(1, 2).unwrap()), 1);
        assert_eq!(polytope_dim(&Matroid::empty()), 0);
    }

    #[test]
    fn polytope_dim_is_n_minus_components() {
        for m in [
            catalog::square(),
            catalog::crossing_parallel_pairs(),
            Matroid::uniform(0, 3).unwrap(),
        ] {
            assert_eq!(polytope_dim(&m), m.n() - m.connected_components().len());
        }
    }

    #[test]
    fn hypersimplex_split() {
        let w = delta24_split();
        let report = check_valuation(&w).unwrap();
        assert!(report.s_holds());
        assert!(report.ec_holds());
        assert_eq!(report.euler_sum, 1);
        assert_eq!(report.ec_parent, int(0));
    }

    #[test]
    fn trivial_witness_holds() {
        let report = check_valuation(&SubdivisionWitness::trivial(catalog::square())).unwrap();
        assert!(report.holds());
        assert_eq!(report.ec_parent, ec(&catalog::square()));
    }

    #[test]
    fn witness_errors() {
        let mut w = delta24_split();
        w.internal_faces[2].1 = 3;
        assert!(matches!(
            check_valuation(&w),
            Err(Error::DimensionMismatch { face: 2, .. })
        ));
        let mut w = delta24_split();
        w.internal_faces[0].0 = Matroid::uniform(2, 5).unwrap();
        assert!(matches!(
            check_valuation(&w),
            Err(Error::GroundSetMismatch(_))
        ));
        let w = SubdivisionWitness {
            parent: catalog::crossing_parallel_pairs(),
            internal_faces: vec![(Matroid::uniform(2, 4).unwrap(), 3)],
        };
        assert!(matches!(
            check_valuation(&w),
            Err(Error::FaceNotInParent { face: 0, .. })
        ));
    }
}
