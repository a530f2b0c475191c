//! Expected codimension: the `a` and `b` coefficient systems over a subset
//! family, the family-relative invariant `ec_F`, flacets, and the canonical
//! `ec` computed through the direct-sum decomposition.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::family::SubsetFamily;
use crate::matroid::Matroid;
use crate::subset::{all_subsets, GroundSubset};

/// `c(S) = #S − rk S`.
#[inline]
pub fn corank_excess(m: &Matroid, s: GroundSubset) -> usize {
    s.len() - m.rank_of(s)
}

/// `k − rk S`.
#[inline]
fn codim(m: &Matroid, s: GroundSubset) -> usize {
    m.rank() - m.rank_of(s)
}

/// Integer values attached to the members of a family, in family order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTable {
    entries: Vec<(GroundSubset, BigInt)>,
}

impl CoeffTable {
    fn from_family(family: &SubsetFamily, values: Vec<BigInt>) -> Self {
        CoeffTable {
            entries: family.iter().zip(values).collect(),
        }
    }

    pub fn from_entries(mut entries: Vec<(GroundSubset, BigInt)>) -> Self {
        entries.sort_by_key(|(s, _)| (s.len(), s.mask()));
        CoeffTable { entries }
    }

    pub fn get(&self, s: GroundSubset) -> Option<&BigInt> {
        self.entries
            .binary_search_by_key(&(s.len(), s.mask()), |(t, _)| (t.len(), t.mask()))
            .ok()
            .map(|i| &self.entries[i].1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (GroundSubset, &BigInt)> {
        self.entries.iter().map(|(s, v)| (*s, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Members carrying a nonzero value.
    pub fn support(&self) -> Vec<GroundSubset> {
        self.iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(s, _)| s)
            .collect()
    }
}

/// `a_F` by the defining recursion in containment order:
/// `a(S) = c(S) − Σ_{T ∈ F, T ⊊ S} a(T)`, with `a(∅) = 0`.
pub fn coeff_a(m: &Matroid, family: &SubsetFamily) -> CoeffTable {
    let mut values: Vec<BigInt> = Vec::with_capacity(family.len());
    for (i, s) in family.iter().enumerate() {
        if s.is_empty() {
            values.push(BigInt::zero());
            continue;
        }
        let mut acc = BigInt::from(corank_excess(m, s));
        for j in family.proper_subsets_of(i) {
            acc -= &values[j];
        }
        values.push(acc);
    }
    CoeffTable::from_family(family, values)
}

/// `b_F(T) = Σ_S (k − rk S) μ(T, S)`, evaluated top-down through the
/// equivalent recursion `b(T) = (k − rk T) − Σ_{S ∈ F, S ⊋ T} b(S)`.
pub fn coeff_b(m: &Matroid, family: &SubsetFamily) -> CoeffTable {
    let mut values: Vec<BigInt> = vec![BigInt::zero(); family.len()];
    for i in (0..family.len()).rev() {
        let t = family.member(i);
        let mut acc = BigInt::from(codim(m, t));
        for j in family.proper_supersets_of(i) {
            acc -= &values[j];
        }
        values[i] = acc;
    }
    CoeffTable::from_family(family, values)
}

/// `ec_F(M) = Σ_{S ∈ F} (k − rk S) a_F(S)`.
pub fn ec_with(m: &Matroid, family: &SubsetFamily) -> BigInt {
    coeff_a(m, family)
        .iter()
        .map(|(s, a)| a * BigInt::from(codim(m, s)))
        .sum()
}

/// The same quantity summed the other way: `Σ_{T ∈ F} c(T) b_F(T)`.
pub fn ec_with_via_b(m: &Matroid, family: &SubsetFamily) -> BigInt {
    coeff_b(m, family)
        .iter()
        .map(|(t, b)| b * BigInt::from(corank_excess(m, t)))
        .sum()
}

/// Nonempty `S` with both `M|S` and `M/S` connected. `E` is always a
/// member when `M` is connected (the empty contraction counts as connected).
pub fn flacets(m: &Matroid) -> SubsetFamily {
    let sets = all_subsets(m.n())
        .filter(|s| !s.is_empty())
        .filter(|&s| m.is_connected_restriction(s) && m.is_connected_contraction(s));
    SubsetFamily::new(m.n(), sets).expect("flacets fit the ground set")
}

/// `ec(M)` through the direct-sum decomposition. Each component contributes
/// its `ec` over its own flacets; codimensions are measured against the
/// total rank, so every pair of components `M_i`, `M_j` adds the cross term
/// `k_i c(E_j) + k_j c(E_i)`.
pub fn ec(m: &Matroid) -> BigInt {
    let parts: Vec<Matroid> = m
        .connected_components()
        .into_iter()
        .map(|component| m.restrict(component).matroid)
        .collect();
    let within: BigInt = parts.iter().map(|p| ec_with(p, &flacets(p))).sum();
    let excess = |p: &Matroid| p.n() - p.rank();
    let cross = m.rank() * excess(m) - parts.iter().map(|p| p.rank() * excess(p)).sum::<usize>();
    within + BigInt::from(cross)
}

/// `ec(M ⊕ N) − ec(M) − ec(N) = k_M c(E_N) + k_N c(E_M)`.
pub fn direct_sum_cross_term(m: &Matroid, n: &Matroid) -> usize {
    m.rank() * (n.n() - n.rank()) + n.rank() * (m.n() - m.rank())
}

/// The three differences produced by removing `Z` from `F`, keyed on
/// `F − {Z}` for the coefficient tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemovalDelta {
    pub ec: BigInt,
    pub a: CoeffTable,
    pub b: CoeffTable,
}

/// Predicted change from dropping `z` out of `family`:
/// `Δec = a(Z) b(Z)`, `Δa(S) = a(Z) μ(Z, S)`, `Δb(S) = μ(S, Z) b(Z)`.
pub fn removal_delta(m: &Matroid, family: &SubsetFamily, z: GroundSubset) -> Result<RemovalDelta> {
    let zi = family.index_of(z).ok_or(Error::NotInFamily { set: z })?;
    let a = coeff_a(m, family);
    let b = coeff_b(m, family);
    let az = a.get(z).expect("z is a member").clone();
    let bz = b.get(z).expect("z is a member").clone();
    let mobius = family.mobius();
    let row = mobius.row(zi);
    let column = mobius.column(zi);
    let mut da = Vec::with_capacity(family.len() - 1);
    let mut db = Vec::with_capacity(family.len() - 1);
    for (i, s) in family.iter().enumerate() {
        if i == zi {
            continue;
        }
        da.push((s, &az * &row[i]));
        db.push((s, &column[i] * &bz));
    }
    Ok(RemovalDelta {
        ec: &az * &bz,
        a: CoeffTable::from_entries(da),
        b: CoeffTable::from_entries(db),
    })
}

impl RemovalDelta {
    /// The differences obtained by recomputing everything on `F − {Z}`.
    pub fn observed(m: &Matroid, family: &SubsetFamily, z: GroundSubset) -> Result<RemovalDelta> {
        if !family.contains(z) {
            return Err(Error::NotInFamily { set: z });
        }
        let smaller = family.without(z);
        let (a_full, a_less) = (coeff_a(m, family), coeff_a(m, &smaller));
        let (b_full, b_less) = (coeff_b(m, family), coeff_b(m, &smaller));
        let diff = |full: &CoeffTable, less: &CoeffTable| {
            CoeffTable::from_entries(
                less.iter()
                    .map(|(s, v)| (s, full.get(s).expect("member of both") - v))
                    .collect(),
            )
        };
        Ok(RemovalDelta {
            ec: ec_with(m, family) - ec_with(m, &smaller),
            a: diff(&a_full, &a_less),
            b: diff(&b_full, &b_less),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn set(e: &[usize]) -> GroundSubset {
        GroundSubset::from_elements(e.iter().copied())
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn corank_excess_examples() {
        let sq = catalog::square();
        assert_eq!(corank_excess(&sq, GroundSubset::EMPTY), 0);
        assert_eq!(corank_excess(&sq, set(&[1, 2, 3])), 1);
        let p = catalog::pappus();
        assert_eq!(corank_excess(&p, p.ground()), 6);
    }

    #[test]
    fn square_coefficients() {
        let sq = catalog::square();
        let f = SubsetFamily::power_set(8);
        let a = coeff_a(&sq, &f);
        assert_eq!(a.get(set(&[1, 2, 3])), Some(&int(1)));
        assert_eq!(a.get(set(&[1, 2, 3, 4])), Some(&int(0)));
        assert_eq!(a.get(set(&[1, 2, 4])), Some(&int(0)));
        let b = coeff_b(&sq, &f);
        assert_eq!(b.get(set(&[1, 2, 3])), Some(&int(1)));
        assert_eq!(b.get(sq.ground()), Some(&int(0)));
        assert_eq!(ec_with(&sq, &f), int(4));
        assert_eq!(ec_with_via_b(&sq, &f), int(4));
    }

    #[test]
    fn square_b_by_direct_mobius_sum() {
        // b({1,2,3}) = Σ_{S ⊇ 123} (3 − rk S)(−1)^{#S − 3}
        let sq = catalog::square();
        let t = set(&[1, 2, 3]);
        let direct: i64 = all_subsets(8)
            .filter(|s| t.is_subset_of(*s))
            .map(|s| {
                let sign = if (s.len() - 3) % 2 == 0 { 1 } else { -1 };
                sign * (3 - sq.rank_of(s) as i64)
            })
            .sum();
        assert_eq!(direct, 1);
        let b = coeff_b(&sq, &SubsetFamily::power_set(8));
        assert_eq!(b.get(t), Some(&int(direct)));
    }

    #[test]
    fn pappus_lines_have_a_one() {
        let p = catalog::pappus();
        let f = SubsetFamily::power_set(9);
        let a = coeff_a(&p, &f);
        for line in catalog::pappus_lines().lines {
            assert_eq!(a.get(line), Some(&int(1)), "line {line}");
        }
        assert_eq!(ec_with(&p, &f), int(9));
    }

    #[test]
    fn uniform_has_zero_ec() {
        for n in 0..=6 {
            for k in 0..=n {
                let u = Matroid::uniform(k, n).unwrap();
                assert_eq!(
                    ec_with(&u, &SubsetFamily::power_set(n)),
                    int(0),
                    "U({k},{n})"
                );
                assert_eq!(ec(&u), int(0));
            }
        }
    }

    #[test]
    fn independent_sets_have_zero_a() {
        let sq = catalog::square();
        let a = coeff_a(&sq, &SubsetFamily::power_set(8));
        for (s, v) in a.iter() {
            if sq.is_independent(s) {
                assert!(v.is_zero(), "{s}");
            }
        }
    }

    #[test]
    fn flacet_examples() {
        let p = catalog::pappus();
        let fl = flacets(&p);
        let triples: Vec<_> = fl.iter().filter(|s| s.len() == 3).collect();
        let mut lines = catalog::pappus_lines().lines;
        lines.sort_by_key(|s| s.mask());
        assert_eq!(triples, lines);
        assert!(fl.contains(p.ground()));
        // The remaining flacets are points and full-rank sets, which carry
        // no codimension.
        assert!(fl
            .iter()
            .filter(|s| s.len() != 3)
            .all(|s| s.len() == 1 || p.rank_of(s) == p.rank()));
        assert!(fl.contains(p.ground().without(4)));

        let u24 = Matroid::uniform(2, 4).unwrap();
        let fl = flacets(&u24);
        assert!((1..=4).all(|x| fl.contains(GroundSubset::singleton(x))));

        let sq = catalog::square();
        let triples: Vec<_> = flacets(&sq).iter().filter(|s| s.len() == 3).collect();
        let mut lines = catalog::square_lines().lines;
        lines.sort_by_key(|s| s.mask());
        assert_eq!(triples, lines);
    }

    #[test]
    fn canonical_ec_examples() {
        assert_eq!(ec(&catalog::square()), int(4));
        assert_eq!(ec(&catalog::pappus()), int(9));
        let sq = catalog::square();
        // A loop adds k to the codimension, a coloop adds c(E) = 5.
        let with_loop = sq.loop_extension().unwrap();
        assert_eq!(ec(&with_loop), int(7));
        assert_eq!(ec_with(&with_loop, &SubsetFamily::power_set(9)), int(7));
        let with_coloop = sq.coloop_extension().unwrap();
        assert_eq!(ec(&with_coloop), int(9));
        assert_eq!(ec_with(&with_coloop, &SubsetFamily::power_set(9)), int(9));
        let lc = Matroid::single_loop()
            .direct_sum(&Matroid::single_coloop())
            .unwrap();
        assert_eq!(ec(&lc), int(1));
        assert_eq!(
            direct_sum_cross_term(&Matroid::single_loop(), &Matroid::single_coloop()),
            1
        );
        assert_eq!(ec(&Matroid::empty()), int(0));
    }

    #[test]
    fn removal_delta_examples() {
        let sq = catalog::square();
        let f = SubsetFamily::power_set(8);
        let z = set(&[1, 2, 3]);
        let predicted = removal_delta(&sq, &f, z).unwrap();
        assert_eq!(predicted.ec, int(1));
        assert_eq!(predicted, RemovalDelta::observed(&sq, &f, z).unwrap());

        let e = removal_delta(&sq, &f, sq.ground()).unwrap();
        assert_eq!(e.ec, int(0));

        // a = 0 at an independent set
        let z = set(&[1, 2, 4]);
        assert_eq!(removal_delta(&sq, &f, z).unwrap().ec, int(0));

        let small = SubsetFamily::new(8, [set(&[1])]).unwrap();
        assert!(matches!(
            removal_delta(&sq, &small, set(&[2])),
            Err(Error::NotInFamily { .. })
        ));
    }
}
