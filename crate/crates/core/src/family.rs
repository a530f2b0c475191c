//! Families of subsets ordered by containment, and their Möbius function.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::subset::{all_subsets, GroundSubset};

/// A deduplicated collection of subsets of `{1, ..., n}`.
///
/// Members are kept sorted by cardinality and then by mask, which is a linear
/// extension of the containment order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetFamily {
    n: usize,
    members: Vec<GroundSubset>,
    index: HashMap<GroundSubset, usize>,
}

impl SubsetFamily {
    pub fn new<I: IntoIterator<Item = GroundSubset>>(n: usize, sets: I) -> Result<Self> {
        let mut members: Vec<GroundSubset> = sets.into_iter().collect();
        if let Some(bad) = members.iter().find(|s| !s.fits(n)) {
            return Err(Error::OutOfGround { subset: *bad, n });
        }
        members.sort_unstable_by_key(|s| (s.len(), s.mask()));
        members.dedup();
        let index = members.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        Ok(SubsetFamily { n, members, index })
    }

    pub fn power_set(n: usize) -> Self {
        Self::new(n, all_subsets(n)).expect("power set fits")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[GroundSubset] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = GroundSubset> + '_ {
        self.members.iter().copied()
    }

    pub fn contains(&self, s: GroundSubset) -> bool {
        self.index.contains_key(&s)
    }

    pub fn index_of(&self, s: GroundSubset) -> Option<usize> {
        self.index.get(&s).copied()
    }

    pub fn member(&self, i: usize) -> GroundSubset {
        self.members[i]
    }

    /// `{E − S : S ∈ F}`: the opposite poset.
    pub fn complements(&self) -> Self {
        Self::new(self.n, self.iter().map(|s| s.complement(self.n))).expect("complements fit")
    }

    pub fn without(&self, z: GroundSubset) -> Self {
        Self::new(self.n, self.iter().filter(|&s| s != z)).expect("subfamily fits")
    }

    pub fn with(&self, z: GroundSubset) -> Result<Self> {
        Self::new(self.n, self.iter().chain(std::iter::once(z)))
    }

    /// Indices of members strictly contained in member `i`. Uses submask
    /// enumeration when the subset lattice below `i` is smaller than the
    /// prefix of members that could precede it.
    pub(crate) fn proper_subsets_of(&self, i: usize) -> Vec<usize> {
        let s = self.members[i];
        if (1usize << s.len()) < i {
            s.submasks()
                .filter(|&t| t != s)
                .filter_map(|t| self.index_of(t))
                .collect()
        } else {
            (0..i)
                .filter(|&j| self.members[j].is_proper_subset_of(s))
                .collect()
        }
    }

    /// Indices of members strictly containing member `i`.
    pub(crate) fn proper_supersets_of(&self, i: usize) -> Vec<usize> {
        let s = self.members[i];
        let above = self.members.len() - i - 1;
        let free = s.complement(self.n);
        if (1usize << free.len()) < above {
            free.submasks()
                .filter(|t| !t.is_empty())
                .filter_map(|t| self.index_of(s.union(t)))
                .collect()
        } else {
            (i + 1..self.members.len())
                .filter(|&j| s.is_proper_subset_of(self.members[j]))
                .collect()
        }
    }

    pub fn mobius(&self) -> Mobius<'_> {
        Mobius {
            family: self,
            rows: RefCell::new(HashMap::new()),
            columns: RefCell::new(HashMap::new()),
        }
    }
}

/// Lazily memoized Möbius function of a [`SubsetFamily`]. Rows `μ(T, ·)` and
/// columns `μ(·, S)` are computed on first use and cached for the lifetime of
/// the value.
pub struct Mobius<'a> {
    family: &'a SubsetFamily,
    rows: RefCell<HashMap<usize, Rc<Vec<BigInt>>>>,
    columns: RefCell<HashMap<usize, Rc<Vec<BigInt>>>>,
}

impl<'a> Mobius<'a> {
    pub fn family(&self) -> &'a SubsetFamily {
        self.family
    }

    /// `μ(T, S)`; zero unless both are members with `T ⊆ S`.
    pub fn value(&self, t: GroundSubset, s: GroundSubset) -> BigInt {
        match (self.family.index_of(t), self.family.index_of(s)) {
            (Some(ti), Some(si)) if t.is_subset_of(s) => self.row(ti)[si].clone(),
            _ => BigInt::zero(),
        }
    }

    /// `μ(T, ·)` over member indices, for the member at index `t`.
    pub fn row(&self, t: usize) -> Rc<Vec<BigInt>> {
        if let Some(r) = self.rows.borrow().get(&t) {
            return Rc::clone(r);
        }
        let fam = self.family;
        let base = fam.member(t);
        let mut row = vec![BigInt::zero(); fam.len()];
        row[t] = BigInt::one();
        let mut above: Vec<usize> = vec![t];
        for si in t + 1..fam.len() {
            let s = fam.member(si);
            if !base.is_subset_of(s) {
                continue;
            }
            let mut acc = BigInt::zero();
            for &ui in &above {
                if fam.member(ui).is_proper_subset_of(s) {
                    acc += &row[ui];
                }
            }
            row[si] = -acc;
            above.push(si);
        }
        let row = Rc::new(row);
        self.rows.borrow_mut().insert(t, Rc::clone(&row));
        row
    }

    /// `μ(·, S)` over member indices, for the member at index `s`.
    pub fn column(&self, s: usize) -> Rc<Vec<BigInt>> {
        if let Some(c) = self.columns.borrow().get(&s) {
            return Rc::clone(c);
        }
        let fam = self.family;
        let top = fam.member(s);
        let mut col = vec![BigInt::zero(); fam.len()];
        col[s] = BigInt::one();
        let mut below: Vec<usize> = vec![s];
        for ti in (0..s).rev() {
            let t = fam.member(ti);
            if !t.is_subset_of(top) {
                continue;
            }
            let mut acc = BigInt::zero();
            for &ui in &below {
                if t.is_proper_subset_of(fam.member(ui)) {
                    acc += &col[ui];
                }
            }
            col[ti] = -acc;
            below.push(ti);
        }
        let col = Rc::new(col);
        self.columns.borrow_mut().insert(s, Rc::clone(&col));
        col
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(e: &[usize]) -> GroundSubset {
        GroundSubset::from_elements(e.iter().copied())
    }

    /// Oracle: signed count of chains `T = U0 ⊊ U1 ⊊ ... ⊊ Uc = S` in F.
    fn chain_sum(f: &SubsetFamily, t: GroundSubset, s: GroundSubset) -> i64 {
        if t == s {
            return 1;
        }
        if !t.is_proper_subset_of(s) {
            return 0;
        }
        f.iter()
            .filter(|&u| t.is_proper_subset_of(u) && u.is_subset_of(s))
            .map(|u| -chain_sum(f, u, s))
            .sum()
    }

    #[test]
    fn dedup_and_order() {
        let f = SubsetFamily::new(3, [set(&[1, 2]), set(&[1]), set(&[1, 2]), set(&[])]).unwrap();
        assert_eq!(f.members(), &[set(&[]), set(&[1]), set(&[1, 2])]);
        assert!(f.contains(set(&[1])));
        assert!(!f.contains(set(&[2])));
        assert!(SubsetFamily::new(2, [set(&[3])]).is_err());
    }

    #[test]
    fn boolean_lattice_values() {
        let f = SubsetFamily::power_set(2);
        let mu = f.mobius();
        assert_eq!(mu.value(set(&[1]), set(&[1])), BigInt::one());
        assert_eq!(mu.value(set(&[]), set(&[1, 2])), BigInt::from(1));
        assert_eq!(mu.value(set(&[]), set(&[1])), BigInt::from(-1));
        assert_eq!(mu.value(set(&[1]), set(&[2])), BigInt::zero());
    }

    #[test]
    fn chain_family() {
        let f = SubsetFamily::new(2, [set(&[]), set(&[1]), set(&[1, 2])]).unwrap();
        assert_eq!(f.mobius().value(set(&[]), set(&[1, 2])), BigInt::zero());
    }

    #[test]
    fn rows_and_columns_match_chain_sums() {
        let sets = [
            set(&[]),
            set(&[1]),
            set(&[2]),
            set(&[1, 2]),
            set(&[2, 3]),
            set(&[1, 2, 3]),
            set(&[3, 4]),
            set(&[1, 2, 3, 4]),
        ];
        let f = SubsetFamily::new(4, sets).unwrap();
        let mu = f.mobius();
        for (ti, t) in f.iter().enumerate() {
            let row = mu.row(ti);
            for (si, s) in f.iter().enumerate() {
                let expect = BigInt::from(chain_sum(&f, t, s));
                assert_eq!(row[si], expect, "row μ({t},{s})");
                assert_eq!(mu.column(si)[ti], expect, "column μ({t},{s})");
            }
        }
    }

    #[test]
    fn subset_index_helpers_agree_with_scans() {
        let f = SubsetFamily::power_set(5);
        for i in 0..f.len() {
            let s = f.member(i);
            let mut sub = f.proper_subsets_of(i);
            sub.sort();
            let expect: Vec<usize> = (0..f.len())
                .filter(|&j| f.member(j).is_proper_subset_of(s))
                .collect();
            assert_eq!(sub, expect);
            let mut sup = f.proper_supersets_of(i);
            sup.sort();
            let expect: Vec<usize> = (0..f.len())
                .filter(|&j| s.is_proper_subset_of(f.member(j)))
                .collect();
            assert_eq!(sup, expect);
        }
    }

    #[test]
    fn complements_reverse_order() {
        let f = SubsetFamily::new(3, [set(&[1]), set(&[1, 2])]).unwrap();
        let g = f.complements();
        assert_eq!(g.members(), &[set(&[3]), set(&[2, 3])]);
    }
}
