use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

/// Sparse polynomial in `x, y, z` with integer coefficients. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TriPoly {
    terms: BTreeMap<(u32, u32, u32), BigInt>,
}

impl TriPoly {
    pub fn zero() -> Self {
        TriPoly::default()
    }

    pub fn one() -> Self {
        TriPoly::monomial(0, 0, 0, BigInt::one())
    }

    pub fn monomial(dx: u32, dy: u32, dz: u32, coeff: BigInt) -> Self {
        let mut p = TriPoly::zero();
        p.add_term(dx, dy, dz, coeff);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32, u32), BigInt)>>(terms: I) -> Self {
        let mut p = TriPoly::zero();
        for ((dx, dy, dz), c) in terms {
            p.add_term(dx, dy, dz, c);
        }
        p
    }

    pub fn add_term(&mut self, dx: u32, dy: u32, dz: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let key = (dx, dy, dz);
        let slot = self.terms.entry(key).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coeff(&self, dx: u32, dy: u32, dz: u32) -> BigInt {
        self.terms.get(&(dx, dy, dz)).cloned().unwrap_or_default()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32, u32), &BigInt)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `p(y, x, z)`.
    pub fn swap_xy(&self) -> Self {
        TriPoly::from_terms(self.terms().map(|((a, b, c), v)| ((b, a, c), v.clone())))
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt, z: &BigInt) -> BigInt {
        self.terms()
            .map(|((a, b, c), v)| v * Pow::pow(x, a) * Pow::pow(y, b) * Pow::pow(z, c))
            .sum()
    }

    /// `∂²p / ∂x ∂y` evaluated at `(x, y, z)`.
    pub fn mixed_xy_derivative_at(&self, x: &BigInt, y: &BigInt, z: &BigInt) -> BigInt {
        self.terms()
            .filter(|((a, b, _), _)| *a >= 1 && *b >= 1)
            .map(|((a, b, c), v)| {
                v * BigInt::from(a)
                    * BigInt::from(b)
                    * Pow::pow(x, a - 1)
                    * Pow::pow(y, b - 1)
                    * Pow::pow(z, c)
            })
            .sum()
    }
}

impl Add for &TriPoly {
    type Output = TriPoly;
    fn add(self, rhs: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        for ((a, b, c), v) in rhs.terms() {
            out.add_term(a, b, c, v.clone());
        }
        out
    }
}

impl Neg for &TriPoly {
    type Output = TriPoly;
    fn neg(self) -> TriPoly {
        TriPoly::from_terms(self.terms().map(|(k, v)| (k, -v)))
    }
}

impl Sub for &TriPoly {
    type Output = TriPoly;
    fn sub(self, rhs: &TriPoly) -> TriPoly {
        self + &(-rhs)
    }
}

impl Mul for &TriPoly {
    type Output = TriPoly;
    fn mul(self, rhs: &TriPoly) -> TriPoly {
        let mut out = TriPoly::zero();
        for ((a, b, c), v) in self.terms() {
            for ((d, e, f), w) in rhs.terms() {
                out.add_term(a + d, b + e, c + f, v * w);
            }
        }
        out
    }
}

impl fmt::Display for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = |(a, b, c): (u32, u32, u32)| {
            [("x", a), ("y", b), ("z", c)]
                .iter()
                .filter(|(_, e)| *e > 0)
                .map(|(v, e)| {
                    if *e == 1 {
                        v.to_string()
                    } else {
                        format!("{v}^{e}")
                    }
                })
                .collect::<Vec<_>>()
                .join("*")
        };
        write_terms(f, self.terms().map(|(k, v)| (vars(k), v)))
    }
}

/// Sparse polynomial in `x, y` with integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn add_term(&mut self, dx: u32, dy: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry((dx, dy)).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&(dx, dy));
        }
    }

    pub fn coeff(&self, dx: u32, dy: u32) -> BigInt {
        self.terms.get(&(dx, dy)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn swap(&self) -> Self {
        let mut out = BiPoly::zero();
        for ((a, b), v) in self.terms() {
            out.add_term(b, a, v.clone());
        }
        out
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms()
            .map(|((a, b), v)| v * Pow::pow(x, a) * Pow::pow(y, b))
            .sum()
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((a, b), v) in self.terms() {
            for ((c, d), w) in rhs.terms() {
                out.add_term(a + c, b + d, v * w);
            }
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = |(a, b): (u32, u32)| {
            [("x", a), ("y", b)]
                .iter()
                .filter(|(_, e)| *e > 0)
                .map(|(v, e)| {
                    if *e == 1 {
                        v.to_string()
                    } else {
                        format!("{v}^{e}")
                    }
                })
                .collect::<Vec<_>>()
                .join("*")
        };
        write_terms(f, self.terms().map(|(k, v)| (vars(k), v)))
    }
}

fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (mono, c) in terms {
        let neg = c < &BigInt::zero();
        let mag = if neg { -c } else { c.clone() };
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        match (mono.is_empty(), mag.is_one()) {
            (true, _) => write!(f, "{mag}")?,
            (false, true) => f.write_str(&mono)?,
            (false, false) => write!(f, "{mag}*{mono}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = TriPoly::monomial(1, 0, 0, int(2));
        let q = &p - &p;
        assert!(q.is_zero());
        assert_eq!(q.to_string(), "0");
    }

    #[test]
    fn product_and_display() {
        let a = TriPoly::from_terms([((0, 0, 0), int(1)), ((1, 0, 0), int(1))]);
        let b = TriPoly::from_terms([((0, 0, 0), int(1)), ((0, 0, 1), int(-1))]);
        let p = &a * &b;
        assert_eq!(p.to_string(), "1 - z + x - x*z");
        assert_eq!(p.eval(&int(2), &int(5), &int(3)), int(-6));
    }

    #[test]
    fn mixed_derivative() {
        // 3 x^2 y z  →  6 x z
        let p = TriPoly::monomial(2, 1, 1, int(3));
        assert_eq!(
            p.mixed_xy_derivative_at(&int(2), &int(7), &int(-1)),
            int(-12)
        );
        assert_eq!(p.mixed_xy_derivative_at(&int(0), &int(0), &int(-1)), int(0));
    }

    #[test]
    fn bipoly_basics() {
        let mut t = BiPoly::zero();
        t.add_term(2, 0, int(1));
        t.add_term(0, 1, int(-3));
        assert_eq!(t.to_string(), "-3*y + x^2");
        assert_eq!(t.swap().coeff(1, 0), int(-3));
        assert_eq!(t.eval(&int(2), &int(1)), int(1));
        assert_eq!((&t * &t).coeff(2, 1), int(-6));
    }
}
