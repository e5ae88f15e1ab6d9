//! Sparse Laurent polynomials in two variables `a`, `z` with integer
//! coefficients.
//!
//! Text form: terms `c a^i z^j` joined by `" + "`, exponents in decreasing
//! lexicographic `(i, j)` order. The zero polynomial prints as `0`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("integer overflow in polynomial arithmetic")]
    Overflow,
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i32, i32), i64>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(coeff: i64, a: i32, z: i32) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert((a, z), coeff);
        }
        LaurentPoly2 { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i32, i64)>) -> Result<Self, PolyError> {
        let mut p = LaurentPoly2::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, c)?;
        }
        Ok(p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)) == Some(&1)
    }

    pub fn coeff(&self, a: i32, z: i32) -> i64 {
        self.terms.get(&(a, z)).copied().unwrap_or(0)
    }

    /// Terms as `(a exponent, z exponent, coefficient)` in increasing order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, i32, i64)> + '_ {
        self.terms.iter().map(|(&(i, j), &c)| (i, j, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_a_degree(&self) -> Option<i32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn min_a_degree(&self) -> Option<i32> {
        self.terms.keys().map(|k| k.0).min()
    }

    fn add_term(&mut self, a: i32, z: i32, c: i64) -> Result<(), PolyError> {
        if c == 0 {
            return Ok(());
        }
        let entry = self.terms.entry((a, z)).or_insert(0);
        *entry = entry.checked_add(c).ok_or(PolyError::Overflow)?;
        if *entry == 0 {
            self.terms.remove(&(a, z));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        let mut out = self.clone();
        for (i, j, c) in other.terms() {
            out.add_term(i, j, c)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        let mut out = self.clone();
        for (i, j, c) in other.terms() {
            out.add_term(i, j, c.checked_neg().ok_or(PolyError::Overflow)?)?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        let mut out = LaurentPoly2::zero();
        for (i1, j1, c1) in self.terms() {
            for (i2, j2, c2) in other.terms() {
                let c = c1.checked_mul(c2).ok_or(PolyError::Overflow)?;
                let i = i1.checked_add(i2).ok_or(PolyError::Overflow)?;
                let j = j1.checked_add(j2).ok_or(PolyError::Overflow)?;
                out.add_term(i, j, c)?;
            }
        }
        Ok(out)
    }

    pub fn checked_pow(&self, n: u32) -> Result<Self, PolyError> {
        let mut out = LaurentPoly2::one();
        for _ in 0..n {
            out = out.checked_mul(self)?;
        }
        Ok(out)
    }

    /// Multiplies by `coeff * a^da * z^dz`.
    pub fn checked_shift(&self, coeff: i64, da: i32, dz: i32) -> Result<Self, PolyError> {
        let mut out = LaurentPoly2::zero();
        for (i, j, c) in self.terms() {
            let c = c.checked_mul(coeff).ok_or(PolyError::Overflow)?;
            let i = i.checked_add(da).ok_or(PolyError::Overflow)?;
            let j = j.checked_add(dz).ok_or(PolyError::Overflow)?;
            out.add_term(i, j, c)?;
        }
        Ok(out)
    }

    /// Applies `a^i z^j -> sign(i, j) * a^(sa*i) z^(sz*j)` term by term.
    pub fn substitute(&self, sa: i32, sz: i32, sign: impl Fn(i32, i32) -> i64) -> Self {
        let mut out = LaurentPoly2::zero();
        for (i, j, c) in self.terms() {
            out.add_term(sa * i, sz * j, sign(i, j) * c).expect("sign flips cannot overflow");
        }
        out
    }

    /// `a -> a^-1`.
    pub fn invert_a(&self) -> Self {
        self.substitute(-1, 1, |_, _| 1)
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, j, c) in self.terms().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c} a^{i} z^{j}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly2({self})")
    }
}

impl FromStr for LaurentPoly2 {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(LaurentPoly2::zero());
        }
        let bad = || PolyError::Parse(s.to_string());
        let mut out = LaurentPoly2::zero();
        for term in s.split(" + ") {
            let mut parts = term.split_whitespace();
            let c: i64 = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let i: i32 = parts.next().and_then(|p| p.strip_prefix("a^")).ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let j: i32 = parts.next().and_then(|p| p.strip_prefix("z^")).ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if parts.next().is_some() {
                return Err(bad());
            }
            out.add_term(i, j, c)?;
        }
        Ok(out)
    }
}

// Operator impls panic on overflow; the skein engine uses the checked forms.
impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        self.checked_add(rhs).expect("polynomial overflow")
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        self.checked_sub(rhs).expect("polynomial overflow")
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        self.checked_mul(rhs).expect("polynomial overflow")
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        self.checked_shift(-1, 0, 0).expect("polynomial overflow")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly2 {
        s.parse().unwrap()
    }

    #[test]
    fn display_orders_terms_descending() {
        let q = LaurentPoly2::from_terms([(-4, 0, -1), (-2, 2, 1), (-2, 0, 2)]).unwrap();
        assert_eq!(q.to_string(), "1 a^-2 z^2 + 2 a^-2 z^0 + -1 a^-4 z^0");
        assert_eq!(p(&q.to_string()), q);
        assert_eq!(LaurentPoly2::zero().to_string(), "0");
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let x = p("1 a^1 z^0 + -1 a^-1 z^0");
        let d = x.checked_sub(&x).unwrap();
        assert!(d.is_zero());
        assert_eq!(d.len(), 0);
    }

    #[test]
    fn product_of_binomials() {
        let x = p("1 a^1 z^0 + 1 a^0 z^1");
        assert_eq!((&x * &x).to_string(), "1 a^2 z^0 + 2 a^1 z^1 + 1 a^0 z^2");
        assert_eq!(x.max_a_degree(), Some(1));
        assert_eq!(x.min_a_degree(), Some(0));
    }

    #[test]
    fn overflow_is_an_error() {
        let big = LaurentPoly2::monomial(i64::MAX, 0, 0);
        assert_eq!(big.checked_add(&LaurentPoly2::one()), Err(PolyError::Overflow));
        assert_eq!(big.checked_mul(&LaurentPoly2::monomial(2, 0, 0)), Err(PolyError::Overflow));
    }

    #[test]
    fn rejects_garbage() {
        assert!("1 a^2".parse::<LaurentPoly2>().is_err());
        assert!("x".parse::<LaurentPoly2>().is_err());
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly2> {
        prop::collection::vec((-5i32..5, -5i32..5, -20i64..20), 0..6).prop_map(|t| LaurentPoly2::from_terms(t).unwrap())
    }

    proptest! {
        #[test]
        fn text_round_trip(x in arb_poly()) {
            prop_assert_eq!(x.to_string().parse::<LaurentPoly2>().unwrap(), x);
        }

        #[test]
        fn ring_laws(x in arb_poly(), y in arb_poly(), w in arb_poly()) {
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x * &(&y + &w), &(&x * &y) + &(&x * &w));
            prop_assert_eq!(&(&x - &y) + &y, x);
        }
    }
}
