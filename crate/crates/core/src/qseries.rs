//! Truncated formal power series in `q` with arbitrary-precision integer
//! coefficients.
//!
//! A [`TruncatedSeries`] of order `N` stores `c_0..=c_N` densely and stands
//! for its residue modulo `q^(N+1)`. Binary operations truncate to the smaller
//! operand order; nothing ever extends an order implicitly, so reading past the
//! order is an error rather than a silent zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{invalid, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Series from explicit coefficients `c_0..=c_N`; `coeffs` must be non-empty.
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(invalid(
                "a truncated series needs at least the constant term",
            ));
        }
        Ok(Self { coeffs })
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, BigInt::one(), order)
    }

    /// `coeff * q^exponent` at the given order (zero if the exponent exceeds it).
    pub fn monomial(exponent: usize, coeff: BigInt, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = coeff;
        }
        s
    }

    /// Polynomial with the given small coefficients, zero-padded (or truncated)
    /// to `order`.
    pub fn from_i64s(coeffs: &[i64], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (slot, &c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = BigInt::from(c);
        }
        s
    }

    /// Highest retained exponent `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^n`: zero for negative `n`, an error past the order.
    pub fn coefficient(&self, n: i64) -> Result<BigInt> {
        if n < 0 {
            return Ok(BigInt::zero());
        }
        self.coeffs
            .get(n as usize)
            .cloned()
            .ok_or(Error::BeyondOrder {
                index: n,
                order: self.order(),
            })
    }

    /// Drops every coefficient above `order`. Raising the order is refused.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(invalid(format!(
                "cannot raise truncation order from {} to {order}",
                self.order()
            )));
        }
        Ok(Self {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// First index where `self` and `other` differ, over their common order.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }

    /// Multiplies in place by `1 - q^e` (no-op when `e` exceeds the order).
    pub(crate) fn mul_one_minus_q_pow(&mut self, e: usize) {
        assert!(e > 0, "factor 1 - q^0 annihilates the series");
        for i in (e..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] -= &lo[i - e];
        }
    }

    /// Multiplies in place by `1 + q^e`.
    pub(crate) fn mul_one_plus_q_pow(&mut self, e: usize) {
        assert!(e > 0);
        for i in (e..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - e];
        }
    }

    /// Divides in place by `1 - q^e`, i.e. multiplies by `1 + q^e + q^2e + ...`.
    pub(crate) fn div_one_minus_q_pow(&mut self, e: usize) {
        assert!(e > 0);
        for i in e..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - e];
        }
    }

    pub(crate) fn coeffs_mut(&mut self) -> &mut [BigInt] {
        &mut self.coeffs
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries({self} + O(q^{}))", self.order() + 1)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.sign() == num_bigint::Sign::Minus {
                (true, -c)
            } else {
                (false, c.clone())
            };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => write!(f, "q^{i}")?,
                _ => write!(f, "{mag}*q^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub fn series_add(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
    TruncatedSeries { coeffs }
}

pub fn series_sub(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
    TruncatedSeries { coeffs }
}

/// Schoolbook Cauchy product truncated at `min(a.order, b.order)`. Zero
/// coefficients of `a` are skipped, which keeps products with sparse sign
/// series cheap.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    let order = a.order().min(b.order());
    let mut out = vec![BigInt::zero(); order + 1];
    for (i, ai) in a.coeffs[..=order].iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs[..=order - i].iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    TruncatedSeries { coeffs: out }
}

/// Multiplicative inverse of a series with constant term 1, by the forward
/// recurrence `b_n = -sum_{k=1..n} a_k b_{n-k}`.
pub fn series_invert(a: &TruncatedSeries) -> Result<TruncatedSeries> {
    if !a.coeffs[0].is_one() {
        return Err(Error::NotInvertible(a.coeffs[0].to_string()));
    }
    let order = a.order();
    let mut b: Vec<BigInt> = Vec::with_capacity(order + 1);
    b.push(BigInt::one());
    for n in 1..=order {
        let mut acc = BigInt::zero();
        for k in 1..=n {
            let ak = &a.coeffs[k];
            if !ak.is_zero() {
                acc += ak * &b[n - k];
            }
        }
        b.push(-acc);
    }
    Ok(TruncatedSeries { coeffs: b })
}

impl TruncatedSeries {
    pub fn invert(&self) -> Result<Self> {
        series_invert(self)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        series_add(self, rhs)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        series_sub(self, rhs)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        series_mul(self, rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Exponent pattern `j, j+m, j+2m, ...` of the infinite product `(q^j; q^m)_inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentClass {
    offset: u64,
    modulus: u64,
}

impl ExponentClass {
    /// Requires `1 <= offset <= modulus`.
    pub fn new(offset: u64, modulus: u64) -> Result<Self> {
        if modulus == 0 || offset == 0 || offset > modulus {
            return Err(invalid(format!(
                "exponent class needs 1 <= j <= m, got j = {offset}, m = {modulus}"
            )));
        }
        Ok(Self { offset, modulus })
    }

    pub fn offset(&self) -> u64 {
        self.offset
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Exponents `j + k*m <= order`, ascending.
    pub fn exponents(&self, order: usize) -> impl Iterator<Item = usize> {
        let (j, m) = (self.offset as usize, self.modulus as usize);
        (j..=order).step_by(m)
    }
}

/// `prod over classes of (q^j; q^m)_inf`, exact modulo `q^(order+1)`.
///
/// Every factor `1 - q^e` with `e > order` is congruent to 1, so the finite
/// product over `e <= order` is the exact truncation.
pub fn pochhammer_product(classes: &[ExponentClass], order: usize) -> Result<TruncatedSeries> {
    if classes.is_empty() {
        return Err(invalid(
            "pochhammer_product needs at least one exponent class",
        ));
    }
    let mut s = TruncatedSeries::one(order);
    for class in classes {
        for e in class.exponents(order) {
            s.mul_one_minus_q_pow(e);
        }
    }
    Ok(s)
}

/// `(q; q)_n = prod_{k=1..n} (1 - q^k)` truncated at `order`.
pub fn finite_pochhammer(n: u64, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for k in 1..=n {
        if k as usize > order {
            break;
        }
        s.mul_one_minus_q_pow(k as usize);
    }
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RrVariant {
    /// `sum q^(n^2) / (q;q)_n`
    First,
    /// `sum q^(n^2+n) / (q;q)_n`
    Second,
}

/// Sum side of the Rogers-Ramanujan identities, built term by term.
///
/// Keeps a running `1/(q;q)_n` (one in-place division per step) and stops
/// once the leading exponent of the next term exceeds `order`.
pub fn rr_sum_series(variant: RrVariant, order: usize) -> TruncatedSeries {
    let mut total = TruncatedSeries::zero(order);
    let mut denom_inv = TruncatedSeries::one(order);
    for n in 0usize.. {
        let lead = match variant {
            RrVariant::First => n * n,
            RrVariant::Second => n * n + n,
        };
        if lead > order {
            break;
        }
        if n > 0 {
            denom_inv.div_one_minus_q_pow(n);
        }
        let out = total.coeffs_mut();
        for (i, c) in denom_inv.coeffs[..=order - lead].iter().enumerate() {
            out[lead + i] += c;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64], order: usize) -> TruncatedSeries {
        TruncatedSeries::from_i64s(c, order)
    }

    fn class(j: u64, m: u64) -> ExponentClass {
        ExponentClass::new(j, m).unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(&s(&[1, -1], 3) + &s(&[0, 1], 3), TruncatedSeries::one(3));
        let a = s(&[3, 1, 4, 1], 3);
        assert_eq!(&a + &TruncatedSeries::zero(3), a);
        assert_eq!(&s(&[1, 2], 2) + &s(&[3, 0, 1], 2), s(&[4, 2, 1], 2));
    }

    #[test]
    fn add_and_mul_take_min_order() {
        let a = s(&[1, 1, 1, 1, 1], 4);
        let b = s(&[1, 1], 2);
        assert_eq!((&a + &b).order(), 2);
        assert_eq!((&a * &b).order(), 2);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&s(&[1, 1], 2) * &s(&[1, -1], 2), s(&[1, 0, -1], 2));
        let a = s(&[2, -7, 0, 5], 3);
        assert_eq!(&a * &TruncatedSeries::one(3), a);
    }

    #[test]
    fn invert_examples() {
        assert_eq!(s(&[1, -1], 3).invert().unwrap(), s(&[1, 1, 1, 1], 3));
        assert_eq!(
            TruncatedSeries::one(5).invert().unwrap(),
            TruncatedSeries::one(5)
        );
        let p = pochhammer_product(&[class(1, 1)], 8)
            .unwrap()
            .invert()
            .unwrap();
        assert_eq!(p, s(&[1, 1, 2, 3, 5, 7, 11, 15, 22], 8));
    }

    #[test]
    fn invert_rejects_non_unit_constant() {
        assert!(matches!(
            s(&[2, 1], 3).invert(),
            Err(Error::NotInvertible(_))
        ));
        assert!(s(&[-1, 1], 3).invert().is_err());
        assert!(TruncatedSeries::zero(3).invert().is_err());
    }

    #[test]
    fn euler_function_times_inverse_is_one() {
        let e = pochhammer_product(&[class(1, 1)], 10).unwrap();
        // independent inverse: prod 1/(1-q^k) by repeated geometric division
        let mut p = TruncatedSeries::one(10);
        for k in 1..=10 {
            p.div_one_minus_q_pow(k);
        }
        assert!((&e * &p).is_one());
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(
            pochhammer_product(&[class(1, 1)], 12).unwrap(),
            s(&[1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1], 12)
        );
        assert_eq!(
            pochhammer_product(&[class(1, 4), class(3, 4), class(4, 4)], 3).unwrap(),
            s(&[1, -1, 0, -1], 3)
        );
        assert_eq!(
            pochhammer_product(&[class(2, 7)], 0).unwrap(),
            TruncatedSeries::one(0)
        );
        assert!(pochhammer_product(&[], 4).is_err());
    }

    #[test]
    fn exponent_class_bounds() {
        assert!(ExponentClass::new(0, 3).is_err());
        assert!(ExponentClass::new(4, 3).is_err());
        assert!(ExponentClass::new(1, 0).is_err());
        assert!(ExponentClass::new(3, 3).is_ok());
    }

    #[test]
    fn finite_pochhammer_examples() {
        assert_eq!(finite_pochhammer(0, 4), TruncatedSeries::one(4));
        assert_eq!(finite_pochhammer(2, 4), s(&[1, -1, -1, 1, 0], 4));
        assert_eq!(finite_pochhammer(3, 6), s(&[1, -1, -1, 0, 1, 1, -1], 6));
    }

    #[test]
    fn rr_sum_small_orders() {
        assert_eq!(rr_sum_series(RrVariant::First, 0), TruncatedSeries::one(0));
        assert_eq!(rr_sum_series(RrVariant::Second, 0), TruncatedSeries::one(0));
    }

    #[test]
    fn rr_sum_matches_products() {
        for order in [1usize, 7, 30, 200] {
            let first = pochhammer_product(&[class(1, 5), class(4, 5)], order)
                .unwrap()
                .invert()
                .unwrap();
            assert_eq!(rr_sum_series(RrVariant::First, order), first);
            let second = pochhammer_product(&[class(2, 5), class(3, 5)], order)
                .unwrap()
                .invert()
                .unwrap();
            assert_eq!(rr_sum_series(RrVariant::Second, order), second);
        }
    }

    #[test]
    fn coefficient_conventions() {
        let a = s(&[1, -1], 1);
        assert_eq!(a.coefficient(1).unwrap(), BigInt::from(-1));
        assert_eq!(a.coefficient(-3).unwrap(), BigInt::zero());
        assert_eq!(
            a.coefficient(2),
            Err(Error::BeyondOrder { index: 2, order: 1 })
        );
        let e = pochhammer_product(&[class(1, 1)], 12).unwrap();
        assert_eq!(e.coefficient(12).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn truncate_never_raises_order() {
        let a = s(&[1, 2, 3], 2);
        assert_eq!(a.truncate(1).unwrap(), s(&[1, 2], 1));
        assert!(a.truncate(3).is_err());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(s(&[1, -1, 0, 2], 3).to_string(), "1 - q^1 + 2*q^3");
        assert_eq!(TruncatedSeries::zero(2).to_string(), "0");
    }
}
