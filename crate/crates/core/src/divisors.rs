//! Divisor sums restricted to residue classes.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::Zero;

use crate::error::{invalid, Error, Result};
use crate::qseries::TruncatedSeries;

/// Divisors of `n >= 1` by trial division up to `sqrt(n)`, unordered.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let root = n.sqrt();
    for d in 1..=root {
        if n.is_multiple_of(d) {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
    }
    out
}

fn require_positive(n: u64) -> Result<()> {
    if n < 1 {
        return Err(invalid("divisor sums are defined for n >= 1"));
    }
    Ok(())
}

/// `sigma_{r,m}(n)`: sum of divisors `d | n` with `d ≡ r (mod m)`.
pub fn sigma_rm(r: u64, m: u64, n: u64) -> Result<BigInt> {
    require_positive(n)?;
    if m < 1 || r >= m {
        return Err(invalid(format!(
            "need m >= 1 and 0 <= r < m, got r = {r}, m = {m}"
        )));
    }
    Ok(divisors(n)
        .into_iter()
        .filter(|d| d % m == r)
        .map(BigInt::from)
        .sum())
}

/// `sigma(n)`, the full divisor sum.
pub fn sigma(n: u64) -> Result<BigInt> {
    sigma_rm(0, 1, n)
}

/// Whether `d` lies in one of the classes `0, 1, m-1 (mod m)`.
pub(crate) fn in_prime_classes(d: u64, m: u64) -> bool {
    let r = d % m;
    r == 0 || r == 1 || r == m - 1
}

fn require_m(m: u64) -> Result<()> {
    if m < 3 {
        return Err(invalid(format!("sigma'_m needs m >= 3, got m = {m}")));
    }
    Ok(())
}

/// `sigma'_m(n) = sigma_{m-1,m}(n) + sigma_{0,m}(n) + sigma_{1,m}(n)`.
/// The three classes are disjoint for `m >= 3`.
pub fn sigma_prime(m: u64, n: u64) -> Result<BigInt> {
    require_m(m)?;
    require_positive(n)?;
    Ok(sigma_rm(m - 1, m, n)? + sigma_rm(0, m, n)? + sigma_rm(1, m, n)?)
}

/// `sigma'_m(n)` for `0..=max_n`, with `values[0] = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorTable {
    m: u64,
    values: Vec<BigInt>,
}

impl DivisorTable {
    /// Sieve: every admissible `d` adds itself to each of its multiples.
    pub fn build(m: u64, max_n: usize) -> Result<Self> {
        require_m(m)?;
        let mut values = vec![0u64; max_n + 1];
        for d in 1..=max_n {
            if in_prime_classes(d as u64, m) {
                for multiple in (d..=max_n).step_by(d) {
                    values[multiple] += d as u64;
                }
            }
        }
        Ok(Self {
            m,
            values: values.into_iter().map(BigInt::from).collect(),
        })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// `sigma'_m(n)`, extended by zero to `n <= 0`.
    pub fn value(&self, n: i64) -> Result<BigInt> {
        self.get(n).cloned()
    }

    pub(crate) fn get(&self, n: i64) -> Result<&BigInt> {
        static ZERO: std::sync::OnceLock<BigInt> = std::sync::OnceLock::new();
        if n <= 0 {
            return Ok(ZERO.get_or_init(BigInt::zero));
        }
        self.values.get(n as usize).ok_or(Error::TableTooShort {
            needed: n,
            available: self.max_n(),
        })
    }

    pub(crate) fn ensure_covers(&self, n: u64) -> Result<()> {
        if n as usize > self.max_n() {
            return Err(Error::TableTooShort {
                needed: n as i64,
                available: self.max_n(),
            });
        }
        Ok(())
    }
}

/// `sum over admissible n of n q^n / (1 - q^n)`, each term expanded as the
/// geometric series `n q^n + n q^2n + ...`.
pub fn lambert_series_sigma_prime(m: u64, order: usize) -> Result<TruncatedSeries> {
    require_m(m)?;
    let mut total = TruncatedSeries::zero(order);
    for n in (1..=order).filter(|&n| in_prime_classes(n as u64, m)) {
        let mut term = TruncatedSeries::monomial(n, BigInt::from(n), order);
        term.div_one_minus_q_pow(n);
        total = &total + &term;
    }
    Ok(total)
}
