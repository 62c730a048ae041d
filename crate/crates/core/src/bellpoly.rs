//! Exponential Bell polynomials over arbitrary-precision integers.
//!
//! Partial polynomials `B_{n,k}` come from the triangular recurrence
//! `B_{n,k} = sum_{i=1..n-k+1} C(n-1, i-1) x_i B_{n-i,k-1}` with
//! `B_{0,0} = 1` and `B_{n,0} = 0` for `n > 0`. Complete polynomials are the
//! row sums, and are also available from the binomial recursion
//! `B_{n+1} = sum_{i=0..n} C(n, i) B_{n-i} x_{i+1}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::divisors::DivisorTable;
use crate::error::{invalid, Error, Result};
use crate::gonal::{e_coeff, GonalSpec};
use crate::partitions::{build_table, PartitionFamily};

/// A finite argument sequence `x_1..x_n`, indexed from 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BellInput {
    xs: Vec<BigInt>,
}

impl BellInput {
    /// `xs[0]` becomes `x_1`.
    pub fn new(xs: Vec<BigInt>) -> Self {
        Self { xs }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize) -> BigInt) -> Self {
        Self {
            xs: (1..=n).map(&mut f).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    /// `x_i` for `1 <= i <= len`.
    pub fn get(&self, i: usize) -> Result<&BigInt> {
        if i == 0 {
            return Err(Error::IndexOutOfBounds {
                index: 0,
                len: self.len(),
            });
        }
        self.xs.get(i - 1).ok_or(Error::IndexOutOfBounds {
            index: i,
            len: self.len(),
        })
    }

    fn require(&self, n: usize) -> Result<()> {
        if n > self.len() {
            return Err(Error::IndexOutOfBounds {
                index: n,
                len: self.len(),
            });
        }
        Ok(())
    }

    // unchecked, 1-based
    fn x(&self, i: usize) -> &BigInt {
        &self.xs[i - 1]
    }
}

/// `0!, 1!, ..., n!`.
pub fn factorials(n: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(BigInt::one());
    for i in 1..=n {
        let next = &out[i - 1] * i;
        out.push(next);
    }
    out
}

/// Rows `0..=n` of Pascal's triangle.
fn pascal(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for r in 1..=n {
        let prev = &rows[r - 1];
        let mut row = Vec::with_capacity(r + 1);
        row.push(BigInt::one());
        for k in 1..r {
            row.push(&prev[k - 1] + &prev[k]);
        }
        row.push(BigInt::one());
        rows.push(row);
    }
    rows
}

/// All partial Bell polynomials `B_{a,b}(x)` for `0 <= b <= a <= n_max`.
#[derive(Debug, Clone)]
pub struct PartialBellTable {
    rows: Vec<Vec<BigInt>>,
}

impl PartialBellTable {
    /// Needs `x_1..x_{n_max}`.
    pub fn build(xs: &BellInput, n_max: usize) -> Result<Self> {
        xs.require(n_max)?;
        let binom = pascal(n_max);
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![BigInt::one()]);
        for a in 1..=n_max {
            let mut row = vec![BigInt::zero(); a + 1];
            for (b, slot) in row.iter_mut().enumerate().skip(1) {
                let mut acc = BigInt::zero();
                for i in 1..=a - b + 1 {
                    let x = xs.x(i);
                    let prev = &rows[a - i][b - 1];
                    if x.is_zero() || prev.is_zero() {
                        continue;
                    }
                    acc += &binom[a - 1][i - 1] * x * prev;
                }
                *slot = acc;
            }
            rows.push(row);
        }
        Ok(Self { rows })
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `B_{n,k}`, zero when `k > n`.
    pub fn get(&self, n: usize, k: usize) -> Result<&BigInt> {
        let row = self.rows.get(n).ok_or(Error::IndexOutOfBounds {
            index: n,
            len: self.rows.len(),
        })?;
        static ZERO: std::sync::OnceLock<BigInt> = std::sync::OnceLock::new();
        Ok(row.get(k).unwrap_or_else(|| ZERO.get_or_init(BigInt::zero)))
    }

    /// Complete polynomial `B_n = sum_k B_{n,k}`.
    pub fn complete(&self, n: usize) -> Result<BigInt> {
        Ok(self
            .rows
            .get(n)
            .ok_or(Error::IndexOutOfBounds {
                index: n,
                len: self.rows.len(),
            })?
            .iter()
            .sum())
    }
}

/// `B_{n,k}(x_1, ..., x_{n-k+1})` for `1 <= k <= n`.
///
/// Only the band `B_{a,b}` with `b <= k` and `a - b <= n - k` is evaluated,
/// so arguments beyond `x_{n-k+1}` are never read.
pub fn partial_bell(n: usize, k: usize, xs: &BellInput) -> Result<BigInt> {
    if k < 1 || k > n {
        return Err(invalid(format!(
            "partial Bell polynomial needs 1 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    let width = n - k;
    xs.require(width + 1)?;
    let binom = pascal(n);
    // band[b][t] = B_{b+t, b}
    let mut prev: Vec<BigInt> = std::iter::once(BigInt::one())
        .chain(std::iter::repeat_with(BigInt::zero).take(width))
        .collect();
    for b in 1..=k {
        let mut cur = vec![BigInt::zero(); width + 1];
        for (t, slot) in cur.iter_mut().enumerate() {
            let a = b + t;
            let mut acc = BigInt::zero();
            for i in 1..=t + 1 {
                // B_{a-i, b-1} sits at offset (a - i) - (b - 1) = t + 1 - i
                let p = &prev[t + 1 - i];
                if !p.is_zero() {
                    acc += &binom[a - 1][i - 1] * xs.x(i) * p;
                }
            }
            *slot = acc;
        }
        prev = cur;
    }
    Ok(prev.swap_remove(width))
}

/// `B_n(x_1, ..., x_n) = sum_{k=1..n} B_{n,k}`, with `B_0 = 1`.
pub fn complete_bell(n: usize, xs: &BellInput) -> Result<BigInt> {
    PartialBellTable::build(xs, n)?.complete(n)
}

/// `B_0..=B_{n_max}` by the binomial recursion.
pub fn complete_bell_by_recursion(n_max: usize, xs: &BellInput) -> Result<Vec<BigInt>> {
    xs.require(n_max)?;
    let mut out = vec![BigInt::one()];
    let mut row = vec![BigInt::one()]; // C(n, .)
    for n in 0..n_max {
        let mut acc = BigInt::zero();
        for (i, c) in row.iter().enumerate() {
            let x = xs.x(i + 1);
            if !x.is_zero() {
                acc += c * &out[n - i] * x;
            }
        }
        out.push(acc);
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::one());
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::one());
        row = next;
    }
    Ok(out)
}

/// Recovers `x_n` from `y_j = B_j(x_1..x_j)`:
/// `x_n = sum_{k=1..n} (-1)^(k-1) (k-1)! B_{n,k}(y_1, ..., y_{n-k+1})`.
pub fn bell_inversion(ys: &BellInput, n: usize) -> Result<BigInt> {
    if n < 1 {
        return Err(invalid("bell_inversion needs n >= 1"));
    }
    let table = PartialBellTable::build(ys, n)?;
    Ok(inversion_from_row(&table, n, &factorials(n), true))
}

/// `sum_{k=1..n} s_k (k-1)! B_{n,k}` with `s_k = (-1)^(k-1)` when
/// `alternate_from_plus`, else `(-1)^k`.
fn inversion_from_row(
    table: &PartialBellTable,
    n: usize,
    fact: &[BigInt],
    alternate_from_plus: bool,
) -> BigInt {
    let mut acc = BigInt::zero();
    for k in 1..=n {
        let b = &table.rows[n][k];
        if b.is_zero() {
            continue;
        }
        let term = &fact[k - 1] * b;
        let positive = (k % 2 == 1) == alternate_from_plus;
        if positive {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn require_m(m: u64) -> Result<GonalSpec> {
    if m < 3 {
        return Err(invalid(format!("Bell identities need m >= 3, got m = {m}")));
    }
    GonalSpec::new(m + 2)
}

/// `d_j = -(j-1)! sigma'_m(j)` for `j = 1..=n`.
pub fn d_sequence(m: u64, n: usize) -> Result<BellInput> {
    let sigma = DivisorTable::build(m, n)?;
    let fact = factorials(n);
    Ok(BellInput::from_fn(n, |j| {
        -(&fact[j - 1] * &sigma.values()[j])
    }))
}

/// `c_j = (j-1)! sigma'_m(j)` for `j = 1..=n`.
pub fn c_sequence(m: u64, n: usize) -> Result<BellInput> {
    let sigma = DivisorTable::build(m, n)?;
    let fact = factorials(n);
    Ok(BellInput::from_fn(n, |j| &fact[j - 1] * &sigma.values()[j]))
}

fn require_n(n: usize) -> Result<()> {
    if n < 1 {
        return Err(invalid("Bell identities are stated for n >= 1"));
    }
    Ok(())
}

/// `(B_n(d_1..d_n), n! e_{m+2,n})`.
pub fn theorem31_check(m: u64, n: usize) -> Result<(BigInt, BigInt)> {
    let spec = require_m(m)?;
    require_n(n)?;
    let lhs = complete_bell(n, &d_sequence(m, n)?)?;
    let rhs = &factorials(n)[n] * e_coeff(spec, n as u64);
    Ok((lhs, rhs))
}

/// `(B_n(c_1..c_n), n! p'_m(n))`.
pub fn theorem32_check(m: u64, n: usize) -> Result<(BigInt, BigInt)> {
    require_m(m)?;
    require_n(n)?;
    let lhs = complete_bell(n, &c_sequence(m, n)?)?;
    let pprime = build_table(PartitionFamily::PPrime { m }, n)?;
    let rhs = &factorials(n)[n] * &pprime.values()[n];
    Ok((lhs, rhs))
}

/// Both sides of the complete-polynomial identities for `n = 1..=n_max`,
/// using the binomial recursion for the left side.
pub fn theorem31_pairs(m: u64, n_max: usize) -> Result<Vec<(BigInt, BigInt)>> {
    let spec = require_m(m)?;
    let lhs = complete_bell_by_recursion(n_max, &d_sequence(m, n_max)?)?;
    let fact = factorials(n_max);
    Ok((1..=n_max)
        .map(|n| (lhs[n].clone(), &fact[n] * e_coeff(spec, n as u64)))
        .collect())
}

pub fn theorem32_pairs(m: u64, n_max: usize) -> Result<Vec<(BigInt, BigInt)>> {
    require_m(m)?;
    let lhs = complete_bell_by_recursion(n_max, &c_sequence(m, n_max)?)?;
    let fact = factorials(n_max);
    let pprime = build_table(PartitionFamily::PPrime { m }, n_max)?;
    Ok((1..=n_max)
        .map(|n| (lhs[n].clone(), &fact[n] * &pprime.values()[n]))
        .collect())
}

fn exact_div(num: BigInt, den: &BigInt) -> Result<BigInt> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::InexactDivision {
            numerator: num.to_string(),
            denominator: den.to_string(),
        });
    }
    Ok(q)
}

/// `sigma'_m(n)` for `n = 1..=n_max` from the signed Bell inversion over
/// `j! e_{m+2,j}`.
pub fn sigma_via_e_all(m: u64, n_max: usize) -> Result<Vec<BigInt>> {
    let spec = require_m(m)?;
    let fact = factorials(n_max);
    let args = BellInput::from_fn(n_max, |j| &fact[j] * e_coeff(spec, j as u64));
    corollary_values(&args, n_max, &fact, false)
}

/// `sigma'_m(n)` for `n = 1..=n_max` from the signed Bell inversion over
/// `j! p'_m(j)`.
pub fn sigma_via_p_all(m: u64, n_max: usize) -> Result<Vec<BigInt>> {
    require_m(m)?;
    let fact = factorials(n_max);
    let pprime = build_table(PartitionFamily::PPrime { m }, n_max)?;
    let args = BellInput::from_fn(n_max, |j| &fact[j] * &pprime.values()[j]);
    corollary_values(&args, n_max, &fact, true)
}

fn corollary_values(
    args: &BellInput,
    n_max: usize,
    fact: &[BigInt],
    alternate_from_plus: bool,
) -> Result<Vec<BigInt>> {
    let table = PartialBellTable::build(args, n_max)?;
    (1..=n_max)
        .map(|n| {
            exact_div(
                inversion_from_row(&table, n, fact, alternate_from_plus),
                &fact[n - 1],
            )
        })
        .collect()
}

pub fn sigma_via_e(m: u64, n: usize) -> Result<BigInt> {
    require_n(n)?;
    Ok(sigma_via_e_all(m, n)?.swap_remove(n - 1))
}

pub fn sigma_via_p(m: u64, n: usize) -> Result<BigInt> {
    require_n(n)?;
    Ok(sigma_via_p_all(m, n)?.swap_remove(n - 1))
}
