//! Generalized polygonal numbers and the sign series of the g-gonal triple
//! product.
//!
//! `P_{g,n} = n((g-2)n - (g-4))/2` for every integer `n`; the "second"
//! family is `Q_{g,n} = P_{g,-n}`. For `g >= 5` the numbers
//! `P_{g,1} < Q_{g,1} < P_{g,2} < Q_{g,2} < ...` are strictly increasing, so
//! each positive integer is hit at most once and the sign `e_{g,n}` is well
//! defined.

use num_bigint::BigInt;
use num_integer::Roots;

use crate::error::{invalid, Result};
use crate::qseries::{pochhammer_product, ExponentClass, TruncatedSeries};

/// Polygonality `g`, restricted to `g >= 5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GonalSpec {
    g: u64,
}

impl GonalSpec {
    pub fn new(g: u64) -> Result<Self> {
        if g < 5 {
            return Err(invalid(format!("polygonality g must be >= 5, got {g}")));
        }
        Ok(Self { g })
    }

    pub fn g(&self) -> u64 {
        self.g
    }

    /// `P_{g,k}` for `k >= 1`, in native arithmetic; `None` on overflow.
    pub fn p(&self, k: u64) -> Option<u64> {
        native_gonal(self.g, k as i128)
    }

    /// `Q_{g,k} = P_{g,-k}` for `k >= 1`.
    pub fn q(&self, k: u64) -> Option<u64> {
        native_gonal(self.g, -(k as i128))
    }

    /// `(k, P_{g,k}, Q_{g,k})` for `k = 1, 2, ...` while `P_{g,k} <= limit`.
    /// `Q_{g,k}` may exceed the limit on the last step; callers filter it.
    pub fn pairs_up_to(&self, limit: u64) -> impl Iterator<Item = (u64, u64, u64)> + '_ {
        (1u64..)
            .map(move |k| (k, self.p(k), self.q(k)))
            .take_while(move |(_, p, _)| matches!(p, Some(p) if *p <= limit))
            .map(|(k, p, q)| (k, p.unwrap(), q.unwrap_or(u64::MAX)))
    }
}

fn native_gonal(g: u64, n: i128) -> Option<u64> {
    let g = g as i128;
    let inner = (g - 2).checked_mul(n)?.checked_sub(g - 4)?;
    let twice = n.checked_mul(inner)?;
    u64::try_from(twice / 2).ok()
}

/// `P_{g,n}` for any integer `n`; negative `n` gives `Q_{g,-n}`.
pub fn gonal_number(spec: GonalSpec, n: i64) -> BigInt {
    let g = BigInt::from(spec.g);
    let n = BigInt::from(n);
    let two = BigInt::from(2);
    let four = BigInt::from(4);
    (&n * ((&g - &two) * &n - (&g - &four))) / two
}

/// `Delta_n = n(n+1)/2`.
pub fn triangular(n: u64) -> BigInt {
    let n = BigInt::from(n);
    &n * (&n + 1u32) / 2u32
}

pub(crate) fn triangular_u64(n: u64) -> u64 {
    n * (n + 1) / 2
}

/// Whether `n = Delta_m` for some `m >= 0`.
pub fn is_triangular(n: u64) -> bool {
    // 8n + 1 must be an odd square
    let d = 8 * n as u128 + 1;
    let s = d.sqrt();
    s * s == d
}

/// Index `k >= 1` and which family hits `n`, solving the quadratic exactly.
///
/// Both families share the discriminant `(g-4)^2 + 8(g-2)n`; `P` needs
/// `(g-4) + s` and `Q` needs `s - (g-4)` divisible by `2(g-2)`.
fn gonal_index(spec: GonalSpec, n: u64) -> Option<u64> {
    if n == 0 {
        return None;
    }
    let g = spec.g as u128;
    let disc = (g - 4) * (g - 4) + 8 * (g - 2) * n as u128;
    let s = disc.sqrt();
    if s * s != disc {
        return None;
    }
    let den = 2 * (g - 2);
    let p_num = (g - 4) + s;
    if p_num.is_multiple_of(den) {
        return Some((p_num / den) as u64);
    }
    let q_num = s - (g - 4);
    if q_num > 0 && q_num.is_multiple_of(den) {
        return Some((q_num / den) as u64);
    }
    None
}

fn sign_of_index(k: u64) -> i8 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `e_{g,n}`: 1 at `n = 0`, `(-1)^k` if `n` is `P_{g,k}` or `Q_{g,k}`, else 0.
pub fn e_coeff(spec: GonalSpec, n: u64) -> i8 {
    if n == 0 {
        return 1;
    }
    gonal_index(spec, n).map_or(0, sign_of_index)
}

/// `e_{g,n}` by scanning `k <= ceil(sqrt(2n/(g-2))) + 2`.
pub fn e_coeff_by_scan(spec: GonalSpec, n: u64) -> i8 {
    if n == 0 {
        return 1;
    }
    let bound = ((2 * n) / (spec.g - 2)).sqrt() + 3;
    for k in 1..=bound {
        if spec.p(k) == Some(n) || spec.q(k) == Some(n) {
            return sign_of_index(k);
        }
    }
    0
}

/// `1 + sum_{k>=1} (-1)^k (q^{P_{g,k}} + q^{Q_{g,k}})`, placed directly from
/// the gonal numbers.
pub fn gonal_series(spec: GonalSpec, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    let coeffs = s.coeffs_mut();
    for (k, p, q) in spec.pairs_up_to(order as u64) {
        let sign = BigInt::from(sign_of_index(k));
        coeffs[p as usize] += &sign;
        if q <= order as u64 {
            coeffs[q as usize] += &sign;
        }
    }
    s
}

/// The exponent classes `{(1, g-2), (g-3, g-2), (g-2, g-2)}` of the product side.
pub fn theorem1_classes(spec: GonalSpec) -> [ExponentClass; 3] {
    let m = spec.g - 2;
    [
        ExponentClass::new(1, m).expect("1 <= m"),
        ExponentClass::new(m - 1, m).expect("1 <= m-1 <= m"),
        ExponentClass::new(m, m).expect("m <= m"),
    ]
}

/// `(q; q^{g-2})_inf (q^{g-3}; q^{g-2})_inf (q^{g-2}; q^{g-2})_inf`.
pub fn theorem1_lhs(spec: GonalSpec, order: usize) -> TruncatedSeries {
    pochhammer_product(&theorem1_classes(spec), order).expect("three classes")
}
