//! Restricted partition counts, from generating functions and from a
//! brute-force enumerator that serves as an independent oracle.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{invalid, Error, Result};
use crate::qseries::{pochhammer_product, ExponentClass, TruncatedSeries};

/// Largest `n` the enumerators accept.
pub const ENUMERATION_GUARD: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PartitionFamily {
    /// `p(n)`, no restriction.
    Unrestricted,
    /// `q(n)`, distinct parts.
    Distinct,
    /// `p_{r,m}(n)`, every part `≡ r (mod m)`.
    Residue { r: u64, m: u64 },
    /// `p'_m(n)`, every part `≡ 0, 1 or m-1 (mod m)`.
    PPrime { m: u64 },
    /// Every part `≡ 2 or 3 (mod 5)`.
    P25P35,
    /// Every part `≡ 1 or 4 (mod 5)`.
    P15P45,
}

impl PartitionFamily {
    pub fn validate(&self) -> Result<()> {
        match *self {
            PartitionFamily::Residue { r, m } if m == 0 || r >= m => Err(invalid(format!(
                "residue family needs m >= 1 and 0 <= r < m, got r = {r}, m = {m}"
            ))),
            PartitionFamily::PPrime { m } if m < 3 => {
                Err(invalid(format!("p'_m needs m >= 3, got m = {m}")))
            }
            _ => Ok(()),
        }
    }

    /// Whether `part` (a positive integer) may appear in a partition.
    pub fn admits(&self, part: u64) -> bool {
        match *self {
            PartitionFamily::Unrestricted | PartitionFamily::Distinct => true,
            PartitionFamily::Residue { r, m } => part % m == r,
            PartitionFamily::PPrime { m } => {
                let r = part % m;
                r == 0 || r == 1 || r == m - 1
            }
            PartitionFamily::P25P35 => matches!(part % 5, 2 | 3),
            PartitionFamily::P15P45 => matches!(part % 5, 1 | 4),
        }
    }

    pub fn distinct_parts(&self) -> bool {
        matches!(self, PartitionFamily::Distinct)
    }

    /// Exponent classes of the product whose reciprocal generates the family.
    /// `Distinct` uses `1/(q;q^2)_inf`.
    fn reciprocal_classes(&self) -> Vec<ExponentClass> {
        let c = |j, m| ExponentClass::new(j, m).expect("valid family classes");
        match *self {
            PartitionFamily::Unrestricted => vec![c(1, 1)],
            PartitionFamily::Distinct => vec![c(1, 2)],
            PartitionFamily::Residue { r, m } => vec![c(if r == 0 { m } else { r }, m)],
            PartitionFamily::PPrime { m } => vec![c(1, m), c(m - 1, m), c(m, m)],
            PartitionFamily::P25P35 => vec![c(2, 5), c(3, 5)],
            PartitionFamily::P15P45 => vec![c(1, 5), c(4, 5)],
        }
    }

    /// Generating function truncated at `order`.
    pub fn generating_function(&self, order: usize) -> Result<TruncatedSeries> {
        self.validate()?;
        let product = pochhammer_product(&self.reciprocal_classes(), order)?;
        product.invert()
    }
}

impl fmt::Display for PartitionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionFamily::Unrestricted => write!(f, "p"),
            PartitionFamily::Distinct => write!(f, "q"),
            PartitionFamily::Residue { r, m } => write!(f, "p_{{{r},{m}}}"),
            PartitionFamily::PPrime { m } => write!(f, "p'_{m}"),
            PartitionFamily::P25P35 => write!(f, "p_{{2,5}}+p_{{3,5}}"),
            PartitionFamily::P15P45 => write!(f, "p_{{1,5}}+p_{{4,5}}"),
        }
    }
}

/// Memoized values of one partition family for `0..=max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionTable {
    family: PartitionFamily,
    values: Vec<BigInt>,
}

impl PartitionTable {
    pub fn family(&self) -> PartitionFamily {
        self.family
    }

    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// Value at an integer argument; zero for negative arguments, an error
    /// past `max_n`.
    pub fn value(&self, n: i64) -> Result<BigInt> {
        self.get(n).cloned()
    }

    pub(crate) fn get(&self, n: i64) -> Result<&BigInt> {
        static ZERO: std::sync::OnceLock<BigInt> = std::sync::OnceLock::new();
        if n < 0 {
            return Ok(ZERO.get_or_init(BigInt::zero));
        }
        self.values.get(n as usize).ok_or(Error::TableTooShort {
            needed: n,
            available: self.max_n(),
        })
    }

    pub(crate) fn expect_family(&self, expected: PartitionFamily) -> Result<()> {
        if self.family != expected {
            return Err(Error::FamilyMismatch {
                expected: expected.to_string(),
                actual: self.family.to_string(),
            });
        }
        Ok(())
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

/// Table of `family` for `0..=max_n` read off its generating function.
pub fn build_table(family: PartitionFamily, max_n: usize) -> Result<PartitionTable> {
    let series = match family {
        PartitionFamily::Distinct => {
            let mut s = TruncatedSeries::one(max_n);
            for k in 1..=max_n {
                s.mul_one_plus_q_pow(k);
            }
            s
        }
        _ => family.generating_function(max_n)?,
    };
    Ok(PartitionTable {
        family,
        values: series.into_coeffs(),
    })
}

fn guard(n: u64) -> Result<()> {
    if n > ENUMERATION_GUARD {
        return Err(Error::GuardExceeded {
            n,
            limit: ENUMERATION_GUARD,
        });
    }
    Ok(())
}

/// Counts partitions of `n` whose parts all satisfy `admits`, by listing
/// them one at a time (parts in non-increasing order, or strictly
/// decreasing when `distinct`). Exponential; meant for small `n`.
pub fn brute_force_count<F>(n: u64, admits: F, distinct: bool) -> Result<BigInt>
where
    F: Fn(u64) -> bool,
{
    guard(n)?;
    let parts: Vec<u64> = (1..=n).rev().filter(|&p| admits(p)).collect();
    let mut count = 0u64;
    enumerate(n, &parts, distinct, 0, &mut |_| count += 1);
    Ok(BigInt::from(count))
}

/// Visits each partition of `remaining` into `parts[from..]` (descending),
/// passing the number of parts used.
fn enumerate(
    remaining: u64,
    parts: &[u64],
    distinct: bool,
    from: usize,
    visit: &mut impl FnMut(usize),
) {
    fn go(
        remaining: u64,
        parts: &[u64],
        distinct: bool,
        from: usize,
        used: usize,
        visit: &mut impl FnMut(usize),
    ) {
        if remaining == 0 {
            visit(used);
            return;
        }
        for i in from..parts.len() {
            let p = parts[i];
            if p > remaining {
                continue;
            }
            let next = if distinct { i + 1 } else { i };
            go(remaining - p, parts, distinct, next, used + 1, visit);
        }
    }
    go(remaining, parts, distinct, from, 0, visit)
}

/// Numbers of distinct-part partitions with an even and an odd number of parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityCount {
    pub even: BigInt,
    pub odd: BigInt,
}

impl ParityCount {
    pub fn difference(&self) -> BigInt {
        &self.even - &self.odd
    }
}

/// `p'_{e,m}(n)` and `p'_{o,m}(n)` by enumeration: partitions of `n` into
/// distinct parts, each `≡ 0, 1 or m-1 (mod m)`, split by part-count parity.
pub fn parity_counts_distinct_restricted(m: u64, n: u64) -> Result<ParityCount> {
    if m < 3 {
        return Err(invalid(format!("parity counts need m >= 3, got m = {m}")));
    }
    if n < 1 {
        return Err(invalid("parity counts are defined for n >= 1"));
    }
    guard(n)?;
    let family = PartitionFamily::PPrime { m };
    let parts: Vec<u64> = (1..=n).rev().filter(|&p| family.admits(p)).collect();
    let (mut even, mut odd) = (0u64, 0u64);
    enumerate(n, &parts, true, 0, &mut |used| {
        if used % 2 == 0 {
            even += 1
        } else {
            odd += 1
        }
    });
    Ok(ParityCount {
        even: BigInt::from(even),
        odd: BigInt::from(odd),
    })
}

/// Even/odd distinct-part counts for every `n <= max_n` at once, by a 0/1
/// knapsack over admissible parts that tracks part-count parity.
pub fn parity_count_table(m: u64, max_n: usize) -> Result<Vec<ParityCount>> {
    if m < 3 {
        return Err(invalid(format!("parity counts need m >= 3, got m = {m}")));
    }
    let family = PartitionFamily::PPrime { m };
    let mut even = vec![BigInt::zero(); max_n + 1];
    let mut odd = vec![BigInt::zero(); max_n + 1];
    even[0] = BigInt::from(1);
    for part in (1..=max_n).filter(|&p| family.admits(p as u64)) {
        for n in (part..=max_n).rev() {
            let (e, o) = (even[n - part].clone(), odd[n - part].clone());
            even[n] += o;
            odd[n] += e;
        }
    }
    Ok(even
        .into_iter()
        .zip(odd)
        .map(|(even, odd)| ParityCount { even, odd })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn unrestricted_table() {
        let t = build_table(PartitionFamily::Unrestricted, 8).unwrap();
        assert_eq!(t.values(), ints(&[1, 1, 2, 3, 5, 7, 11, 15, 22]).as_slice());
    }

    #[test]
    fn worked_example_values() {
        let t = build_table(PartitionFamily::P25P35, 8).unwrap();
        assert_eq!(t.value(8).unwrap(), BigInt::from(3));

        let t = build_table(PartitionFamily::P15P45, 9).unwrap();
        // 9 = 1^9 = 4+1^5 = 4+4+1 = 6+1+1+1 = 9; 8 = 1^8 = 4+1^4 = 4+4 = 6+1+1
        for (n, v) in [(9, 5), (8, 4), (5, 2), (2, 1)] {
            assert_eq!(t.value(n).unwrap(), BigInt::from(v), "n = {n}");
        }

        let t = build_table(PartitionFamily::Distinct, 15).unwrap();
        for (n, v) in [
            (15, 27),
            (14, 22),
            (13, 18),
            (11, 12),
            (9, 8),
            (5, 3),
            (4, 2),
            (2, 1),
            (1, 1),
        ] {
            assert_eq!(t.value(n).unwrap(), BigInt::from(v), "n = {n}");
        }
    }

    #[test]
    fn every_family_starts_at_one() {
        for family in [
            PartitionFamily::Unrestricted,
            PartitionFamily::Distinct,
            PartitionFamily::Residue { r: 0, m: 4 },
            PartitionFamily::Residue { r: 3, m: 7 },
            PartitionFamily::PPrime { m: 6 },
            PartitionFamily::P25P35,
            PartitionFamily::P15P45,
        ] {
            let t = build_table(family, 30).unwrap();
            assert_eq!(t.values()[0], BigInt::from(1));
            assert!(t.values().iter().all(|v| *v >= BigInt::zero()));
        }
    }

    #[test]
    fn residue_zero_uses_multiples_of_m() {
        let t = build_table(PartitionFamily::Residue { r: 0, m: 3 }, 9).unwrap();
        assert_eq!(t.values(), ints(&[1, 0, 0, 1, 0, 0, 2, 0, 0, 3]).as_slice());
    }

    #[test]
    fn invalid_families_rejected() {
        assert!(build_table(PartitionFamily::Residue { r: 0, m: 0 }, 5).is_err());
        assert!(build_table(PartitionFamily::Residue { r: 5, m: 5 }, 5).is_err());
        assert!(build_table(PartitionFamily::PPrime { m: 2 }, 5).is_err());
    }

    #[test]
    fn table_lookup_conventions() {
        let t = build_table(PartitionFamily::Unrestricted, 5).unwrap();
        assert_eq!(t.value(-4).unwrap(), BigInt::zero());
        assert!(matches!(t.value(6), Err(Error::TableTooShort { .. })));
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(
            brute_force_count(0, |_| true, false).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            brute_force_count(8, |p| matches!(p % 5, 2 | 3), false).unwrap(),
            BigInt::from(3)
        );
        assert_eq!(
            brute_force_count(5, |_| true, true).unwrap(),
            BigInt::from(3)
        );
        assert!(matches!(
            brute_force_count(ENUMERATION_GUARD + 1, |_| true, false),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn parity_examples() {
        let c = parity_counts_distinct_restricted(3, 1).unwrap();
        assert_eq!((c.even, c.odd), (BigInt::from(0), BigInt::from(1)));
        let c = parity_counts_distinct_restricted(3, 5).unwrap();
        assert_eq!(c.difference(), BigInt::from(1));
        let c = parity_counts_distinct_restricted(4, 2).unwrap();
        assert_eq!((c.even, c.odd), (BigInt::from(0), BigInt::from(0)));
        assert!(parity_counts_distinct_restricted(2, 5).is_err());
        assert!(parity_counts_distinct_restricted(3, 0).is_err());
    }

    #[test]
    fn parity_table_matches_enumeration() {
        for m in 3..=6 {
            let table = parity_count_table(m, 30).unwrap();
            for n in 1..=30u64 {
                assert_eq!(
                    table[n as usize],
                    parity_counts_distinct_restricted(m, n).unwrap()
                );
            }
        }
    }
}
