//! Recurrences and convolutions tied to the gonal sign series, and the
//! verifiers that compare two independently computed sides of each identity.
//!
//! Every infinite sum over `k` stops at the first `k` with `P_{g,k} > n`; by
//! interleaving, `Q_{g,k}` has then passed `n` as well.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bellpoly;
use crate::divisors::{lambert_series_sigma_prime, sigma_prime, DivisorTable};
use crate::error::{invalid, Error, Result};
use crate::gonal::{e_coeff, gonal_series, is_triangular, theorem1_lhs, triangular_u64, GonalSpec};
use crate::partitions::{build_table, parity_count_table, PartitionFamily, PartitionTable};
use crate::qseries::{rr_sum_series, RrVariant, TruncatedSeries};

fn pentagonal() -> GonalSpec {
    GonalSpec::new(5).expect("g = 5")
}

fn heptagonal() -> GonalSpec {
    GonalSpec::new(7).expect("g = 7")
}

/// `sum_{k>=1} (-1)^(k+1) [f(P_{g,k}) + f(Q_{g,k})]` over gonal numbers `<= limit`.
fn alternating_gonal_sum<F>(spec: GonalSpec, limit: u64, mut f: F) -> Result<BigInt>
where
    F: FnMut(u64) -> Result<BigInt>,
{
    let mut acc = BigInt::zero();
    for (k, p, q) in spec.pairs_up_to(limit) {
        let mut pair = f(p)?;
        if q <= limit {
            pair += f(q)?;
        }
        if k % 2 == 1 {
            acc += pair;
        } else {
            acc -= pair;
        }
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorrectionKind {
    M,
    K,
    L,
    None,
}

/// Sign correction attached to a recurrence, a function of `n` alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorrectionTerm {
    pub kind: CorrectionKind,
    pub value: i8,
}

/// `M(n) = (-1)^j` when `n = 5 P_{5,j}` or `n = 5 Q_{5,j}`, else 0.
/// `M(0) = 1` (the `j = 0` term).
pub fn correction_m(n: u64) -> CorrectionTerm {
    let value = if n == 0 {
        1
    } else if !n.is_multiple_of(5) {
        0
    } else {
        let target = n / 5;
        let hits: Vec<u64> = pentagonal()
            .pairs_up_to(target)
            .filter(|&(_, p, q)| p == target || q == target)
            .map(|(k, _, _)| k)
            .collect();
        assert!(
            hits.len() <= 1,
            "5n matched several pentagonal indices: {hits:?}"
        );
        hits.first().map_or(0, |k| if k % 2 == 0 { 1 } else { -1 })
    };
    CorrectionTerm {
        kind: CorrectionKind::M,
        value,
    }
}

/// `K(n) = 1` when `n` is triangular (including `n = 0`), else 0.
pub fn correction_k(n: u64) -> CorrectionTerm {
    CorrectionTerm {
        kind: CorrectionKind::K,
        value: i8::from(is_triangular(n)),
    }
}

/// `L(n)`: -1 when `2n = Delta_t` with `t ≡ 1, 2 (mod 4)`, +1 when
/// `t ≡ 3, 0 (mod 4)`, else 0. `L(0) = 1`.
pub fn correction_l(n: u64) -> CorrectionTerm {
    let two_n = 2 * n;
    let value = if !is_triangular(two_n) {
        0
    } else {
        let t = triangular_index(two_n);
        match t % 4 {
            1 | 2 => -1,
            _ => 1,
        }
    };
    CorrectionTerm {
        kind: CorrectionKind::L,
        value,
    }
}

fn triangular_index(tri: u64) -> u64 {
    use num_integer::Roots;
    ((8 * tri as u128 + 1).sqrt() as u64 - 1) / 2
}

/// `p(n) + sum_{k>=1} (-1)^k [p(n - P_{7,k}) + p(n - Q_{7,k})]`.
pub fn rec_p25_p35(n: u64, p_table: &PartitionTable) -> Result<BigInt> {
    p_table.expect_family(PartitionFamily::Unrestricted)?;
    p_table.ensure_covers(n)?;
    let tail = alternating_gonal_sum(heptagonal(), n, |g| p_table.value(n as i64 - g as i64))?;
    Ok(p_table.value(n as i64)? - tail)
}

/// `M(n) + sum_{k>=1} (-1)^(k+1) [f(n - P_{7,k}) + f(n - Q_{7,k})]` with `f`
/// the `(p_{1,5} + p_{4,5})` table; reads only `f(0..n)`.
pub fn rec_p15_p45(n: u64, table: &PartitionTable) -> Result<BigInt> {
    table.expect_family(PartitionFamily::P15P45)?;
    if n > 0 {
        table.ensure_covers(n - 1)?;
    }
    let tail = alternating_gonal_sum(heptagonal(), n, |g| table.value(n as i64 - g as i64))?;
    Ok(BigInt::from(correction_m(n).value) + tail)
}

/// `K(n) + sum_{k>=1} (-1)^(k+1) [q(n - 2P_{5,k}) + q(n - 2Q_{5,k})]`.
pub fn rec_q_doubled_pentagonal(n: u64, q_table: &PartitionTable) -> Result<BigInt> {
    q_table.expect_family(PartitionFamily::Distinct)?;
    if n > 0 {
        q_table.ensure_covers(n - 1)?;
    }
    let tail = alternating_gonal_sum(pentagonal(), n / 2, |g| {
        q_table.value(n as i64 - 2 * g as i64)
    })?;
    Ok(BigInt::from(correction_k(n).value) + tail)
}

/// `L(n) + sum_{k>=1} (-1)^(k+1) [q((2n - P_{5,k})/2) + q((2n - Q_{5,k})/2)]`;
/// half-integer and negative arguments contribute 0.
pub fn rec_q_halved_pentagonal(n: u64, q_table: &PartitionTable) -> Result<BigInt> {
    q_table.expect_family(PartitionFamily::Distinct)?;
    if n > 0 {
        q_table.ensure_covers(n - 1)?;
    }
    let two_n = 2 * n;
    let tail = alternating_gonal_sum(pentagonal(), two_n, |g| {
        let rest = two_n - g;
        if rest % 2 == 1 {
            Ok(BigInt::zero())
        } else {
            q_table.value((rest / 2) as i64)
        }
    })?;
    Ok(BigInt::from(correction_l(n).value) + tail)
}

fn gonal_for_m(m: u64) -> Result<GonalSpec> {
    if m < 3 {
        return Err(invalid(format!("m must be >= 3, got {m}")));
    }
    GonalSpec::new(m + 2)
}

fn require_n(n: u64) -> Result<()> {
    if n < 1 {
        return Err(invalid("n must be >= 1"));
    }
    Ok(())
}

/// `sum_{k>=1} (-1)^(k+1) [p'_m(n - P_{m+2,k}) + p'_m(n - Q_{m+2,k})]`.
pub fn rec_pprime(m: u64, n: u64, table: &PartitionTable) -> Result<BigInt> {
    let spec = gonal_for_m(m)?;
    require_n(n)?;
    table.expect_family(PartitionFamily::PPrime { m })?;
    table.ensure_covers(n - 1)?;
    alternating_gonal_sum(spec, n, |g| table.value(n as i64 - g as i64))
}

/// `sigma'_m(n)` as `sum_{k>=1} (-1)^(k+1) [P p'_m(n - P) + Q p'_m(n - Q)]`
/// over the `(m+2)`-gonal pairs.
pub fn sigma_from_pprime(m: u64, n: u64, pprime_table: &PartitionTable) -> Result<BigInt> {
    let spec = gonal_for_m(m)?;
    require_n(n)?;
    pprime_table.expect_family(PartitionFamily::PPrime { m })?;
    pprime_table.ensure_covers(n - 1)?;
    alternating_gonal_sum(spec, n, |g| {
        Ok(BigInt::from(g) * pprime_table.get(n as i64 - g as i64)?)
    })
}

/// `-n e_{m+2,n} + sum_{k>=1} (-1)^(k+1) [sigma'_m(n - P) + sigma'_m(n - Q)]`,
/// with `sigma'_m(x) = 0` for `x <= 0`.
pub fn sigma_recurrence(m: u64, n: u64, sigma_table: &DivisorTable) -> Result<BigInt> {
    let spec = gonal_for_m(m)?;
    require_n(n)?;
    check_divisor_table(sigma_table, m)?;
    sigma_table.ensure_covers(n - 1)?;
    let tail = alternating_gonal_sum(spec, n, |g| sigma_table.value(n as i64 - g as i64))?;
    Ok(tail - BigInt::from(n) * e_coeff(spec, n))
}

/// `sum_{k=1..n} sigma'_m(k) p'_m(n-k)`, which should equal `n p'_m(n)`.
pub fn euler_convolution(
    m: u64,
    n: u64,
    sigma_table: &DivisorTable,
    pprime_table: &PartitionTable,
) -> Result<BigInt> {
    gonal_for_m(m)?;
    require_n(n)?;
    check_divisor_table(sigma_table, m)?;
    pprime_table.expect_family(PartitionFamily::PPrime { m })?;
    sigma_table.ensure_covers(n)?;
    pprime_table.ensure_covers(n - 1)?;
    let mut acc = BigInt::zero();
    for k in 1..=n {
        acc += sigma_table.get(k as i64)? * pprime_table.get((n - k) as i64)?;
    }
    Ok(acc)
}

fn check_divisor_table(table: &DivisorTable, m: u64) -> Result<()> {
    if table.m() != m {
        return Err(Error::FamilyMismatch {
            expected: format!("sigma'_{m}"),
            actual: format!("sigma'_{}", table.m()),
        });
    }
    Ok(())
}

/// `1 - sum_k (q^{Delta_{4k+1}} + q^{Delta_{4k+2}}) + sum_k (q^{Delta_{4k+3}} + q^{Delta_{4k+4}})`.
pub fn triangular_sign_series(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    let coeffs = s.coeffs_mut();
    for t in 1u64.. {
        let tri = triangular_u64(t) as usize;
        if tri > order {
            break;
        }
        coeffs[tri] += if matches!(t % 4, 1 | 2) { -1 } else { 1 };
    }
    s
}

/// `(q^5; q^5)_inf` written out as `1 + sum_n (-1)^n (q^{5P_{5,n}} + q^{5Q_{5,n}})`.
pub fn dilated_pentagonal_series(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    let coeffs = s.coeffs_mut();
    for (k, p, q) in pentagonal().pairs_up_to(order as u64 / 5) {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        coeffs[5 * p as usize] += sign;
        if 5 * q <= order as u64 {
            coeffs[5 * q as usize] += sign;
        }
    }
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    Theorem1,
    G6Triangular,
    RrCor2,
    RrCor3,
    P25P35Rec,
    P15P45Rec,
    QDoubled,
    QHalved,
    PPrimeRec,
    LegendreParity,
    SigmaFromP,
    SigmaRec,
    EulerConv,
    LambertAgree,
    BellT31,
    BellT32,
    BellCor31,
    BellCor32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    None,
    G,
    M,
}

impl IdentityId {
    pub const ALL: [IdentityId; 18] = [
        IdentityId::Theorem1,
        IdentityId::G6Triangular,
        IdentityId::RrCor2,
        IdentityId::RrCor3,
        IdentityId::P25P35Rec,
        IdentityId::P15P45Rec,
        IdentityId::QDoubled,
        IdentityId::QHalved,
        IdentityId::PPrimeRec,
        IdentityId::LegendreParity,
        IdentityId::SigmaFromP,
        IdentityId::SigmaRec,
        IdentityId::EulerConv,
        IdentityId::LambertAgree,
        IdentityId::BellT31,
        IdentityId::BellT32,
        IdentityId::BellCor31,
        IdentityId::BellCor32,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            IdentityId::Theorem1 => "THEOREM1",
            IdentityId::G6Triangular => "G6_TRIANGULAR",
            IdentityId::RrCor2 => "RR_COR2",
            IdentityId::RrCor3 => "RR_COR3",
            IdentityId::P25P35Rec => "P25P35_REC",
            IdentityId::P15P45Rec => "P15P45_REC",
            IdentityId::QDoubled => "Q_DOUBLED",
            IdentityId::QHalved => "Q_HALVED",
            IdentityId::PPrimeRec => "PPRIME_REC",
            IdentityId::LegendreParity => "LEGENDRE_PARITY",
            IdentityId::SigmaFromP => "SIGMA_FROM_P",
            IdentityId::SigmaRec => "SIGMA_REC",
            IdentityId::EulerConv => "EULER_CONV",
            IdentityId::LambertAgree => "LAMBERT_AGREE",
            IdentityId::BellT31 => "BELL_T31",
            IdentityId::BellT32 => "BELL_T32",
            IdentityId::BellCor31 => "BELL_COR31",
            IdentityId::BellCor32 => "BELL_COR32",
        }
    }

    pub fn param_kind(&self) -> ParamKind {
        match self {
            IdentityId::Theorem1 => ParamKind::G,
            IdentityId::G6Triangular
            | IdentityId::RrCor2
            | IdentityId::RrCor3
            | IdentityId::P25P35Rec
            | IdentityId::P15P45Rec
            | IdentityId::QDoubled
            | IdentityId::QHalved => ParamKind::None,
            _ => ParamKind::M,
        }
    }

    /// Whether the check evaluates the full partial Bell triangle (cubic cost).
    pub fn is_cubic(&self) -> bool {
        matches!(self, IdentityId::BellCor31 | IdentityId::BellCor32)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    /// Case-insensitive; `-` and `_` are interchangeable.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == norm)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Parameters an identity may take; only the relevant one is read.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IdentityParams {
    pub g: Option<u64>,
    pub m: Option<u64>,
}

impl IdentityParams {
    pub fn g(g: u64) -> Self {
        Self {
            g: Some(g),
            m: None,
        }
    }

    pub fn m(m: u64) -> Self {
        Self {
            g: None,
            m: Some(m),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Verified,
    Failed,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Verified => "VERIFIED",
            Status::Failed => "FAILED",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub n: u64,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

/// Outcome of one identity check. The status is derived from
/// `first_mismatch`, so the two can never disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub params: BTreeMap<String, i64>,
    pub order: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl VerificationReport {
    pub fn status(&self) -> Status {
        if self.first_mismatch.is_some() {
            Status::Failed
        } else {
            Status::Verified
        }
    }

    pub fn is_verified(&self) -> bool {
        self.status() == Status::Verified
    }
}

fn first_mismatch<I>(pairs: I) -> Option<Mismatch>
where
    I: IntoIterator<Item = (u64, BigInt, BigInt)>,
{
    pairs
        .into_iter()
        .find(|(_, l, r)| l != r)
        .map(|(n, lhs, rhs)| Mismatch { n, lhs, rhs })
}

fn series_mismatch(lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> Option<Mismatch> {
    lhs.first_mismatch(rhs).map(|i| Mismatch {
        n: i as u64,
        lhs: lhs.coeffs()[i].clone(),
        rhs: rhs.coeffs()[i].clone(),
    })
}

/// Direct `sigma'_m(n)` by trial division, `n = 1..=order`.
fn direct_sigma(m: u64, order: usize) -> Result<Vec<BigInt>> {
    (1..=order as u64).map(|n| sigma_prime(m, n)).collect()
}

/// Computes both sides of `id` over `0..=order` (or `1..=order` where the
/// identity is stated for positive `n`) and reports the first disagreement.
pub fn verify_identity(
    id: IdentityId,
    params: IdentityParams,
    order: usize,
) -> Result<VerificationReport> {
    let mut report_params = BTreeMap::new();
    let m = match id.param_kind() {
        ParamKind::G => {
            let g = params
                .g
                .ok_or_else(|| invalid(format!("{id} needs parameter g")))?;
            GonalSpec::new(g)?;
            report_params.insert("g".to_string(), g as i64);
            0
        }
        ParamKind::M => {
            let m = params
                .m
                .ok_or_else(|| invalid(format!("{id} needs parameter m")))?;
            gonal_for_m(m)?;
            report_params.insert("m".to_string(), m as i64);
            m
        }
        ParamKind::None => 0,
    };
    let positive = || 1..=order as u64;

    let first_mismatch = match id {
        IdentityId::Theorem1 => {
            let spec = GonalSpec::new(params.g.unwrap_or_default())?;
            series_mismatch(&theorem1_lhs(spec, order), &gonal_series(spec, order))
        }
        IdentityId::G6Triangular => {
            let spec = GonalSpec::new(6)?;
            series_mismatch(&theorem1_lhs(spec, order), &triangular_sign_series(order))
        }
        IdentityId::RrCor2 => {
            let p = PartitionFamily::Unrestricted.generating_function(order)?;
            let rhs = &p * &gonal_series(heptagonal(), order);
            series_mismatch(&rr_sum_series(RrVariant::Second, order), &rhs)
        }
        IdentityId::RrCor3 => {
            let rhs = &rr_sum_series(RrVariant::First, order) * &gonal_series(heptagonal(), order);
            series_mismatch(&dilated_pentagonal_series(order), &rhs)
        }
        IdentityId::P25P35Rec => {
            let p = build_table(PartitionFamily::Unrestricted, order)?;
            let target = build_table(PartitionFamily::P25P35, order)?;
            first_mismatch(
                (0..=order as u64)
                    .map(|n| Ok((n, rec_p25_p35(n, &p)?, target.value(n as i64)?)))
                    .collect::<Result<Vec<_>>>()?,
            )
        }
        IdentityId::P15P45Rec => {
            let f = build_table(PartitionFamily::P15P45, order)?;
            first_mismatch(
                (0..=order as u64)
                    .map(|n| Ok((n, rec_p15_p45(n, &f)?, f.value(n as i64)?)))
                    .collect::<Result<Vec<_>>>()?,
            )
        }
        IdentityId::QDoubled | IdentityId::QHalved => {
            let q = build_table(PartitionFamily::Distinct, order)?;
            let rec = if id == IdentityId::QDoubled {
                rec_q_doubled_pentagonal
            } else {
                rec_q_halved_pentagonal
            };
            first_mismatch(
                (0..=order as u64)
                    .map(|n| Ok((n, rec(n, &q)?, q.value(n as i64)?)))
                    .collect::<Result<Vec<_>>>()?,
            )
        }
        IdentityId::PPrimeRec => {
            let t = build_table(PartitionFamily::PPrime { m }, order)?;
            first_mismatch(
                positive()
                    .map(|n| Ok((n, rec_pprime(m, n, &t)?, t.value(n as i64)?)))
                    .collect::<Result<Vec<_>>>()?,
            )
        }
        IdentityId::LegendreParity => {
            let spec = gonal_for_m(m)?;
            let counts = parity_count_table(m, order)?;
            first_mismatch(positive().map(|n| {
                (
                    n,
                    counts[n as usize].difference(),
                    BigInt::from(e_coeff(spec, n)),
                )
            }))
        }
        IdentityId::SigmaFromP => {
            let t = build_table(PartitionFamily::PPrime { m }, order)?;
            let direct = direct_sigma(m, order)?;
            first_mismatch(
                positive()
                    .map(|n| {
                        Ok((
                            n,
                            sigma_from_pprime(m, n, &t)?,
                            direct[n as usize - 1].clone(),
                        ))
                    })
                    .collect::<Result<Vec<_>>>()?,
            )
        }
        IdentityId::SigmaRec => {
            let table = DivisorTable::build(m, order)?;
            let direct = direct_sigma(m, order)?;
            first_mismatch(
                positive()
                    .map(|n| {
                        Ok((
                            n,
                            sigma_recurrence(m, n, &table)?,
                            direct[n as usize - 1].clone(),
                        ))
                    })
                    .collect::<Result<Vec<_>>>()?,
            )
        }
        IdentityId::EulerConv => {
            let sigma = DivisorTable::build(m, order)?;
            let t = build_table(PartitionFamily::PPrime { m }, order)?;
            first_mismatch(
                positive()
                    .map(|n| {
                        let lhs = BigInt::from(n) * t.get(n as i64)?;
                        Ok((n, lhs, euler_convolution(m, n, &sigma, &t)?))
                    })
                    .collect::<Result<Vec<_>>>()?,
            )
        }
        IdentityId::LambertAgree => {
            let lambert = lambert_series_sigma_prime(m, order)?;
            let direct = direct_sigma(m, order)?;
            first_mismatch(positive().map(|n| {
                (
                    n,
                    lambert.coeffs()[n as usize].clone(),
                    direct[n as usize - 1].clone(),
                )
            }))
        }
        IdentityId::BellT31 | IdentityId::BellT32 => {
            let pairs = if id == IdentityId::BellT31 {
                bellpoly::theorem31_pairs(m, order)?
            } else {
                bellpoly::theorem32_pairs(m, order)?
            };
            first_mismatch(
                pairs
                    .into_iter()
                    .zip(positive())
                    .map(|((l, r), n)| (n, l, r)),
            )
        }
        IdentityId::BellCor31 | IdentityId::BellCor32 => {
            let via = if id == IdentityId::BellCor31 {
                bellpoly::sigma_via_e_all(m, order)?
            } else {
                bellpoly::sigma_via_p_all(m, order)?
            };
            let direct = direct_sigma(m, order)?;
            first_mismatch(
                via.into_iter()
                    .zip(direct)
                    .zip(positive())
                    .map(|((l, r), n)| (n, l, r)),
            )
        }
    };

    Ok(VerificationReport {
        identity: id,
        params: report_params,
        order,
        first_mismatch,
    })
}

/// Orders above this are clamped for the cubic-cost Bell corollary checks
/// when run in bulk.
pub const BULK_CUBIC_ORDER_CAP: usize = 200;

/// One bulk job: identity, parameters, order.
pub type Job = (IdentityId, IdentityParams, usize);

/// Default sweep: `g in 5..=12` for the product identity, `m in 3..=8` for
/// the `m`-parameterized ones, and a single run for the rest.
pub fn default_jobs(order: usize) -> Vec<Job> {
    let mut jobs = Vec::new();
    for id in IdentityId::ALL {
        let job_order = if id.is_cubic() {
            order.min(BULK_CUBIC_ORDER_CAP)
        } else {
            order
        };
        match id.param_kind() {
            ParamKind::G => jobs.extend((5..=12).map(|g| (id, IdentityParams::g(g), job_order))),
            ParamKind::M => jobs.extend((3..=8).map(|m| (id, IdentityParams::m(m), job_order))),
            ParamKind::None => jobs.push((id, IdentityParams::default(), job_order)),
        }
    }
    jobs
}

/// Runs `jobs` on up to `workers` threads. Results come back sorted by
/// identity id, then parameters, independent of scheduling.
pub fn run_jobs(jobs: &[Job], workers: usize) -> Result<Vec<VerificationReport>> {
    let workers = workers.clamp(1, jobs.len().max(1));
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Result<VerificationReport>>>> = Mutex::new(vec![None; jobs.len()]);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(id, params, order)) = jobs.get(i) else {
                    break;
                };
                let outcome = verify_identity(id, params, order);
                slots.lock().expect("no poisoned workers")[i] = Some(outcome);
            });
        }
    });
    let mut reports = slots
        .into_inner()
        .expect("no poisoned workers")
        .into_iter()
        .map(|slot| slot.expect("every job ran"))
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by(|a, b| (a.identity.as_str(), &a.params).cmp(&(b.identity.as_str(), &b.params)));
    Ok(reports)
}

/// Every identity with the default sweep at `order`.
pub fn verify_all(order: usize, workers: usize) -> Result<Vec<VerificationReport>> {
    run_jobs(&default_jobs(order), workers)
}
