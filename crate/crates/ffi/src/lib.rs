//! C ABI over `qgonal`.
//!
//! Every function returns a [`QgStatus`]; results come back through out
//! pointers. Series and verification reports are opaque handles released with
//! their `_free` function. Big integers cross the boundary as NUL-terminated
//! decimal strings owned by the library and released with `qg_string_free`.
//! Enum arguments are passed as plain integers and range-checked.
//! After a non-OK status, `qg_last_error_message` describes the failure on
//! the calling thread.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qgonal::divisors;
use qgonal::gonal::{self, GonalSpec};
use qgonal::identities::{IdentityId, IdentityParams};
use qgonal::partitions::{build_table, PartitionFamily};
use qgonal::qseries::{self, ExponentClass, RrVariant, TruncatedSeries};
use qgonal::{Error, VerificationReport};

/// Outcome of a call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NotInvertible = 3,
    OutOfRange = 4,
    InexactDivision = 5,
    InvalidUtf8 = 6,
    Panic = 7,
}

/// Family codes accepted by `qg_partition_count`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QgFamily {
    Unrestricted = 0,
    Distinct = 1,
    /// Parts congruent to `r` mod `m`.
    Residue = 2,
    /// Parts congruent to 0, 1 or `m - 1` mod `m`.
    PPrime = 3,
    P25P35 = 4,
    P15P45 = 5,
}

/// Variant codes accepted by `qg_series_rr_sum`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QgRrVariant {
    /// `sum q^(n^2) / (q;q)_n`
    First = 1,
    /// `sum q^(n^2+n) / (q;q)_n`
    Second = 2,
}

/// Truncated power series with big-integer coefficients.
pub struct QgSeries {
    inner: TruncatedSeries,
}

/// Result of verifying one identity.
pub struct QgReport {
    inner: VerificationReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(QgStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::NotInvertible(_) => QgStatus::NotInvertible,
            Error::BeyondOrder { .. }
            | Error::TableTooShort { .. }
            | Error::GuardExceeded { .. }
            | Error::IndexOutOfBounds { .. } => QgStatus::OutOfRange,
            Error::InexactDivision { .. } => QgStatus::InexactDivision,
            Error::InvalidParameter(_)
            | Error::FamilyMismatch { .. }
            | Error::UnknownIdentity(_) => QgStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn fail(status: QgStatus, msg: impl Into<String>) -> Failure {
    Failure(status, msg.into())
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

/// Runs `body` behind a panic guard and converts its outcome to a status.
fn guarded(body: impl FnOnce() -> Result<(), Failure>) -> QgStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => QgStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            QgStatus::Panic
        }
    }
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(fail(QgStatus::NullPointer, "output pointer is null"));
    }
    out.write(value);
    Ok(())
}

unsafe fn series_ref<'a>(s: *const QgSeries) -> Result<&'a TruncatedSeries, Failure> {
    s.as_ref()
        .map(|s| &s.inner)
        .ok_or_else(|| fail(QgStatus::NullPointer, "series handle is null"))
}

unsafe fn put_series(out: *mut *mut QgSeries, inner: TruncatedSeries) -> Result<(), Failure> {
    if out.is_null() {
        return Err(fail(QgStatus::NullPointer, "output pointer is null"));
    }
    out.write(Box::into_raw(Box::new(QgSeries { inner })));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| fail(QgStatus::InvalidArgument, "string contains NUL"))?;
    write_out(out, c.into_raw())
}

fn usize_of(v: u64, what: &str) -> Result<usize, Failure> {
    usize::try_from(v).map_err(|_| {
        fail(
            QgStatus::OutOfRange,
            format!("{what} does not fit in usize"),
        )
    })
}

fn spec(g: u64) -> Result<GonalSpec, Failure> {
    Ok(GonalSpec::new(g)?)
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn qg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn qg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Product of `(1 - q^e)` over every `e ≡ offsets[i] (mod moduli[i])`,
/// `e >= 1`, truncated at `order`. Requires `1 <= offsets[i] <= moduli[i]`.
#[no_mangle]
pub unsafe extern "C" fn qg_series_pochhammer(
    offsets: *const u64,
    moduli: *const u64,
    len: usize,
    order: u64,
    out: *mut *mut QgSeries,
) -> QgStatus {
    guarded(|| {
        if len > 0 && (offsets.is_null() || moduli.is_null()) {
            return Err(fail(QgStatus::NullPointer, "class arrays are null"));
        }
        let classes = (0..len)
            .map(|i| ExponentClass::new(*offsets.add(i), *moduli.add(i)))
            .collect::<qgonal::Result<Vec<_>>>()?;
        let series = qseries::pochhammer_product(&classes, usize_of(order, "order")?)?;
        put_series(out, series)
    })
}

/// `1 + sum_k (-1)^k (q^{P_{g,k}} + q^{Q_{g,k}})` truncated at `order`.
#[no_mangle]
pub unsafe extern "C" fn qg_series_gonal(g: u64, order: u64, out: *mut *mut QgSeries) -> QgStatus {
    guarded(|| {
        put_series(
            out,
            gonal::gonal_series(spec(g)?, usize_of(order, "order")?),
        )
    })
}

/// The triple product whose expansion is the `g`-gonal sign series.
#[no_mangle]
pub unsafe extern "C" fn qg_series_theorem1_lhs(
    g: u64,
    order: u64,
    out: *mut *mut QgSeries,
) -> QgStatus {
    guarded(|| {
        put_series(
            out,
            gonal::theorem1_lhs(spec(g)?, usize_of(order, "order")?),
        )
    })
}

/// Rogers-Ramanujan sum side truncated at `order`; `variant` is a `QgRrVariant`.
#[no_mangle]
pub unsafe extern "C" fn qg_series_rr_sum(
    variant: u32,
    order: u64,
    out: *mut *mut QgSeries,
) -> QgStatus {
    guarded(|| {
        let variant = match variant {
            v if v == QgRrVariant::First as u32 => RrVariant::First,
            v if v == QgRrVariant::Second as u32 => RrVariant::Second,
            v => {
                return Err(fail(
                    QgStatus::InvalidArgument,
                    format!("unknown variant code {v}"),
                ))
            }
        };
        put_series(
            out,
            qseries::rr_sum_series(variant, usize_of(order, "order")?),
        )
    })
}

/// `a + b` at the smaller of the two orders.
#[no_mangle]
pub unsafe extern "C" fn qg_series_add(
    a: *const QgSeries,
    b: *const QgSeries,
    out: *mut *mut QgSeries,
) -> QgStatus {
    guarded(|| put_series(out, series_ref(a)? + series_ref(b)?))
}

/// `a - b` at the smaller of the two orders.
#[no_mangle]
pub unsafe extern "C" fn qg_series_sub(
    a: *const QgSeries,
    b: *const QgSeries,
    out: *mut *mut QgSeries,
) -> QgStatus {
    guarded(|| put_series(out, series_ref(a)? - series_ref(b)?))
}

/// `a * b` at the smaller of the two orders.
#[no_mangle]
pub unsafe extern "C" fn qg_series_mul(
    a: *const QgSeries,
    b: *const QgSeries,
    out: *mut *mut QgSeries,
) -> QgStatus {
    guarded(|| put_series(out, series_ref(a)? * series_ref(b)?))
}

/// `1 / a`; fails with `QG_STATUS_NOT_INVERTIBLE` unless the constant term is 1.
#[no_mangle]
pub unsafe extern "C" fn qg_series_invert(a: *const QgSeries, out: *mut *mut QgSeries) -> QgStatus {
    guarded(|| put_series(out, series_ref(a)?.invert()?))
}

#[no_mangle]
pub unsafe extern "C" fn qg_series_order(s: *const QgSeries, out: *mut u64) -> QgStatus {
    guarded(|| write_out(out, series_ref(s)?.order() as u64))
}

/// Coefficient of `q^n` as a decimal string; 0 for negative `n`, an error
/// past the order.
#[no_mangle]
pub unsafe extern "C" fn qg_series_coefficient(
    s: *const QgSeries,
    n: i64,
    out: *mut *mut c_char,
) -> QgStatus {
    guarded(|| {
        let c = series_ref(s)?.coefficient(n)?;
        put_string(out, c.to_string())
    })
}

/// Lowest exponent where `a` and `b` differ within the common order, or -1.
#[no_mangle]
pub unsafe extern "C" fn qg_series_first_mismatch(
    a: *const QgSeries,
    b: *const QgSeries,
    out: *mut i64,
) -> QgStatus {
    guarded(|| {
        let n = series_ref(a)?.first_mismatch(series_ref(b)?);
        write_out(out, n.map_or(-1, |n| n as i64))
    })
}

#[no_mangle]
pub unsafe extern "C" fn qg_series_free(s: *mut QgSeries) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of partitions of `n` in `family` (a `QgFamily` code); `r` and `m`
/// are read only by the families that take them.
#[no_mangle]
pub unsafe extern "C" fn qg_partition_count(
    family: u32,
    r: u64,
    m: u64,
    n: u64,
    out: *mut *mut c_char,
) -> QgStatus {
    guarded(|| {
        let family = match family {
            0 => PartitionFamily::Unrestricted,
            1 => PartitionFamily::Distinct,
            2 => PartitionFamily::Residue { r, m },
            3 => PartitionFamily::PPrime { m },
            4 => PartitionFamily::P25P35,
            5 => PartitionFamily::P15P45,
            f => {
                return Err(fail(
                    QgStatus::InvalidArgument,
                    format!("unknown family code {f}"),
                ))
            }
        };
        let table = build_table(family, usize_of(n, "n")?)?;
        put_string(out, table.values()[n as usize].to_string())
    })
}

/// Sum of the divisors of `n >= 1` that are congruent to 0, 1 or `m - 1` mod `m`.
#[no_mangle]
pub unsafe extern "C" fn qg_sigma_prime(m: u64, n: u64, out: *mut *mut c_char) -> QgStatus {
    guarded(|| put_string(out, divisors::sigma_prime(m, n)?.to_string()))
}

/// Coefficient of `q^n` in the `g`-gonal sign series: -1, 0 or 1.
#[no_mangle]
pub unsafe extern "C" fn qg_e_coeff(g: u64, n: u64, out: *mut i8) -> QgStatus {
    guarded(|| write_out(out, gonal::e_coeff(spec(g)?, n)))
}

/// Verifies identity `id` (for example `"THEOREM1"`) up to `order`. `g` and
/// `m` are ignored when 0.
#[no_mangle]
pub unsafe extern "C" fn qg_verify(
    id: *const c_char,
    g: u64,
    m: u64,
    order: u64,
    out: *mut *mut QgReport,
) -> QgStatus {
    guarded(|| {
        if id.is_null() {
            return Err(fail(QgStatus::NullPointer, "identity id is null"));
        }
        let id: IdentityId = CStr::from_ptr(id)
            .to_str()
            .map_err(|_| fail(QgStatus::InvalidUtf8, "identity id is not UTF-8"))?
            .parse()?;
        let params = IdentityParams {
            g: (g != 0).then_some(g),
            m: (m != 0).then_some(m),
        };
        let inner = qgonal::verify_identity(id, params, usize_of(order, "order")?)?;
        if out.is_null() {
            return Err(fail(QgStatus::NullPointer, "output pointer is null"));
        }
        out.write(Box::into_raw(Box::new(QgReport { inner })));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn qg_report_is_verified(r: *const QgReport, out: *mut bool) -> QgStatus {
    guarded(|| {
        let r = r
            .as_ref()
            .ok_or_else(|| fail(QgStatus::NullPointer, "report handle is null"))?;
        write_out(out, r.inner.is_verified())
    })
}

/// The report as a JSON object with keys `identity`, `params`, `order`,
/// `status` and `first_mismatch`.
#[no_mangle]
pub unsafe extern "C" fn qg_report_json(r: *const QgReport, out: *mut *mut c_char) -> QgStatus {
    guarded(|| {
        let r = r
            .as_ref()
            .ok_or_else(|| fail(QgStatus::NullPointer, "report handle is null"))?;
        put_string(out, qgonal::cli::report_json(&r.inner).to_string())
    })
}

#[no_mangle]
pub unsafe extern "C" fn qg_report_free(r: *mut QgReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}
