use std::ffi::{CStr, CString};
use std::ptr;

use qgonal_ffi::*;

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    qg_string_free(p);
    s
}

unsafe fn coefficient(s: *const QgSeries, n: i64) -> String {
    let mut out = ptr::null_mut();
    assert_eq!(qg_series_coefficient(s, n, &mut out), QgStatus::Ok);
    take_string(out)
}

#[test]
fn product_matches_gonal_series() {
    unsafe {
        let (mut lhs, mut rhs) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(qg_series_theorem1_lhs(9, 300, &mut lhs), QgStatus::Ok);
        assert_eq!(qg_series_gonal(9, 300, &mut rhs), QgStatus::Ok);
        let mut at = 0i64;
        assert_eq!(qg_series_first_mismatch(lhs, rhs, &mut at), QgStatus::Ok);
        assert_eq!(at, -1);
        let mut order = 0u64;
        assert_eq!(qg_series_order(lhs, &mut order), QgStatus::Ok);
        assert_eq!(order, 300);
        qg_series_free(lhs);
        qg_series_free(rhs);
    }
}

#[test]
fn euler_function_inverse_is_partition_series() {
    unsafe {
        let (offsets, moduli) = ([1u64], [1u64]);
        let mut euler = ptr::null_mut();
        assert_eq!(
            qg_series_pochhammer(offsets.as_ptr(), moduli.as_ptr(), 1, 100, &mut euler),
            QgStatus::Ok
        );
        assert_eq!(coefficient(euler, 5), "1");
        assert_eq!(coefficient(euler, 3), "0");
        let mut p = ptr::null_mut();
        assert_eq!(qg_series_invert(euler, &mut p), QgStatus::Ok);
        assert_eq!(coefficient(p, 100), "190569292");
        assert_eq!(coefficient(p, -1), "0");

        let mut one = ptr::null_mut();
        assert_eq!(qg_series_mul(euler, p, &mut one), QgStatus::Ok);
        let mut diff = ptr::null_mut();
        assert_eq!(qg_series_sub(one, one, &mut diff), QgStatus::Ok);
        assert_eq!(coefficient(diff, 0), "0");
        let mut sum = ptr::null_mut();
        assert_eq!(qg_series_add(one, diff, &mut sum), QgStatus::Ok);
        assert_eq!(coefficient(sum, 0), "1");
        assert_eq!(coefficient(sum, 50), "0");

        let mut out = ptr::null_mut();
        assert_eq!(
            qg_series_coefficient(p, 101, &mut out),
            QgStatus::OutOfRange
        );
        assert!(!qg_last_error_message().is_null());
        assert_eq!(
            qg_series_invert(diff, &mut out.cast()),
            QgStatus::NotInvertible
        );

        for s in [euler, p, one, diff, sum] {
            qg_series_free(s);
        }
    }
}

#[test]
fn rogers_ramanujan_sum() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(
            qg_series_rr_sum(QgRrVariant::First as u32, 20, &mut s),
            QgStatus::Ok
        );
        // partitions of 20 into parts congruent to 1 or 4 mod 5
        assert_eq!(coefficient(s, 20), "31");
        qg_series_free(s);
        assert_eq!(qg_series_rr_sum(9, 20, &mut s), QgStatus::InvalidArgument);
    }
}

#[test]
fn scalar_functions() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(
            qg_partition_count(QgFamily::Distinct as u32, 0, 0, 15, &mut out),
            QgStatus::Ok
        );
        assert_eq!(take_string(out), "27");
        assert_eq!(
            qg_partition_count(QgFamily::P25P35 as u32, 0, 0, 8, &mut out),
            QgStatus::Ok
        );
        assert_eq!(take_string(out), "3");
        assert_eq!(
            qg_partition_count(QgFamily::Residue as u32, 0, 3, 9, &mut out),
            QgStatus::Ok
        );
        assert_eq!(take_string(out), "3");
        assert_eq!(
            qg_partition_count(QgFamily::PPrime as u32, 0, 2, 9, &mut out),
            QgStatus::InvalidArgument
        );
        assert_eq!(
            qg_partition_count(42, 0, 0, 9, &mut out),
            QgStatus::InvalidArgument
        );

        assert_eq!(qg_sigma_prime(4, 30, &mut out), QgStatus::Ok);
        assert_eq!(take_string(out), "24");
        assert_eq!(qg_sigma_prime(4, 0, &mut out), QgStatus::InvalidArgument);

        let mut e = 0i8;
        assert_eq!(qg_e_coeff(5, 2, &mut e), QgStatus::Ok);
        assert_eq!(e, -1);
        assert_eq!(qg_e_coeff(5, 5, &mut e), QgStatus::Ok);
        assert_eq!(e, 1);
        assert_eq!(qg_e_coeff(5, 4, &mut e), QgStatus::Ok);
        assert_eq!(e, 0);
        assert_eq!(qg_e_coeff(4, 12, &mut e), QgStatus::InvalidArgument);
    }
}

#[test]
fn verification_reports() {
    unsafe {
        let id = CString::new("sigma-rec").unwrap();
        let mut report = ptr::null_mut();
        assert_eq!(qg_verify(id.as_ptr(), 0, 5, 100, &mut report), QgStatus::Ok);
        let mut ok = false;
        assert_eq!(qg_report_is_verified(report, &mut ok), QgStatus::Ok);
        assert!(ok);
        let mut json = ptr::null_mut();
        assert_eq!(qg_report_json(report, &mut json), QgStatus::Ok);
        let json = take_string(json);
        assert!(json.contains("\"identity\":\"SIGMA_REC\""), "{json}");
        assert!(json.contains("\"first_mismatch\":null"), "{json}");
        qg_report_free(report);

        let bad = CString::new("NOPE").unwrap();
        assert_eq!(
            qg_verify(bad.as_ptr(), 0, 0, 10, &mut report),
            QgStatus::InvalidArgument
        );
        let msg = CStr::from_ptr(qg_last_error_message()).to_str().unwrap();
        assert!(msg.contains("NOPE"), "{msg}");
        let theorem1 = CString::new("THEOREM1").unwrap();
        assert_eq!(
            qg_verify(theorem1.as_ptr(), 0, 0, 10, &mut report),
            QgStatus::InvalidArgument
        );
    }
}

#[test]
fn null_pointers_are_reported() {
    unsafe {
        assert_eq!(
            qg_series_gonal(5, 10, ptr::null_mut()),
            QgStatus::NullPointer
        );
        let mut out = ptr::null_mut();
        assert_eq!(
            qg_series_invert(ptr::null(), &mut out),
            QgStatus::NullPointer
        );
        assert_eq!(
            qg_series_pochhammer(ptr::null(), ptr::null(), 2, 10, &mut out),
            QgStatus::NullPointer
        );
        assert_eq!(
            qg_series_pochhammer(ptr::null(), ptr::null(), 0, 10, &mut out),
            QgStatus::InvalidArgument
        );
        assert_eq!(
            qg_verify(ptr::null(), 0, 0, 10, &mut ptr::null_mut()),
            QgStatus::NullPointer
        );
        assert_eq!(
            qg_report_is_verified(ptr::null(), &mut false),
            QgStatus::NullPointer
        );
        qg_series_free(ptr::null_mut());
        qg_report_free(ptr::null_mut());
        qg_string_free(ptr::null_mut());
    }
}
