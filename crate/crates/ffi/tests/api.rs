use std::ffi::{CStr, CString};
use std::ptr;

use sma_core::fixtures::Fixture;
use sma_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(sma_last_error()) }.to_string_lossy().into_owned()
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { sma_string_free(p) };
    s
}

fn generated(m: usize, n: usize) -> *mut SmaArray {
    let mut a = ptr::null_mut();
    assert_eq!(unsafe { sma_generate(m, n, &mut a) }, SmaStatus::Ok);
    a
}

#[test]
fn generate_read_back_and_free() {
    let a = generated(3, 12);
    unsafe {
        assert_eq!((sma_array_rows(a), sma_array_cols(a)), (3, 12));
        let mut v = 0;
        assert_eq!(sma_array_get(a, 0, 0, &mut v), SmaStatus::Ok);
        assert_eq!(v, 1);
        assert_eq!(sma_array_get(a, 3, 0, &mut v), SmaStatus::InvalidArgument);
        assert!(last_error().contains("outside"));
        let mut buf = vec![0i64; 36];
        assert_eq!(sma_array_copy_entries(a, buf.as_mut_ptr(), 35), SmaStatus::InvalidArgument);
        assert_eq!(sma_array_copy_entries(a, buf.as_mut_ptr(), 36), SmaStatus::Ok);
        assert_eq!(buf, Fixture::Appendix1Sma3x12.load().entries());
        let mut csv = ptr::null_mut();
        assert_eq!(sma_to_csv(a, &mut csv), SmaStatus::Ok);
        assert_eq!(take_string(csv), Fixture::Appendix1Sma3x12.csv());
        sma_array_free(a);
    }
}

#[test]
fn status_codes() {
    let mut a = ptr::null_mut();
    unsafe {
        assert_eq!(sma_generate(5, 2, &mut a), SmaStatus::Nonexistent);
        assert!(a.is_null());
        assert!(last_error().starts_with("NONEXISTENT: "));
        assert_eq!(sma_generate(3, 3, &mut a), SmaStatus::InvalidArgument);
        assert_eq!(sma_generate(3, 4, ptr::null_mut()), SmaStatus::NullPointer);
        assert_eq!(sma_verify(ptr::null(), SmaCheck::Sma), SmaStatus::NullPointer);
        assert_eq!(sma_array_rows(ptr::null()), 0);
        sma_array_free(ptr::null_mut());
        sma_string_free(ptr::null_mut());
        let name = CStr::from_ptr(sma_status_name(SmaStatus::VerificationFailed));
        assert_eq!(name.to_str().unwrap(), "VERIFICATION_FAILED");
        let a = generated(4, 4);
        assert!(last_error().is_empty());
        sma_array_free(a);
    }
}

#[test]
fn verify_shift_mirror() {
    unsafe {
        let a = generated(8, 6);
        for c in [SmaCheck::Sma, SmaCheck::SameRow, SmaCheck::Shiftable] {
            assert_eq!(sma_verify(a, c), SmaStatus::Ok);
        }
        let mut s = ptr::null_mut();
        assert_eq!(sma_shift(a, 24, &mut s), SmaStatus::Ok);
        assert_eq!(sma_verify(s, SmaCheck::Sma), SmaStatus::VerificationFailed);
        assert!(last_error().starts_with("out-of-range"), "{}", last_error());
        sma_array_free(s);
        sma_array_free(a);

        let text = CString::new(Fixture::Fig5Heffter5x3.csv()).unwrap();
        let mut h = ptr::null_mut();
        assert_eq!(sma_parse(text.as_ptr(), &mut h), SmaStatus::Ok);
        assert_eq!(sma_verify(h, SmaCheck::Heffter), SmaStatus::Ok);
        let mut m = ptr::null_mut();
        assert_eq!(sma_mirror(h, &mut m), SmaStatus::Ok);
        let mut csv = ptr::null_mut();
        assert_eq!(sma_to_csv(m, &mut csv), SmaStatus::Ok);
        assert_eq!(take_string(csv), Fixture::Fig5Sma5x6.csv());
        sma_array_free(m);
        sma_array_free(h);
    }
}

#[test]
fn entries_parse_and_json() {
    unsafe {
        let mut a = ptr::null_mut();
        let e = [1i64, -1, -2, 2, -3, 3];
        assert_eq!(sma_from_entries(3, 2, ptr::null(), &mut a), SmaStatus::NullPointer);
        assert_eq!(sma_from_entries(3, 2, e.as_ptr(), &mut a), SmaStatus::Ok);
        let mut z = ptr::null_mut();
        assert_eq!(sma_shift(a, i64::MAX as u64, &mut z), SmaStatus::Overflow);
        assert_eq!(sma_shift(a, u64::MAX, &mut z), SmaStatus::InvalidArgument);
        assert!(z.is_null());
        let mut json = ptr::null_mut();
        assert_eq!(sma_to_json(a, &mut json), SmaStatus::Ok);
        let text = CString::new(take_string(json)).unwrap();
        let mut b = ptr::null_mut();
        assert_eq!(sma_parse(text.as_ptr(), &mut b), SmaStatus::Ok);
        assert_eq!(sma_array_cols(b), 2);
        sma_array_free(a);
        sma_array_free(b);
        let bad = CString::new("1,-1\n2\n").unwrap();
        assert_eq!(sma_parse(bad.as_ptr(), &mut b), SmaStatus::Parse);
    }
}

#[test]
fn feasible_and_plan() {
    unsafe {
        let mut ok = false;
        assert_eq!(sma_feasible(7, 2, &mut ok), SmaStatus::Ok);
        assert!(ok);
        assert_eq!(sma_feasible(6, 2, &mut ok), SmaStatus::Ok);
        assert!(!ok);
        assert_eq!(sma_feasible(6, 3, &mut ok), SmaStatus::InvalidArgument);
        let mut p = ptr::null_mut();
        assert_eq!(sma_plan(11, 8, &mut p), SmaStatus::Ok);
        assert_eq!(take_string(p), "STACK_3_PLUS_EVEN shift=12");
    }
}

#[test]
fn header_is_in_sync() {
    let header = include_str!("../include/sma.h");
    for name in [
        "sma_generate", "sma_from_entries", "sma_parse", "sma_array_free", "sma_array_rows",
        "sma_array_cols", "sma_array_get", "sma_array_copy_entries", "sma_verify", "sma_shift",
        "sma_mirror", "sma_feasible", "sma_plan", "sma_to_csv", "sma_to_json", "sma_string_free",
        "sma_last_error", "sma_status_name",
    ] {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    assert!(header.contains("typedef struct SmaArray SmaArray;"));
}
