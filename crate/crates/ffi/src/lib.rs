//! C ABI over `sma-core`.
//!
//! Arrays cross the boundary as opaque `SmaArray` handles owned by the caller
//! and released with `sma_array_free`. Every fallible call returns an
//! `SmaStatus`; on failure `sma_last_error` describes what went wrong on the
//! calling thread. Strings handed out by the library are released with
//! `sma_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sma_core::checker::{verify_same_row_pairs, verify_shiftable, verify_sma};
use sma_core::composer::{feasible, generate, plan};
use sma_core::format::{parse, to_csv, to_json, GridFormat};
use sma_core::heffter::{mirror_concat, verify_heffter};
use sma_core::{Error, SignedArray};

/// Result code of every fallible call. Codes 1 to 3 match the `sma` exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmaStatus {
    Ok = 0,
    InvalidArgument = 1,
    Nonexistent = 2,
    VerificationFailed = 3,
    NullPointer = 4,
    Overflow = 5,
    Parse = 6,
    Panic = 7,
}

/// Property checked by `sma_verify`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmaCheck {
    Sma = 0,
    SameRow = 1,
    Shiftable = 2,
    Heffter = 3,
}

/// Opaque grid handle.
pub struct SmaArray {
    inner: SignedArray,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).unwrap_or_default());
}

fn status_of(e: &Error) -> SmaStatus {
    match e {
        Error::Nonexistent { .. } => SmaStatus::Nonexistent,
        Error::Overflow { .. } => SmaStatus::Overflow,
        Error::Parse(_) | Error::Ragged { .. } => SmaStatus::Parse,
        _ => SmaStatus::InvalidArgument,
    }
}

fn guard(body: impl FnOnce() -> Result<(), (SmaStatus, String)>) -> SmaStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => SmaStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SmaStatus::Panic
        }
    }
}

fn core<T>(r: sma_core::Result<T>) -> Result<T, (SmaStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (SmaStatus, String) {
    (SmaStatus::NullPointer, format!("{what} is null"))
}

unsafe fn array<'a>(a: *const SmaArray) -> Result<&'a SignedArray, (SmaStatus, String)> {
    a.as_ref().map(|h| &h.inner).ok_or_else(|| null("array"))
}

unsafe fn put_array(out: *mut *mut SmaArray, a: SignedArray) -> Result<(), (SmaStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(SmaArray { inner: a }));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (SmaStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = CString::new(s).map_err(|e| (SmaStatus::InvalidArgument, e.to_string()))?.into_raw();
    Ok(())
}

/// Message for the last failed call on this thread, empty after a success.
/// The pointer stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn sma_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static name of a status code, e.g. "NONEXISTENT".
#[no_mangle]
pub extern "C" fn sma_status_name(status: SmaStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        SmaStatus::Ok => b"OK\0",
        SmaStatus::InvalidArgument => b"INVALID_ARGUMENT\0",
        SmaStatus::Nonexistent => b"NONEXISTENT\0",
        SmaStatus::VerificationFailed => b"VERIFICATION_FAILED\0",
        SmaStatus::NullPointer => b"NULL_POINTER\0",
        SmaStatus::Overflow => b"OVERFLOW\0",
        SmaStatus::Parse => b"PARSE\0",
        SmaStatus::Panic => b"PANIC\0",
    };
    s.as_ptr().cast()
}

/// Builds an m x n array into `*out`.
///
/// # Safety
/// `out` must be null or point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn sma_generate(m: usize, n: usize, out: *mut *mut SmaArray) -> SmaStatus {
    guard(|| put_array(out, core(generate(m, n))?))
}

/// Copies `rows * cols` row-major entries into a new array.
///
/// # Safety
/// `entries` must point to `rows * cols` readable values; `out` as in `sma_generate`.
#[no_mangle]
pub unsafe extern "C" fn sma_from_entries(
    rows: usize,
    cols: usize,
    entries: *const i64,
    out: *mut *mut SmaArray,
) -> SmaStatus {
    guard(|| {
        let len = rows.checked_mul(cols).ok_or((SmaStatus::InvalidArgument, "size overflows".to_string()))?;
        let values = if len == 0 {
            Vec::new()
        } else if entries.is_null() {
            return Err(null("entries"));
        } else {
            std::slice::from_raw_parts(entries, len).to_vec()
        };
        put_array(out, core(SignedArray::new(rows, cols, values))?)
    })
}

/// Parses CSV or JSON text (format is detected from the content).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` as in `sma_generate`.
#[no_mangle]
pub unsafe extern "C" fn sma_parse(text: *const c_char, out: *mut *mut SmaArray) -> SmaStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text).to_str().map_err(|e| (SmaStatus::Parse, e.to_string()))?;
        put_array(out, core(parse(s, GridFormat::detect(None, s)))?)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `a` must be null or a handle from this library that was not freed yet.
#[no_mangle]
pub unsafe extern "C" fn sma_array_free(a: *mut SmaArray) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Number of rows, 0 for a null handle.
///
/// # Safety
/// `a` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sma_array_rows(a: *const SmaArray) -> usize {
    a.as_ref().map_or(0, |h| h.inner.rows())
}

/// Number of columns, 0 for a null handle.
///
/// # Safety
/// `a` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sma_array_cols(a: *const SmaArray) -> usize {
    a.as_ref().map_or(0, |h| h.inner.cols())
}

/// Reads the entry at 0-based (`row`, `col`).
///
/// # Safety
/// `a` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn sma_array_get(a: *const SmaArray, row: usize, col: usize, out: *mut i64) -> SmaStatus {
    guard(|| {
        let a = array(a)?;
        let v = a
            .get(row, col)
            .ok_or_else(|| (SmaStatus::InvalidArgument, format!("cell ({row}, {col}) outside {}x{}", a.rows(), a.cols())))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = v;
        Ok(())
    })
}

/// Copies all entries row-major into `buf`, which holds `len` values.
///
/// # Safety
/// `a` must be null or a live handle; `buf` must have room for `len` values.
#[no_mangle]
pub unsafe extern "C" fn sma_array_copy_entries(a: *const SmaArray, buf: *mut i64, len: usize) -> SmaStatus {
    guard(|| {
        let e = array(a)?.entries();
        if len < e.len() {
            return Err((SmaStatus::InvalidArgument, format!("buffer holds {len}, need {}", e.len())));
        }
        if e.is_empty() {
            return Ok(());
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(e.as_ptr(), buf, e.len());
        Ok(())
    })
}

/// Returns `SMA_STATUS_OK` when the check passes and
/// `SMA_STATUS_VERIFICATION_FAILED` with the first violation otherwise.
///
/// # Safety
/// `a` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sma_verify(a: *const SmaArray, check: SmaCheck) -> SmaStatus {
    guard(|| {
        let a = array(a)?;
        let report = match check {
            SmaCheck::Sma => verify_sma(a),
            SmaCheck::SameRow => verify_same_row_pairs(a),
            SmaCheck::Shiftable => core(verify_shiftable(a))?,
            SmaCheck::Heffter => verify_heffter(a),
        };
        match report.violations.first() {
            None => Ok(()),
            Some(v) => Err((SmaStatus::VerificationFailed, v.to_string())),
        }
    })
}

/// Adds `k` to every positive entry and subtracts it from every negative one.
///
/// # Safety
/// `a` must be null or a live handle; `out` as in `sma_generate`.
#[no_mangle]
pub unsafe extern "C" fn sma_shift(a: *const SmaArray, k: u64, out: *mut *mut SmaArray) -> SmaStatus {
    guard(|| put_array(out, core(array(a)?.shift(k))?))
}

/// Builds `[H, -H]` from a Heffter-like grid.
///
/// # Safety
/// `a` must be null or a live handle; `out` as in `sma_generate`.
#[no_mangle]
pub unsafe extern "C" fn sma_mirror(a: *const SmaArray, out: *mut *mut SmaArray) -> SmaStatus {
    guard(|| put_array(out, core(mirror_concat(array(a)?))?))
}

/// Writes whether an m x n array exists. `n` must be even and positive.
///
/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn sma_feasible(m: usize, n: usize, out: *mut bool) -> SmaStatus {
    guard(|| {
        let ok = core(feasible(m, n))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ok;
        Ok(())
    })
}

/// One-line description of the construction used for m x n.
///
/// # Safety
/// `out` must be null or writable; free the result with `sma_string_free`.
#[no_mangle]
pub unsafe extern "C" fn sma_plan(m: usize, n: usize, out: *mut *mut c_char) -> SmaStatus {
    guard(|| put_string(out, core(plan(m, n))?.to_string()))
}

/// CSV text of the array, one row per line.
///
/// # Safety
/// `a` must be null or a live handle; free the result with `sma_string_free`.
#[no_mangle]
pub unsafe extern "C" fn sma_to_csv(a: *const SmaArray, out: *mut *mut c_char) -> SmaStatus {
    guard(|| put_string(out, to_csv(array(a)?)))
}

/// JSON text of the array.
///
/// # Safety
/// `a` must be null or a live handle; free the result with `sma_string_free`.
#[no_mangle]
pub unsafe extern "C" fn sma_to_json(a: *const SmaArray, out: *mut *mut c_char) -> SmaStatus {
    guard(|| put_string(out, to_json(array(a)?)))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library that was not freed yet.
#[no_mangle]
pub unsafe extern "C" fn sma_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
