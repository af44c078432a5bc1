//! C ABI over `cofsieve`.
//!
//! Objects cross the boundary as opaque handles created by `cof_*_parse` / `cof_*` constructors
//! and released with the matching `cof_*_free`. Every fallible call returns a [`CofStatus`];
//! on failure `cof_last_error` describes the problem until the next call on the same thread.
//! Strings returned through `char **` are owned by the caller and released with
//! `cof_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use cofsieve::csp::{macdonald_csp_suite, refined_csp_suite, CspReport};
use cofsieve::fillings::{enumerate_cof, macdonald_e};
use cofsieve::hall_littlewood::kostka_foulkes;
use cofsieve::{Composition, Error, Partition, SkewShape, SymPoly};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CofStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed text input.
    Parse = 3,
    /// Well-formed input outside the domain of the operation.
    Domain = 4,
    /// A Rust panic was caught at the boundary.
    Panic = 5,
}

/// A skew shape `lambda/mu`.
pub struct CofShape(SkewShape);

/// A symmetric polynomial with coefficients in `Z[q]`.
pub struct CofSymPoly(SymPoly);

/// The outcome of a cyclic sieving verification.
pub struct CofCspReport(CspReport);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let text = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

enum Failure {
    Null,
    Utf8,
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

/// Run `body`, translating errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> CofStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => CofStatus::Ok,
        Ok(Err(Failure::Null)) => {
            set_error("null pointer argument");
            CofStatus::NullPointer
        }
        Ok(Err(Failure::Utf8)) => {
            set_error("argument is not valid UTF-8");
            CofStatus::InvalidUtf8
        }
        Ok(Err(Failure::Lib(e))) => {
            set_error(&e.to_string());
            match e {
                Error::Parse(_) => CofStatus::Parse,
                _ => CofStatus::Domain,
            }
        }
        Err(_) => {
            set_error("internal panic");
            CofStatus::Panic
        }
    }
}

/// # Safety
/// `s` must be null or a valid nul-terminated string.
unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure::Null);
    }
    CStr::from_ptr(s).to_str().map_err(|_| Failure::Utf8)
}

/// # Safety
/// `p` must be null or point to a live value of type `T`.
unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or(Failure::Null)
}

/// # Safety
/// `out` must be null or valid for a pointer write.
unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null);
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

/// # Safety
/// `out` must be null or valid for a pointer write.
unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null);
    }
    *out = CString::new(s).expect("library output has no nul bytes").into_raw();
    Ok(())
}

/// Message for the last failed call on this thread; empty after a success. Valid until the
/// next call on the same thread.
#[no_mangle]
pub extern "C" fn cof_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must be null or a string returned through a `char **` out-parameter, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cof_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse a shape such as `"4,2,1/2,1"` or `"3,1"`.
///
/// # Safety
/// `text_in` must be a nul-terminated string and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn cof_shape_parse(text_in: *const c_char, out: *mut *mut CofShape) -> CofStatus {
    guard(|| {
        let shape: SkewShape = text(text_in)?.parse()?;
        put(out, CofShape(shape))
    })
}

/// # Safety
/// `shape` must be null or a handle from `cof_shape_parse`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cof_shape_free(shape: *mut CofShape) {
    if !shape.is_null() {
        drop(Box::from_raw(shape));
    }
}

/// Number of cells of the shape.
///
/// # Safety
/// `shape` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cof_shape_size(shape: *const CofShape) -> usize {
    shape.as_ref().map_or(0, |s| s.0.size())
}

/// Count the coinversion-free fillings with entries in `1..=m`.
///
/// # Safety
/// `shape` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn cof_count_fillings(shape: *const CofShape, m: usize, out: *mut u64) -> CofStatus {
    guard(|| {
        let shape = handle(shape)?;
        if out.is_null() {
            return Err(Failure::Null);
        }
        *out = enumerate_cof(&shape.0, m).count() as u64;
        Ok(())
    })
}

/// `E_{shape}(x_1..x_m; q, 0)` in the monomial basis.
///
/// # Safety
/// `shape` must be a live handle and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn cof_macdonald_e(shape: *const CofShape, m: usize, out: *mut *mut CofSymPoly) -> CofStatus {
    guard(|| {
        let shape = handle(shape)?;
        if m < shape.0.max_column_height() {
            return Err(Error::NotEnoughVariables { needed: shape.0.max_column_height(), got: m }.into());
        }
        put(out, CofSymPoly(macdonald_e(&shape.0, m)))
    })
}

/// The same polynomial in the Schur basis, as a new handle.
///
/// # Safety
/// `poly` must be a live handle and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn cof_sympoly_to_schur(poly: *const CofSymPoly, out: *mut *mut CofSymPoly) -> CofStatus {
    guard(|| put(out, CofSymPoly(handle(poly)?.0.to_schur())))
}

/// Text form, e.g. `"s[2,1] + q*s[1,1,1]"`.
///
/// # Safety
/// `poly` must be a live handle and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn cof_sympoly_to_string(poly: *const CofSymPoly, out: *mut *mut c_char) -> CofStatus {
    guard(|| put_string(out, handle(poly)?.0.to_string()))
}

/// JSON form `{"basis", "m", "terms"}`.
///
/// # Safety
/// `poly` must be a live handle and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn cof_sympoly_to_json(poly: *const CofSymPoly, out: *mut *mut c_char) -> CofStatus {
    guard(|| put_string(out, handle(poly)?.0.to_json().to_string()))
}

/// # Safety
/// `poly` must be null or a live handle, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cof_sympoly_free(poly: *mut CofSymPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// `K_{lambda mu}(q)` as text, partitions given as `"4,2,1"`.
///
/// # Safety
/// `lambda` and `mu` must be nul-terminated strings and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn cof_kostka_foulkes(lambda: *const c_char, mu: *const c_char, out: *mut *mut c_char) -> CofStatus {
    guard(|| {
        let lambda: Partition = text(lambda)?.parse()?;
        let mu: Partition = text(mu)?.parse()?;
        put_string(out, kostka_foulkes(&lambda, &mu)?.to_string())
    })
}

/// Verify that `E_{n base}(1^m; q, 0)` sieves `COF(n base, m)` under the block rotation.
///
/// # Safety
/// `base` must be a live handle and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn cof_csp_main(base: *const CofShape, n: usize, m: usize, out: *mut *mut CofCspReport) -> CofStatus {
    guard(|| put(out, CofCspReport(macdonald_csp_suite(&handle(base)?.0, n, m)?)))
}

/// Verify the content-refined statement for content such as `"8,2,2"`.
///
/// # Safety
/// `base` must be a live handle, `content` a nul-terminated string and `out` valid for a
/// pointer write.
#[no_mangle]
pub unsafe extern "C" fn cof_csp_refined(base: *const CofShape, n: usize, content: *const c_char, out: *mut *mut CofCspReport) -> CofStatus {
    guard(|| {
        let nu: Composition = text(content)?.parse()?;
        put(out, CofCspReport(refined_csp_suite(&handle(base)?.0, n, &nu)?))
    })
}

/// 1 when every check passed, 0 otherwise (including a null handle).
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cof_csp_report_passed(report: *const CofCspReport) -> c_int {
    report.as_ref().map_or(0, |r| c_int::from(r.0.passed()))
}

/// The report as JSON.
///
/// # Safety
/// `report` must be a live handle and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn cof_csp_report_to_json(report: *const CofCspReport, out: *mut *mut c_char) -> CofStatus {
    guard(|| put_string(out, handle(report)?.0.to_json().to_string()))
}

/// # Safety
/// `report` must be null or a live handle, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cof_csp_report_free(report: *mut CofCspReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}
