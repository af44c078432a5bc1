use std::ffi::{CStr, CString};
use std::ptr;

use cofsieve_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    cof_string_free(s);
    out
}

#[test]
fn schur_expansion_through_handles() {
    unsafe {
        let mut shape = ptr::null_mut();
        assert_eq!(cof_shape_parse(c("2,1").as_ptr(), &mut shape), CofStatus::Ok);
        assert_eq!(cof_shape_size(shape), 3);
        let mut e = ptr::null_mut();
        assert_eq!(cof_macdonald_e(shape, 3, &mut e), CofStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(cof_sympoly_to_schur(e, &mut s), CofStatus::Ok);
        let mut text = ptr::null_mut();
        assert_eq!(cof_sympoly_to_string(s, &mut text), CofStatus::Ok);
        assert_eq!(take(text), "s[2,1] + q*s[1,1,1]");
        let mut count = 0u64;
        assert_eq!(cof_count_fillings(shape, 3, &mut count), CofStatus::Ok);
        assert_eq!(count, 9);
        cof_sympoly_free(s);
        cof_sympoly_free(e);
        cof_shape_free(shape);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut shape = ptr::null_mut();
        assert_eq!(cof_shape_parse(c("2,x").as_ptr(), &mut shape), CofStatus::Parse);
        assert!(!CStr::from_ptr(cof_last_error()).to_bytes().is_empty());
        assert_eq!(cof_shape_parse(ptr::null(), &mut shape), CofStatus::NullPointer);
        assert_eq!(cof_shape_parse(c("1,1,1").as_ptr(), &mut shape), CofStatus::Ok);
        let mut e = ptr::null_mut();
        assert_eq!(cof_macdonald_e(shape, 2, &mut e), CofStatus::Domain);
        cof_shape_free(shape);
        let mut text = ptr::null_mut();
        assert_eq!(cof_kostka_foulkes(c("2").as_ptr(), c("1").as_ptr(), &mut text), CofStatus::Domain);
        assert_eq!(cof_kostka_foulkes(c("4,2,1").as_ptr(), c("3,2,1,1").as_ptr(), &mut text), CofStatus::Ok);
        assert_eq!(take(text), "q + 2*q^2 + q^3");
        assert!(CStr::from_ptr(cof_last_error()).to_bytes().is_empty());
    }
}

#[test]
fn sieving_report() {
    unsafe {
        let mut base = ptr::null_mut();
        assert_eq!(cof_shape_parse(c("2,1").as_ptr(), &mut base), CofStatus::Ok);
        let mut report = ptr::null_mut();
        assert_eq!(cof_csp_refined(base, 4, c("8,2,2").as_ptr(), &mut report), CofStatus::Ok);
        assert_eq!(cof_csp_report_passed(report), 1);
        let mut json = ptr::null_mut();
        assert_eq!(cof_csp_report_to_json(report, &mut json), CofStatus::Ok);
        assert!(take(json).contains("\"pass\":true"));
        cof_csp_report_free(report);
        assert_eq!(cof_csp_main(base, 2, 3, &mut report), CofStatus::Ok);
        assert_eq!(cof_csp_report_passed(report), 1);
        cof_csp_report_free(report);
        assert_eq!(cof_csp_main(base, 0, 3, &mut report), CofStatus::Domain);
        cof_shape_free(base);
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/cofsieve.h")).unwrap();
    for name in ["cof_shape_parse", "cof_macdonald_e", "cof_csp_refined", "cof_last_error", "COF_STATUS_OK", "typedef struct CofShape CofShape"] {
        assert!(header.contains(name), "{name} missing from header");
    }
}
