use std::ffi::{CStr, CString};
use std::ptr;

use nilcomplex_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    nc_string_free(p);
    s
}

unsafe fn last_error() -> String {
    CStr::from_ptr(nc_last_error()).to_str().unwrap().to_string()
}

#[test]
fn three_step_h15_pages() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(nc_structure_three_step(0, c("1").as_ptr(), c("1/4").as_ptr(), &mut s), NcStatus::Ok);
        let mut name = ptr::null_mut();
        assert_eq!(nc_classify(s, &mut name), NcStatus::Ok);
        assert_eq!(take(name), "h15");
        let mut e2 = [0u32; 16];
        assert_eq!(nc_frolicher_dims(s, 2, e2.as_mut_ptr()), NcStatus::Ok);
        assert_eq!((e2[2], e2[4 + 1]), (3, 2));
        let mut step = 0;
        assert_eq!(nc_degeneration_step(s, &mut step), NcStatus::Ok);
        assert_eq!(step, 3);
        let mut b = ptr::null_mut();
        assert_eq!(nc_behaviour(s, &mut b), NcStatus::Ok);
        assert_eq!(take(b), "E1≇E2≇E3≅E∞");
        nc_structure_free(s);
    }
}

#[test]
fn h6_hodge_and_betti() {
    unsafe {
        let mut s = ptr::null_mut();
        let eqs = c("dw1=0; dw2=0; dw3=w1^w2 + w1^w1b + w1^w2b");
        assert_eq!(nc_structure_from_equations(eqs.as_ptr(), &mut s), NcStatus::Ok);
        let mut h = [0u32; 16];
        assert_eq!(nc_hodge(s, h.as_mut_ptr()), NcStatus::Ok);
        assert_eq!(h[4 + 1], 5);
        let mut b = [0u32; 7];
        assert_eq!(nc_betti(s, b.as_mut_ptr()), NcStatus::Ok);
        assert_eq!(b, [1, 4, 9, 12, 9, 4, 1]);
        let mut out = false;
        assert_eq!(nc_sg_exists(s, &mut out), NcStatus::Unsupported);
        nc_structure_free(s);
    }
}

#[test]
fn metrics_and_report() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(nc_structure_two_step(1, c("1").as_ptr(), c("1/4").as_ptr(), &mut s), NcStatus::Ok);
        let mut f = NcMetricFlags::default();
        assert_eq!(nc_metric_flags(s, c("1,1,1,0,0,0").as_ptr(), &mut f), NcStatus::Ok);
        assert!(!f.balanced && f.gauduchon && f.strongly_gauduchon);
        let mut sg = false;
        assert_eq!(nc_sg_exists(s, &mut sg), NcStatus::Ok);
        assert!(sg);
        let mut json = ptr::null_mut();
        assert_eq!(nc_report_json(s, &mut json), NcStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        assert_eq!(v["algebra_class"], "h4");
        assert_eq!(v["metrics"]["balanced_exists"], false);
        assert_eq!(v["betti"][1], 4);
        nc_structure_free(s);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(nc_structure_two_step(2, c("1").as_ptr(), c("0").as_ptr(), &mut s), NcStatus::Domain);
        assert!(last_error().contains("rho"));
        assert!(s.is_null());
        assert_eq!(nc_structure_from_equations(c("dw1=0; dw2=0; dw3=w1b^w2b").as_ptr(), &mut s), NcStatus::Domain);
        assert_eq!(nc_structure_from_equations(c("dw1=0; dw2=").as_ptr(), &mut s), NcStatus::Parse);
        assert_eq!(nc_structure_from_equations(ptr::null(), &mut s), NcStatus::NullPointer);
        assert_eq!(nc_structure_three_step(1, c("1").as_ptr(), c("x").as_ptr(), &mut s), NcStatus::Parse);
        assert_eq!(nc_hodge(ptr::null(), ptr::null_mut()), NcStatus::NullPointer);
        assert_eq!(nc_structure_non_nilpotent(0, false, &mut s), NcStatus::Ok);
        assert!(last_error().is_empty());
        let mut d = [0u32; 16];
        assert_eq!(nc_frolicher_dims(s, 9, d.as_mut_ptr()), NcStatus::Domain);
        nc_structure_free(s);
        nc_structure_free(ptr::null_mut());
        nc_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_the_api() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/nilcomplex.h")).unwrap();
    for name in ["nc_structure_two_step", "nc_report_json", "nc_last_error", "NC_STATUS_DOMAIN", "typedef struct NcStructure"] {
        assert!(h.contains(name), "{name} missing from header");
    }
}
