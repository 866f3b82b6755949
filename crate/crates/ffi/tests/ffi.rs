use std::ffi::{CStr, CString};
use std::ptr;

use sipverify_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    sv_string_free(s);
    out
}

unsafe fn last_error() -> String {
    let p = sv_last_error();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_str().unwrap().to_owned()
}

#[test]
fn catalog_is_listed() {
    let n = sv_catalog_len();
    assert!(n >= 38);
    let first = unsafe { CStr::from_ptr(sv_catalog_id(0)) };
    assert_eq!(first.to_str().unwrap(), "cauchy-limit");
    assert!(sv_catalog_id(n).is_null());
}

#[test]
fn verify_match_and_mismatch() {
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(sv_verify(c("slater-4").as_ptr(), 30, 60, &mut r), SvStatus::Ok);
        assert!(sv_report_is_match(r));
        assert_eq!(sv_report_mismatch_exponent(r), -1);
        let json = take(sv_report_json(r, false));
        assert!(json.contains("\"status\":\"MATCH\""), "{json}");
        sv_report_free(r);

        let mut r = ptr::null_mut();
        assert_eq!(sv_verify(c("gprime-gen-literal").as_ptr(), 10, 60, &mut r), SvStatus::Mismatch);
        assert_eq!(sv_report_mismatch_exponent(r), 3);
        sv_report_free(r);
    }
}

#[test]
fn verify_errors() {
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(sv_verify(c("no-such").as_ptr(), 10, 60, &mut r), SvStatus::UnknownId);
        assert!(last_error().contains("no-such"));
        assert!(r.is_null());
        assert_eq!(sv_verify(ptr::null(), 10, 60, &mut r), SvStatus::NullArgument);
        assert_eq!(sv_verify(c("gg-36").as_ptr(), 0, 60, &mut r), SvStatus::InvalidArgument);
        assert_eq!(sv_verify(c("gg-36").as_ptr(), 30, 10, &mut r), SvStatus::CapExceeded);
        assert_eq!(sv_verify(c("gg-36").as_ptr(), 30, 60, ptr::null_mut()), SvStatus::NullArgument);
    }
}

#[test]
fn series_handles() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(sv_build_side(c("partition-odd").as_ptr(), c("oracle").as_ptr(), 10, 60, &mut s), SvStatus::Ok);
        assert_eq!(sv_series_max_order(s), 10);
        assert_eq!(take(sv_series_coeff(s, 3)), "z + z^3");
        sv_series_free(s);
        let mut s = ptr::null_mut();
        assert_eq!(sv_build_side(c("slater-4").as_ptr(), c("middle").as_ptr(), 10, 60, &mut s), SvStatus::UnknownId);
    }
}

#[test]
fn class_handles() {
    unsafe {
        let mut cls = ptr::null_mut();
        assert_eq!(sv_class_new(c("p4").as_ptr(), &mut cls), SvStatus::Ok);
        let counts: Vec<u64> = (1..=5)
            .map(|n| {
                let mut k = 0;
                assert_eq!(sv_class_count(cls, n, 60, &mut k), SvStatus::Ok);
                k
            })
            .collect();
        assert_eq!(counts, [1, 1, 0, 1, 2]);
        assert_eq!(sv_class_check(cls, c("4,1").as_ptr()), SvStatus::Ok);
        assert_eq!(sv_class_check(cls, c("3,2").as_ptr()), SvStatus::NotMember);
        assert!(last_error().contains("rule (3)"));
        assert_eq!(sv_class_check(cls, c("x").as_ptr()), SvStatus::InvalidArgument);
        sv_class_free(cls);

        let mut cls = ptr::null_mut();
        assert_eq!(sv_class_new(c("gg-A").as_ptr(), &mut cls), SvStatus::Ok);
        let (mut b, mut pi) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(sv_class_decompose(cls, c("12,9,5,1").as_ptr(), &mut b, &mut pi), SvStatus::Ok);
        assert_eq!((take(b), take(pi)), ("8,5,3,1".to_string(), "4,4,2,0".to_string()));
        sv_class_free(cls);

        assert_eq!(sv_class_new(c("nope").as_ptr(), &mut cls), SvStatus::UnknownId);
    }
}

#[test]
fn header_declares_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/sipverify.h")).unwrap();
    for f in ["sv_verify", "sv_build_side", "sv_class_decompose", "sv_last_error", "sv_string_free"] {
        assert!(header.contains(&format!("{f}(")), "{f} missing from header");
    }
    assert!(header.contains("typedef struct SvSeries SvSeries;"));
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = which_cc() else { return };
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/include");
    let src = std::env::temp_dir().join(format!("sipverify_hdr_{}.c", std::process::id()));
    std::fs::write(&src, "#include \"sipverify.h\"\nint main(void) { return sv_catalog_len() > 0 ? 0 : 1; }\n")
        .unwrap();
    let status = std::process::Command::new(cc)
        .args(["-fsyntax-only", "-Wall", "-Werror", "-I", dir])
        .arg(&src)
        .status()
        .unwrap();
    let _ = std::fs::remove_file(&src);
    assert!(status.success());
}

fn which_cc() -> Result<&'static str, ()> {
    for cc in ["cc", "gcc", "clang"] {
        if std::process::Command::new(cc).arg("--version").output().is_ok() {
            return Ok(cc);
        }
    }
    Err(())
}
