use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use altcoinv_ffi::*;

fn take_string(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { altcoinv_string_free(s) };
    out
}

fn last_error() -> Option<String> {
    let p = altcoinv_last_error();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string())
}

#[test]
fn path_round_trip() {
    let word = CString::new("NENNEE").unwrap();
    let mut path = ptr::null_mut();
    assert_eq!(
        unsafe { altcoinv_path_parse(word.as_ptr(), &mut path) },
        AltcoinvStatus::Ok
    );
    let (mut n, mut area, mut dinv, mut bounce) = (0, 0, 0, 0);
    let st = unsafe { altcoinv_path_stats(path, &mut n, &mut area, &mut dinv, &mut bounce) };
    assert_eq!(st, AltcoinvStatus::Ok);
    assert_eq!((n, area, dinv, bounce), (3, 1, 1, 2));
    let st = unsafe {
        altcoinv_path_stats(
            path,
            ptr::null_mut(),
            ptr::null_mut(),
            &mut dinv,
            ptr::null_mut(),
        )
    };
    assert_eq!(st, AltcoinvStatus::Ok);

    let mut d = ptr::null_mut();
    assert_eq!(
        unsafe { altcoinv_path_delta(path, &mut d) },
        AltcoinvStatus::Ok
    );
    let mut text = ptr::null_mut();
    assert_eq!(
        unsafe { altcoinv_poly_to_text(d, &mut text) },
        AltcoinvStatus::Ok
    );
    assert_eq!(
        take_string(text),
        "-x1*y2 + x1*y3 + x2*y1 - x2*y3 - x3*y1 + x3*y2"
    );
    let mut json = ptr::null_mut();
    assert_eq!(
        unsafe { altcoinv_poly_to_json(d, &mut json) },
        AltcoinvStatus::Ok
    );
    let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(v["n"], 3);
    unsafe {
        altcoinv_poly_free(d);
        altcoinv_path_free(path);
    }
}

#[test]
fn polynomial_arithmetic() {
    let a = CString::new("x1 - y1").unwrap();
    let b = CString::new("x1 + y1").unwrap();
    let prod = CString::new("x1^2 - y1^2").unwrap();
    let (mut pa, mut pb, mut pp, mut r) = (
        ptr::null_mut(),
        ptr::null_mut(),
        ptr::null_mut(),
        ptr::null_mut(),
    );
    unsafe {
        assert_eq!(
            altcoinv_poly_parse(1, a.as_ptr(), &mut pa),
            AltcoinvStatus::Ok
        );
        assert_eq!(
            altcoinv_poly_parse(1, b.as_ptr(), &mut pb),
            AltcoinvStatus::Ok
        );
        assert_eq!(
            altcoinv_poly_parse(1, prod.as_ptr(), &mut pp),
            AltcoinvStatus::Ok
        );
        assert_eq!(
            altcoinv_poly_binary(pa, pb, AltcoinvPolyOp::Mul, &mut r),
            AltcoinvStatus::Ok
        );
        let mut eq = 0;
        assert_eq!(altcoinv_poly_equal(r, pp, &mut eq), AltcoinvStatus::Ok);
        assert_eq!(eq, 1);
        let (mut n, mut terms) = (0, 0);
        assert_eq!(
            altcoinv_poly_shape(r, &mut n, &mut terms),
            AltcoinvStatus::Ok
        );
        assert_eq!((n, terms), (1, 2));
        altcoinv_poly_free(r);

        let mut s = ptr::null_mut();
        assert_eq!(
            altcoinv_poly_binary(pa, pa, AltcoinvPolyOp::Sub, &mut s),
            AltcoinvStatus::Ok
        );
        let mut terms = 7;
        altcoinv_poly_shape(s, ptr::null_mut(), &mut terms);
        assert_eq!(terms, 0);
        altcoinv_poly_free(s);

        let two = CString::new("x2").unwrap();
        let mut p2 = ptr::null_mut();
        assert_eq!(
            altcoinv_poly_parse(2, two.as_ptr(), &mut p2),
            AltcoinvStatus::Ok
        );
        let mut bad = ptr::null_mut();
        assert_eq!(
            altcoinv_poly_binary(pa, p2, AltcoinvPolyOp::Add, &mut bad),
            AltcoinvStatus::InvalidArgument
        );
        assert!(bad.is_null());
        assert!(last_error().unwrap().contains("dimension"));
        for p in [pa, pb, pp, p2] {
            altcoinv_poly_free(p);
        }
    }
}

#[test]
fn error_codes() {
    let mut path = ptr::null_mut();
    let bad = CString::new("ENNE").unwrap();
    assert_eq!(
        unsafe { altcoinv_path_parse(bad.as_ptr(), &mut path) },
        AltcoinvStatus::ParseError
    );
    assert!(path.is_null());
    assert!(last_error().is_some());
    assert_eq!(
        unsafe { altcoinv_path_parse(ptr::null(), &mut path) },
        AltcoinvStatus::NullPointer
    );
    let ok = CString::new("NE").unwrap();
    assert_eq!(
        unsafe { altcoinv_path_parse(ok.as_ptr(), ptr::null_mut()) },
        AltcoinvStatus::NullPointer
    );
    assert_eq!(
        unsafe {
            altcoinv_path_stats(
                ptr::null(),
                ptr::null_mut(),
                ptr::null_mut(),
                ptr::null_mut(),
                ptr::null_mut(),
            )
        },
        AltcoinvStatus::NullPointer
    );
    let mut c = 0u64;
    assert_eq!(unsafe { altcoinv_catalan(10, &mut c) }, AltcoinvStatus::Ok);
    assert_eq!(c, 16796);
    assert!(last_error().is_none());
    assert_eq!(
        unsafe { altcoinv_catalan(40, &mut c) },
        AltcoinvStatus::CapExceeded
    );
    assert_eq!(
        unsafe { altcoinv_verify_basis(9, ptr::null_mut()) },
        AltcoinvStatus::CapExceeded
    );
    unsafe {
        altcoinv_path_free(ptr::null_mut());
        altcoinv_poly_free(ptr::null_mut());
        altcoinv_string_free(ptr::null_mut());
    }
}

#[test]
fn theorem_checks() {
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { altcoinv_qt_catalan(3, &mut s) },
        AltcoinvStatus::Ok
    );
    assert_eq!(take_string(s), "q^3 + q^2*t + q*t^2 + q*t + t^3");
    let mut report = ptr::null_mut();
    assert_eq!(
        unsafe { altcoinv_verify_basis(4, &mut report) },
        AltcoinvStatus::Ok
    );
    let v: serde_json::Value = serde_json::from_str(&take_string(report)).unwrap();
    assert_eq!(v["classes"], 14);
    assert_eq!(v["verified"], true);
}

#[test]
fn header_is_current() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/altcoinv.h")).unwrap();
    for name in [
        "altcoinv_last_error",
        "altcoinv_string_free",
        "altcoinv_path_parse",
        "altcoinv_path_delta",
        "altcoinv_poly_binary",
        "altcoinv_verify_basis",
        "typedef struct AltcoinvPoly AltcoinvPoly",
        "ALTCOINV_STATUS_FALSIFIED = 5",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}

/// Compiles a C program against the header and the static library.
#[test]
fn c_program_links_and_runs() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // tests run from target/<profile>/deps; the static library sits one level up.
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libaltcoinv_ffi.a");
    assert!(lib.exists(), "{} missing", lib.display());
    let out = std::env::temp_dir().join(format!("altcoinv-smoke-{}", std::process::id()));
    let status = Command::new(std::env::var("CC").unwrap_or_else(|_| "cc".into()))
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(dir.join("include"))
        .arg(dir.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    std::fs::remove_file(&out).ok();
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout), "ok\n");
}
