//! C interface to `altcoinv`.
//!
//! Objects are opaque handles owned by the caller and released with the
//! matching `_free` function. Functions return an [`AltcoinvStatus`]; on
//! failure [`altcoinv_last_error`] describes the problem. Strings returned
//! through out-parameters are owned by the caller and released with
//! [`altcoinv_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use altcoinv::coinvariants::{qt_catalan_combinatorial, verify_main_theorem};
use altcoinv::paths::{catalan, DyckPath};
use altcoinv::vandermonde::{delta, x_of_path};
use altcoinv::{Error, Poly};

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AltcoinvStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    CapExceeded = 4,
    /// A checked claim turned out false.
    Falsified = 5,
    /// A Rust panic was caught at the boundary.
    Internal = 6,
}

/// A polynomial in `x_1..x_n, y_1..y_n` with rational coefficients.
pub struct AltcoinvPoly(Poly);

/// A Dyck path.
pub struct AltcoinvPath(DyckPath);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> AltcoinvStatus {
    match e {
        Error::Parse(_) | Error::InvalidPath(_) => AltcoinvStatus::ParseError,
        Error::CapExceeded { .. } | Error::BudgetExceeded(_) => AltcoinvStatus::CapExceeded,
        Error::Falsified(_) => AltcoinvStatus::Falsified,
        _ => AltcoinvStatus::InvalidArgument,
    }
}

/// Runs `f`, translating errors and panics into status codes.
fn guard<F>(f: F) -> AltcoinvStatus
where
    F: FnOnce() -> Result<(), (AltcoinvStatus, String)>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            AltcoinvStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal error".into());
            AltcoinvStatus::Internal
        }
    }
}

fn lib<T>(r: altcoinv::Result<T>) -> Result<T, (AltcoinvStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (AltcoinvStatus, String) {
    (AltcoinvStatus::NullPointer, format!("{what} is NULL"))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, (AltcoinvStatus, String)> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (AltcoinvStatus::ParseError, format!("{what} is not UTF-8")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), (AltcoinvStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s)
        .expect("library output has no NUL bytes")
        .into_raw()
}

unsafe fn poly_ref<'a>(p: *const AltcoinvPoly) -> Result<&'a Poly, (AltcoinvStatus, String)> {
    p.as_ref().map(|p| &p.0).ok_or_else(|| null("polynomial"))
}

unsafe fn path_ref<'a>(p: *const AltcoinvPath) -> Result<&'a DyckPath, (AltcoinvStatus, String)> {
    p.as_ref().map(|p| &p.0).ok_or_else(|| null("path"))
}

/// Message for the last failed call on this thread, or NULL. The pointer stays
/// valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn altcoinv_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn altcoinv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a word in `N` and `E` into a Dyck path.
///
/// # Safety
/// `word` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn altcoinv_path_parse(
    word: *const c_char,
    out: *mut *mut AltcoinvPath,
) -> AltcoinvStatus {
    guard(|| {
        let w = read_str(word, "word")?;
        let p = lib(DyckPath::parse(w))?;
        write_out(out, Box::into_raw(Box::new(AltcoinvPath(p))))
    })
}

/// # Safety
/// `p` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn altcoinv_path_free(p: *mut AltcoinvPath) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Size, area, dinv and bounce of a path. Any out-pointer may be NULL.
///
/// # Safety
/// `p` must be a live handle; non-NULL out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn altcoinv_path_stats(
    p: *const AltcoinvPath,
    n: *mut usize,
    area: *mut usize,
    dinv: *mut usize,
    bounce: *mut usize,
) -> AltcoinvStatus {
    guard(|| {
        let p = path_ref(p)?;
        for (dst, v) in [
            (n, p.n()),
            (area, p.area()),
            (dinv, p.dinv()),
            (bounce, p.bounce()),
        ] {
            if !dst.is_null() {
                dst.write(v);
            }
        }
        Ok(())
    })
}

/// The determinant `Δ_{X(π)}` of a path.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn altcoinv_path_delta(
    p: *const AltcoinvPath,
    out: *mut *mut AltcoinvPoly,
) -> AltcoinvStatus {
    guard(|| {
        let p = path_ref(p)?;
        let f = lib(delta(&x_of_path(p), p.n()))?;
        write_out(out, Box::into_raw(Box::new(AltcoinvPoly(f))))
    })
}

/// Parses text such as `3/2*x1^2*y3 - y2` in `2n` variables.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn altcoinv_poly_parse(
    n: usize,
    text: *const c_char,
    out: *mut *mut AltcoinvPoly,
) -> AltcoinvStatus {
    guard(|| {
        let t = read_str(text, "text")?;
        let f = lib(Poly::parse(n, t))?;
        write_out(out, Box::into_raw(Box::new(AltcoinvPoly(f))))
    })
}

/// # Safety
/// `p` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn altcoinv_poly_free(p: *mut AltcoinvPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of variable pairs `n` and number of terms.
///
/// # Safety
/// `p` must be a live handle; non-NULL out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn altcoinv_poly_shape(
    p: *const AltcoinvPoly,
    n: *mut usize,
    terms: *mut usize,
) -> AltcoinvStatus {
    guard(|| {
        let f = poly_ref(p)?;
        if !n.is_null() {
            n.write(f.n());
        }
        if !terms.is_null() {
            terms.write(f.len());
        }
        Ok(())
    })
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AltcoinvPolyOp {
    Add = 0,
    Sub = 1,
    Mul = 2,
}

/// `out = a op b`; both operands must have the same `n`.
///
/// # Safety
/// `a` and `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn altcoinv_poly_binary(
    a: *const AltcoinvPoly,
    b: *const AltcoinvPoly,
    op: AltcoinvPolyOp,
    out: *mut *mut AltcoinvPoly,
) -> AltcoinvStatus {
    guard(|| {
        let (a, b) = (poly_ref(a)?, poly_ref(b)?);
        let r = lib(match op {
            AltcoinvPolyOp::Add => a.try_add(b),
            AltcoinvPolyOp::Sub => a.try_sub(b),
            AltcoinvPolyOp::Mul => a.try_mul(b),
        })?;
        write_out(out, Box::into_raw(Box::new(AltcoinvPoly(r))))
    })
}

/// Writes 1 to `equal` if the polynomials are identical, else 0.
///
/// # Safety
/// `a` and `b` must be live handles and `equal` writable.
#[no_mangle]
pub unsafe extern "C" fn altcoinv_poly_equal(
    a: *const AltcoinvPoly,
    b: *const AltcoinvPoly,
    equal: *mut i32,
) -> AltcoinvStatus {
    guard(|| {
        let eq = poly_ref(a)? == poly_ref(b)?;
        write_out(equal, eq as i32)
    })
}

/// Canonical text form.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn altcoinv_poly_to_text(
    p: *const AltcoinvPoly,
    out: *mut *mut c_char,
) -> AltcoinvStatus {
    guard(|| {
        let f = poly_ref(p)?;
        write_out(out, into_c_string(f.to_text()))
    })
}

/// Canonical JSON form.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn altcoinv_poly_to_json(
    p: *const AltcoinvPoly,
    out: *mut *mut c_char,
) -> AltcoinvStatus {
    guard(|| {
        let f = poly_ref(p)?;
        write_out(out, into_c_string(f.to_json().to_string()))
    })
}

/// Catalan number `C_n`; fails if it does not fit in 64 bits.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn altcoinv_catalan(n: usize, out: *mut u64) -> AltcoinvStatus {
    guard(|| {
        if n > 35 {
            return Err((
                AltcoinvStatus::CapExceeded,
                format!("C_{n} does not fit in 64 bits"),
            ));
        }
        write_out(out, catalan(n) as u64)
    })
}

/// `Σ q^dinv t^area` over Dyck paths of size `n`, as text.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn altcoinv_qt_catalan(n: usize, out: *mut *mut c_char) -> AltcoinvStatus {
    guard(|| {
        let s = lib(qt_catalan_combinatorial(n))?;
        write_out(out, into_c_string(s.to_string()))
    })
}

/// Checks that the path determinants form a basis of the alternating
/// component, with exact arithmetic. Returns `Falsified` if they do not.
/// `report`, if not NULL, receives the JSON certificate.
///
/// # Safety
/// `report` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn altcoinv_verify_basis(
    n: usize,
    report: *mut *mut c_char,
) -> AltcoinvStatus {
    guard(|| {
        let r = lib(verify_main_theorem(n))?;
        if !report.is_null() {
            report.write(into_c_string(r.to_json(false).to_string()));
        }
        if r.verified() {
            Ok(())
        } else {
            Err((
                AltcoinvStatus::Falsified,
                format!("basis check failed at n = {n}"),
            ))
        }
    })
}
