//! C ABI over the sipverify engine.
//!
//! Every fallible call returns an [`SvStatus`]; on failure the message is
//! available from [`sv_last_error`] on the same thread. Handles are opaque
//! and must be released with their `_free` function. Strings returned as
//! `*mut c_char` are owned by the caller and released with [`sv_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::OnceLock;

use sipverify::identities::{build_side, catalog, verify, Status, VerificationReport};
use sipverify::partitions::{format_vector, Partition};
use sipverify::series::{coeff_to_string, QSeries};
use sipverify::sip::{class_by_name, sip_decompose, ClassSpec};
use sipverify::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SvStatus {
    Ok = 0,
    /// The identity sides disagree.
    Mismatch = 1,
    NullArgument = 2,
    InvalidArgument = 3,
    UnknownId = 4,
    NotMember = 5,
    CapExceeded = 6,
    /// Any other engine error, or a caught panic.
    Internal = 7,
}

/// Opaque truncated q-series.
pub struct SvSeries(QSeries);

/// Opaque verification report.
pub struct SvReport(VerificationReport);

/// Opaque partition class.
pub struct SvClass(ClassSpec);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let c = CString::new(msg.into().replace('\0', " ")).expect("nul bytes stripped");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: SvStatus, msg: impl Into<String>) -> SvStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> SvStatus {
    match e {
        Error::UnknownIdentity(_) | Error::UnknownClass(_) | Error::UnknownSide { .. } => SvStatus::UnknownId,
        Error::NotMember(_) | Error::Decomposition(_) => SvStatus::NotMember,
        Error::CapExceeded { .. } => SvStatus::CapExceeded,
        Error::InvalidPartition(_) => SvStatus::InvalidArgument,
        _ => SvStatus::Internal,
    }
}

fn engine(e: Error) -> SvStatus {
    let s = status_of(&e);
    fail(s, e.to_string())
}

/// Run `f`, converting panics into `Internal`.
fn guard(f: impl FnOnce() -> SvStatus) -> SvStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(SvStatus::Internal, "internal panic"),
    }
}

/// # Safety
/// `p` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, SvStatus> {
    if p.is_null() {
        return Err(fail(SvStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(SvStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

fn to_c(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("nul bytes stripped").into_raw()
}

macro_rules! try_ffi {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! out_ptr {
    ($p:expr) => {
        if $p.is_null() {
            return fail(SvStatus::NullArgument, concat!(stringify!($p), " is null"));
        }
    };
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next sipverify call on this thread.
#[no_mangle]
pub extern "C" fn sv_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn sv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn sv_version() -> *const c_char {
    static V: OnceLock<CString> = OnceLock::new();
    V.get_or_init(|| CString::new(env!("CARGO_PKG_VERSION")).unwrap()).as_ptr()
}

// ---- catalog ----

fn catalog_ids() -> &'static [CString] {
    static IDS: OnceLock<Vec<CString>> = OnceLock::new();
    IDS.get_or_init(|| catalog().iter().map(|r| CString::new(r.id).unwrap()).collect())
}

#[no_mangle]
pub extern "C" fn sv_catalog_len() -> usize {
    catalog_ids().len()
}

/// Identity id at `index` (static string), or null when out of range.
#[no_mangle]
pub extern "C" fn sv_catalog_id(index: usize) -> *const c_char {
    catalog_ids().get(index).map_or(ptr::null(), |c| c.as_ptr())
}

// ---- verification ----

/// Verify identity `id` through `q^order`. On `Ok` or `Mismatch` a report is
/// written to `out`.
///
/// # Safety
/// `id` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sv_verify(id: *const c_char, order: i64, cap: u64, out: *mut *mut SvReport) -> SvStatus {
    guard(|| {
        out_ptr!(out);
        let id = try_ffi!(read_str(id, "id"));
        if order < 1 {
            return fail(SvStatus::InvalidArgument, format!("order must be positive, got {order}"));
        }
        let report = try_ffi!(verify(id, order, cap).map_err(engine));
        let status = match report.status {
            Status::Match => SvStatus::Ok,
            Status::Mismatch => SvStatus::Mismatch,
            Status::Error => {
                let e = report.error.clone().expect("error status carries an error");
                return engine(e);
            }
        };
        *out = Box::into_raw(Box::new(SvReport(report)));
        status
    })
}

/// # Safety
/// `r` must be a report from [`sv_verify`].
#[no_mangle]
pub unsafe extern "C" fn sv_report_is_match(r: *const SvReport) -> bool {
    !r.is_null() && (*r).0.is_match()
}

/// Lowest mismatching q-exponent, or -1 on a match.
///
/// # Safety
/// `r` must be a report from [`sv_verify`].
#[no_mangle]
pub unsafe extern "C" fn sv_report_mismatch_exponent(r: *const SvReport) -> i64 {
    if r.is_null() {
        return -1;
    }
    (*r).0.first_mismatch.as_ref().map_or(-1, |m| m.q_exponent)
}

/// JSON form of the report; free with [`sv_string_free`].
///
/// # Safety
/// `r` must be a report from [`sv_verify`].
#[no_mangle]
pub unsafe extern "C" fn sv_report_json(r: *const SvReport, timings: bool) -> *mut c_char {
    if r.is_null() {
        return ptr::null_mut();
    }
    to_c((*r).0.to_json(timings).to_string())
}

/// # Safety
/// `r` must be null or a report from [`sv_verify`], freed at most once.
#[no_mangle]
pub unsafe extern "C" fn sv_report_free(r: *mut SvReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

// ---- series ----

/// Build one side (`"lhs"`, `"rhs"`, `"oracle"`, ...) of an identity.
///
/// # Safety
/// `id` and `side` must be NUL-terminated strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sv_build_side(
    id: *const c_char,
    side: *const c_char,
    order: i64,
    cap: u64,
    out: *mut *mut SvSeries,
) -> SvStatus {
    guard(|| {
        out_ptr!(out);
        let id = try_ffi!(read_str(id, "id"));
        let side = try_ffi!(read_str(side, "side"));
        let s = try_ffi!(build_side(id, side, order, cap).map_err(engine));
        *out = Box::into_raw(Box::new(SvSeries(s.truncate(order))));
        SvStatus::Ok
    })
}

/// # Safety
/// `s` must be a series handle.
#[no_mangle]
pub unsafe extern "C" fn sv_series_max_order(s: *const SvSeries) -> i64 {
    if s.is_null() {
        return i64::MIN;
    }
    (*s).0.max_order()
}

/// Canonical text of the coefficient of `q^k`; free with [`sv_string_free`].
///
/// # Safety
/// `s` must be a series handle.
#[no_mangle]
pub unsafe extern "C" fn sv_series_coeff(s: *const SvSeries, k: i64) -> *mut c_char {
    if s.is_null() {
        return ptr::null_mut();
    }
    let s = &(*s).0;
    to_c(coeff_to_string(&s.coeff(k), s.vars()))
}

/// # Safety
/// `s` must be null or a series handle, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn sv_series_free(s: *mut SvSeries) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

// ---- classes ----

/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sv_class_new(name: *const c_char, out: *mut *mut SvClass) -> SvStatus {
    guard(|| {
        out_ptr!(out);
        let name = try_ffi!(read_str(name, "name"));
        let spec = try_ffi!(class_by_name(name).map_err(engine));
        *out = Box::into_raw(Box::new(SvClass(spec)));
        SvStatus::Ok
    })
}

/// Number of members of weight `n`.
///
/// # Safety
/// `c` must be a class handle and `count` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sv_class_count(c: *const SvClass, n: u64, cap: u64, count: *mut u64) -> SvStatus {
    guard(|| {
        out_ptr!(c);
        out_ptr!(count);
        let members = try_ffi!((*c).0.members_of_weight(n, cap).map_err(engine));
        *count = members.len() as u64;
        SvStatus::Ok
    })
}

/// `Ok` for a member, `NotMember` (with the violated rule as last error)
/// otherwise.
///
/// # Safety
/// `c` must be a class handle and `parts` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn sv_class_check(c: *const SvClass, parts: *const c_char) -> SvStatus {
    guard(|| {
        out_ptr!(c);
        let p: Partition = try_ffi!(try_ffi!(read_str(parts, "parts")).parse().map_err(engine));
        try_ffi!((*c).0.check_member(&p).map_err(engine));
        SvStatus::Ok
    })
}

/// Decompose a member; writes caller-owned `basis` and `pi` strings.
///
/// # Safety
/// `c` must be a class handle, `parts` a NUL-terminated string, and the
/// output pointers valid.
#[no_mangle]
pub unsafe extern "C" fn sv_class_decompose(
    c: *const SvClass,
    parts: *const c_char,
    basis: *mut *mut c_char,
    pi: *mut *mut c_char,
) -> SvStatus {
    guard(|| {
        out_ptr!(c);
        out_ptr!(basis);
        out_ptr!(pi);
        let p: Partition = try_ffi!(try_ffi!(read_str(parts, "parts")).parse().map_err(engine));
        let d = try_ffi!(sip_decompose(&(*c).0, &p).map_err(engine));
        *basis = to_c(d.basis.to_string());
        *pi = to_c(format_vector(&d.pi));
        SvStatus::Ok
    })
}

/// # Safety
/// `c` must be null or a class handle, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn sv_class_free(c: *mut SvClass) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}
