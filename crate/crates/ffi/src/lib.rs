//! C ABI for `lucas-frobenius`.
//!
//! Conventions:
//!
//! * Every fallible function returns an [`LfStatus`] and writes its result
//!   through an out-pointer. On failure the out-pointer is left untouched and
//!   [`lf_last_error_message`] describes the error.
//! * Semigroups and reports are opaque handles created by `*_new` and
//!   released by the matching `*_free`.
//! * Big integers cross the boundary as NUL-terminated decimal strings,
//!   released with [`lf_string_free`].
//! * List results use caller buffers: pass `cap` entries of storage; the
//!   required length is always written to `out_len`, and
//!   `LF_STATUS_BUFFER_TOO_SMALL` is returned when it exceeds `cap`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lucas_frobenius::cli::report_json;
use lucas_frobenius::lucas_family::{self, Family, FamilyReport, ReportMode};
use lucas_frobenius::{zeckendorf, Error, NumericalSemigroup};
use num_bigint::BigInt;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LfStatus {
    Ok = 0,
    DomainError = 1,
    NotNumericalSemigroup = 2,
    ResourceError = 3,
    Overflow = 4,
    InternalError = 5,
    NullPointer = 6,
    InvalidArgument = 7,
    BufferTooSmall = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LfFamily {
    S = 0,
    T = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LfMode {
    Closed = 0,
    Oracle = 1,
    Both = 2,
}

/// Opaque semigroup handle.
pub struct LfSemigroup(NumericalSemigroup);

/// Opaque family report handle.
pub struct LfReport(FamilyReport);

impl From<LfFamily> for Family {
    fn from(f: LfFamily) -> Self {
        match f {
            LfFamily::S => Family::S,
            LfFamily::T => Family::T,
        }
    }
}

impl From<LfMode> for ReportMode {
    fn from(m: LfMode) -> Self {
        match m {
            LfMode::Closed => ReportMode::Closed,
            LfMode::Oracle => ReportMode::Oracle,
            LfMode::Both => ReportMode::Both,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(err: &Error) -> LfStatus {
    match err {
        Error::Domain(_) => LfStatus::DomainError,
        Error::NotNumericalSemigroup { .. } => LfStatus::NotNumericalSemigroup,
        Error::Resource { .. } => LfStatus::ResourceError,
        Error::Overflow(_) => LfStatus::Overflow,
        Error::Internal(_) => LfStatus::InternalError,
    }
}

fn fail(status: LfStatus, msg: impl AsRef<str>) -> LfStatus {
    set_last_error(msg.as_ref());
    status
}

fn lib_fail(err: Error) -> LfStatus {
    fail(status_of(&err), err.to_string())
}

/// Runs `f`, turning a panic into `InternalError`.
fn guard(f: impl FnOnce() -> LfStatus) -> LfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => {
            if status == LfStatus::Ok {
                set_last_error("");
            }
            status
        }
        Err(_) => fail(LfStatus::InternalError, "panic inside lucas-frobenius"),
    }
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("decimal and JSON text has no NUL").into_raw()
}

/// # Safety
/// `out` must be null or valid for a write of `T`.
unsafe fn write_out<T>(out: *mut T, value: T) -> LfStatus {
    if out.is_null() {
        return fail(LfStatus::NullPointer, "null output pointer");
    }
    out.write(value);
    LfStatus::Ok
}

/// # Safety
/// `out` must be null or valid for `cap` writes of `T`; `out_len` must be
/// null or valid for one write.
unsafe fn write_list<T: Copy>(values: &[T], out: *mut T, cap: usize, out_len: *mut usize) -> LfStatus {
    if out_len.is_null() {
        return fail(LfStatus::NullPointer, "null length pointer");
    }
    out_len.write(values.len());
    if values.len() > cap {
        return fail(LfStatus::BufferTooSmall, format!("need {} entries, got {cap}", values.len()));
    }
    if !values.is_empty() {
        if out.is_null() {
            return fail(LfStatus::NullPointer, "null output buffer");
        }
        ptr::copy_nonoverlapping(values.as_ptr(), out, values.len());
    }
    LfStatus::Ok
}

/// # Safety
/// `s` must be null or point to a NUL-terminated string.
unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, LfStatus> {
    if s.is_null() {
        return Err(fail(LfStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(LfStatus::InvalidArgument, "string argument is not UTF-8"))
}

/// Message for the most recent failure on this thread; empty after a
/// success. Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn lf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a pointer returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

fn sequence_value(f: fn(i64) -> lucas_frobenius::Result<BigInt>, n: i64, out: *mut *mut c_char) -> LfStatus {
    guard(|| match f(n) {
        // SAFETY: forwarded caller contract.
        Ok(v) => unsafe { write_out(out, into_c_string(v.to_string())) },
        Err(e) => lib_fail(e),
    })
}

/// `l_n` (n >= -1) as a decimal string.
///
/// # Safety
/// `out` must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn lf_lucas(n: i64, out: *mut *mut c_char) -> LfStatus {
    sequence_value(lucas_frobenius::lucas, n, out)
}

/// `l̃_n` (n >= 0) as a decimal string.
///
/// # Safety
/// `out` must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn lf_lucas_tilde(n: i64, out: *mut *mut c_char) -> LfStatus {
    sequence_value(lucas_frobenius::lucas_tilde, n, out)
}

/// `f_n` (n >= 0) as a decimal string.
///
/// # Safety
/// `out` must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn lf_fibonacci(n: i64, out: *mut *mut c_char) -> LfStatus {
    sequence_value(lucas_frobenius::fibonacci, n, out)
}

/// Zeckendorf indices of the decimal integer `x` over `l̃ = 1, 2, 3, 4, 7, ...`,
/// ascending.
///
/// # Safety
/// `x` must be a NUL-terminated string; `out_indices` valid for `cap`
/// writes; `out_len` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn lf_decompose(
    x: *const c_char,
    out_indices: *mut usize,
    cap: usize,
    out_len: *mut usize,
) -> LfStatus {
    guard(|| {
        let text = match read_str(x) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let value: BigInt = match text.trim().parse() {
            Ok(v) => v,
            Err(_) => return fail(LfStatus::InvalidArgument, format!("not an integer: {text:?}")),
        };
        match zeckendorf::decompose(&value) {
            Ok(d) => write_list(&d.indices, out_indices, cap, out_len),
            Err(e) => lib_fail(e),
        }
    })
}

/// Creates a semigroup from `len` generators.
///
/// # Safety
/// `gens` must be valid for `len` reads; `out` valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn lf_semigroup_new(gens: *const u64, len: usize, out: *mut *mut LfSemigroup) -> LfStatus {
    guard(|| {
        if gens.is_null() && len > 0 {
            return fail(LfStatus::NullPointer, "null generator array");
        }
        let slice = if len == 0 { &[][..] } else { std::slice::from_raw_parts(gens, len) };
        match NumericalSemigroup::from_u64s(slice) {
            Ok(s) => write_out(out, Box::into_raw(Box::new(LfSemigroup(s)))),
            Err(e) => lib_fail(e),
        }
    })
}

/// Creates `S(a)` or `T(a)`.
///
/// # Safety
/// `out` must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn lf_semigroup_new_family(family: LfFamily, a: u32, out: *mut *mut LfSemigroup) -> LfStatus {
    guard(|| write_out(out, Box::into_raw(Box::new(LfSemigroup(lucas_family::build(family.into(), a))))))
}

/// # Safety
/// `sg` must be null or a live handle from `lf_semigroup_new*`.
#[no_mangle]
pub unsafe extern "C" fn lf_semigroup_free(sg: *mut LfSemigroup) {
    if !sg.is_null() {
        drop(Box::from_raw(sg));
    }
}

/// # Safety
/// `sg` must be null or a live handle.
unsafe fn with_semigroup(sg: *const LfSemigroup, f: impl FnOnce(&NumericalSemigroup) -> LfStatus) -> LfStatus {
    guard(|| match sg.as_ref() {
        Some(h) => f(&h.0),
        None => fail(LfStatus::NullPointer, "null semigroup handle"),
    })
}

/// Caps the residue-table size used by later queries on this handle.
///
/// # Safety
/// `sg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lf_semigroup_set_table_bound(sg: *mut LfSemigroup, bound: u64) -> LfStatus {
    guard(|| match sg.as_mut() {
        Some(h) => {
            h.0 = h.0.clone().with_table_bound(bound);
            LfStatus::Ok
        }
        None => fail(LfStatus::NullPointer, "null semigroup handle"),
    })
}

fn to_i64(v: &BigInt) -> Result<i64, LfStatus> {
    i64::try_from(v).map_err(|_| fail(LfStatus::Overflow, format!("{v} does not fit in int64_t")))
}

fn to_u64(v: &num_bigint::BigUint) -> Result<u64, LfStatus> {
    u64::try_from(v).map_err(|_| fail(LfStatus::Overflow, format!("{v} does not fit in uint64_t")))
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! try_lib {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return lib_fail(e),
        }
    };
}

/// Frobenius number (-1 for the naturals).
///
/// # Safety
/// `sg` a live handle; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn lf_semigroup_frobenius(sg: *const LfSemigroup, out: *mut i64) -> LfStatus {
    with_semigroup(sg, |s| {
        let f = try_lib!(s.frobenius());
        write_out(out, try_status!(to_i64(&f)))
    })
}

/// # Safety
/// `sg` a live handle; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn lf_semigroup_genus(sg: *const LfSemigroup, out: *mut u64) -> LfStatus {
    with_semigroup(sg, |s| {
        let g = try_lib!(s.genus());
        write_out(out, try_status!(to_u64(&g)))
    })
}

/// Number of elements below the Frobenius number.
///
/// # Safety
/// `sg` a live handle; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn lf_semigroup_sporadic_count(sg: *const LfSemigroup, out: *mut u64) -> LfStatus {
    with_semigroup(sg, |s| {
        let n = try_lib!(s.sporadic_count());
        write_out(out, try_status!(to_u64(&n)))
    })
}

/// # Safety
/// `sg` a live handle; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn lf_semigroup_multiplicity(sg: *const LfSemigroup, out: *mut u64) -> LfStatus {
    with_semigroup(sg, |s| write_out(out, try_status!(to_u64(s.multiplicity()))))
}

/// # Safety
/// `sg` a live handle; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn lf_semigroup_embedding_dimension(sg: *const LfSemigroup, out: *mut usize) -> LfStatus {
    with_semigroup(sg, |s| write_out(out, try_lib!(s.embedding_dimension())))
}

/// # Safety
/// `sg` a live handle; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn lf_semigroup_contains(sg: *const LfSemigroup, x: i64, out: *mut bool) -> LfStatus {
    with_semigroup(sg, |s| write_out(out, try_lib!(s.membership(&BigInt::from(x)))))
}

/// Whether `F + 1 <= e n` holds.
///
/// # Safety
/// `sg` a live handle; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn lf_semigroup_wilf(sg: *const LfSemigroup, out: *mut bool) -> LfStatus {
    with_semigroup(sg, |s| write_out(out, try_lib!(s.wilf_check())))
}

/// Minimal generators, ascending.
///
/// # Safety
/// `sg` a live handle; `out` valid for `cap` writes; `out_len` for one.
#[no_mangle]
pub unsafe extern "C" fn lf_semigroup_minimal_generators(
    sg: *const LfSemigroup,
    out: *mut u64,
    cap: usize,
    out_len: *mut usize,
) -> LfStatus {
    with_semigroup(sg, |s| {
        let msg = try_lib!(s.minimal_generators());
        let msg = try_status!(msg.iter().map(to_u64).collect::<Result<Vec<_>, _>>());
        write_list(&msg, out, cap, out_len)
    })
}

/// `w(0), ..., w(m-1)` for the multiplicity `m`.
///
/// # Safety
/// `sg` a live handle; `out` valid for `cap` writes; `out_len` for one.
#[no_mangle]
pub unsafe extern "C" fn lf_semigroup_apery(
    sg: *const LfSemigroup,
    out: *mut u64,
    cap: usize,
    out_len: *mut usize,
) -> LfStatus {
    with_semigroup(sg, |s| {
        let t = try_lib!(s.apery_multiplicity());
        write_list(t.values(), out, cap, out_len)
    })
}

/// Builds a family report. `bound` caps residue tables (0 selects the default).
///
/// # Safety
/// `out` must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn lf_report_new(
    family: LfFamily,
    a: u32,
    mode: LfMode,
    bound: u64,
    out: *mut *mut LfReport,
) -> LfStatus {
    guard(|| {
        let bound = if bound == 0 { lucas_frobenius::DEFAULT_TABLE_BOUND } else { bound };
        let r = try_lib!(lucas_family::report_with(family.into(), a, mode.into(), bound));
        write_out(out, Box::into_raw(Box::new(LfReport(r))))
    })
}

/// # Safety
/// `r` must be null or a live handle from `lf_report_new`.
#[no_mangle]
pub unsafe extern "C" fn lf_report_free(r: *mut LfReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `r` must be null or a live handle.
unsafe fn with_report(r: *const LfReport, f: impl FnOnce(&FamilyReport) -> LfStatus) -> LfStatus {
    guard(|| match r.as_ref() {
        Some(h) => f(&h.0),
        None => fail(LfStatus::NullPointer, "null report handle"),
    })
}

/// Frobenius number as a decimal string.
///
/// # Safety
/// `r` a live handle; `out` valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn lf_report_frobenius(r: *const LfReport, out: *mut *mut c_char) -> LfStatus {
    with_report(r, |r| write_out(out, into_c_string(r.frobenius.to_string())))
}

/// Genus as a decimal string.
///
/// # Safety
/// `r` a live handle; `out` valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn lf_report_genus(r: *const LfReport, out: *mut *mut c_char) -> LfStatus {
    with_report(r, |r| write_out(out, into_c_string(r.genus.to_string())))
}

/// Multiplicity as a decimal string.
///
/// # Safety
/// `r` a live handle; `out` valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn lf_report_multiplicity(r: *const LfReport, out: *mut *mut c_char) -> LfStatus {
    with_report(r, |r| write_out(out, into_c_string(r.m.to_string())))
}

/// # Safety
/// `r` a live handle; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn lf_report_embedding_dimension(r: *const LfReport, out: *mut u64) -> LfStatus {
    with_report(r, |r| write_out(out, r.e))
}

/// # Safety
/// `r` a live handle; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn lf_report_wilf_ok(r: *const LfReport, out: *mut bool) -> LfStatus {
    with_report(r, |r| write_out(out, r.wilf_ok))
}

/// Number of closed-form/oracle disagreements (0 unless mode was `Both`).
///
/// # Safety
/// `r` a live handle; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn lf_report_mismatch_count(r: *const LfReport, out: *mut usize) -> LfStatus {
    with_report(r, |r| write_out(out, r.mismatches.len()))
}

/// The whole report as JSON, in the same shape as the CLI `family` result.
///
/// # Safety
/// `r` a live handle; `out` valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn lf_report_json(r: *const LfReport, out: *mut *mut c_char) -> LfStatus {
    with_report(r, |r| {
        let text = serde_json_string(r);
        write_out(out, into_c_string(text))
    })
}

fn serde_json_string(r: &FamilyReport) -> String {
    report_json(r).to_string()
}
