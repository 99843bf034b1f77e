//! C ABI for the relparabose library.
//!
//! Conventions:
//! - Opaque handles (`RpbAlgebra`) are created and released by this
//!   library; never free them with `free()`.
//! - Functions that produce text write a NUL-terminated, heap-allocated
//!   UTF-8 string into their `out` parameter; release it with
//!   [`rpb_string_free`].
//! - Every function returns an [`RpbStatus`]. Verification reports are
//!   still written on `RPB_STATUS_CHECK_FAILED` and
//!   `RPB_STATUS_INVALID_INPUT`, so callers can inspect the failures; on
//!   `RPB_STATUS_INVALID_ARGUMENT` the output (when any) is a plain error
//!   message instead of a JSON report.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use relparabose::cli::{self, CliError};
use relparabose::pbf::PbfAlgebra;
use relparabose::realize::RealizationMode;
use relparabose::report::Report;

/// Result of a C ABI call. Codes mirror the CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RpbStatus {
    Ok = 0,
    CheckFailed = 1,
    InvalidArgument = 2,
    InvalidInput = 3,
    /// An internal invariant was violated; the library state is still sound.
    Internal = 4,
}

/// Which bilinear families a realization uses.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RpbMode {
    Mixed = 0,
    Paraboson = 1,
    Parafermion = 2,
}

impl From<RpbMode> for RealizationMode {
    fn from(mode: RpbMode) -> RealizationMode {
        match mode {
            RpbMode::Mixed => RealizationMode::Mixed,
            RpbMode::Paraboson => RealizationMode::Paraboson,
            RpbMode::Parafermion => RealizationMode::Parafermion,
        }
    }
}

/// Opaque handle to a constructed color Lie algebra L(m,n).
pub struct RpbAlgebra {
    inner: PbfAlgebra,
}

fn write_string(out: *mut *mut c_char, text: &str) -> RpbStatus {
    if out.is_null() {
        return RpbStatus::InvalidArgument;
    }
    match CString::new(text) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            RpbStatus::Ok
        }
        Err(_) => RpbStatus::Internal,
    }
}

fn write_report(out: *mut *mut c_char, report: Report, failure: RpbStatus) -> RpbStatus {
    let status = if report.all_passed() { RpbStatus::Ok } else { failure };
    let report = report.with_exit_status(status as i32);
    match write_string(out, &report.render_json()) {
        RpbStatus::Ok => status,
        other => other,
    }
}

fn write_result(out: *mut *mut c_char, result: Result<Report, CliError>) -> RpbStatus {
    match result {
        Ok(report) => write_report(out, report, RpbStatus::CheckFailed),
        Err(CliError::Validation(report)) => write_report(out, report, RpbStatus::InvalidInput),
        Err(err @ CliError::Usage(_)) | Err(err @ CliError::Io { .. }) => {
            let _ = write_string(out, &format!("{err}"));
            RpbStatus::InvalidArgument
        }
    }
}

fn guarded(out: *mut *mut c_char, f: impl FnOnce() -> RpbStatus) -> RpbStatus {
    if !out.is_null() {
        unsafe { *out = ptr::null_mut() };
    }
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(RpbStatus::Internal)
}

/// Builds L(m,n). On success writes a handle into `out`.
///
/// # Safety
/// `out` must be a valid pointer to a pointer slot.
#[no_mangle]
pub unsafe extern "C" fn rpb_algebra_build(m: u32, n: u32, out: *mut *mut RpbAlgebra) -> RpbStatus {
    if out.is_null() {
        return RpbStatus::InvalidArgument;
    }
    unsafe { *out = ptr::null_mut() };
    catch_unwind(AssertUnwindSafe(|| match PbfAlgebra::build(m, n) {
        Ok(inner) => {
            let handle = Box::new(RpbAlgebra { inner });
            unsafe { *out = Box::into_raw(handle) };
            RpbStatus::Ok
        }
        Err(_) => RpbStatus::InvalidArgument,
    }))
    .unwrap_or(RpbStatus::Internal)
}

/// Releases a handle obtained from [`rpb_algebra_build`]. Null is a no-op.
///
/// # Safety
/// `alg` must be null or a pointer returned by [`rpb_algebra_build`] that
/// has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn rpb_algebra_free(alg: *mut RpbAlgebra) {
    if !alg.is_null() {
        drop(unsafe { Box::from_raw(alg) });
    }
}

/// Number of canonical basis symbols; 0 when `alg` is null.
///
/// # Safety
/// `alg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rpb_algebra_dimension(alg: *const RpbAlgebra) -> usize {
    match unsafe { alg.as_ref() } {
        Some(handle) => handle.inner.dimension(),
        None => 0,
    }
}

/// Writes the display name of basis symbol `index` (e.g. `{B1+,B2-}`).
///
/// # Safety
/// `alg` must be a live handle and `out` a valid pointer slot.
#[no_mangle]
pub unsafe extern "C" fn rpb_algebra_symbol_name(
    alg: *const RpbAlgebra,
    index: usize,
    out: *mut *mut c_char,
) -> RpbStatus {
    guarded(out, || {
        let Some(handle) = (unsafe { alg.as_ref() }) else {
            return RpbStatus::InvalidArgument;
        };
        if index >= handle.inner.dimension() {
            return RpbStatus::InvalidArgument;
        }
        write_string(out, &handle.inner.elements()[index].to_string())
    })
}

/// Runs the grading/antisymmetry/Jacobi suite on a built algebra and writes
/// the JSON report.
///
/// # Safety
/// `alg` must be a live handle and `out` a valid pointer slot.
#[no_mangle]
pub unsafe extern "C" fn rpb_algebra_check_json(
    alg: *const RpbAlgebra,
    out: *mut *mut c_char,
) -> RpbStatus {
    guarded(out, || {
        let Some(handle) = (unsafe { alg.as_ref() }) else {
            return RpbStatus::InvalidArgument;
        };
        let result = cli::run_check_pbf(
            handle.inner.paraboson_modes(),
            handle.inner.parafermion_modes(),
            false,
            5,
            None,
        );
        write_result(out, result)
    })
}

/// Serializes the exported color algebra (basis, grades, bracket table)
/// as JSON.
///
/// # Safety
/// `alg` must be a live handle and `out` a valid pointer slot.
#[no_mangle]
pub unsafe extern "C" fn rpb_algebra_to_json(
    alg: *const RpbAlgebra,
    out: *mut *mut c_char,
) -> RpbStatus {
    guarded(out, || {
        let Some(handle) = (unsafe { alg.as_ref() }) else {
            return RpbStatus::InvalidArgument;
        };
        match relparabose::format::ColorAlgebraFile::from_algebra(handle.inner.exported()) {
            Ok(file) => write_string(out, &file.render()),
            Err(_) => RpbStatus::Internal,
        }
    })
}

/// Verifies the four quadruple-bracket identities; writes the JSON report.
///
/// # Safety
/// `out` must be a valid pointer slot.
#[no_mangle]
pub unsafe extern "C" fn rpb_identities_json(out: *mut *mut c_char) -> RpbStatus {
    guarded(out, || write_result(out, Ok(cli::run_identities())))
}

/// Builds L(m,n), runs the axiom suite, and optionally the truncated-Fock
/// oracle at the given boson cutoff; writes the JSON report.
///
/// # Safety
/// `out` must be a valid pointer slot.
#[no_mangle]
pub unsafe extern "C" fn rpb_check_pbf_json(
    m: u32,
    n: u32,
    with_oracle: bool,
    cutoff: u32,
    out: *mut *mut c_char,
) -> RpbStatus {
    guarded(out, || write_result(out, cli::run_check_pbf(m, n, with_oracle, cutoff, None)))
}

/// Runs the braided Hopf axiom suite over words up to `max_len`; writes the
/// JSON report.
///
/// # Safety
/// `out` must be a valid pointer slot.
#[no_mangle]
pub unsafe extern "C" fn rpb_check_hopf_json(
    m: u32,
    n: u32,
    max_len: u32,
    out: *mut *mut c_char,
) -> RpbStatus {
    guarded(out, || write_result(out, cli::run_check_hopf(m, n, max_len as usize)))
}

/// Parses an algebra document (the same JSON schema the CLI reads), builds
/// the paraparticle realization, verifies it, and writes the JSON report.
///
/// # Safety
/// `algebra_json` must be a NUL-terminated string and `out` a valid
/// pointer slot.
#[no_mangle]
pub unsafe extern "C" fn rpb_realize_json(
    algebra_json: *const c_char,
    mode: RpbMode,
    with_hopf: bool,
    out: *mut *mut c_char,
) -> RpbStatus {
    guarded(out, || {
        if algebra_json.is_null() {
            return RpbStatus::InvalidArgument;
        }
        let Ok(text) = unsafe { CStr::from_ptr(algebra_json) }.to_str() else {
            return RpbStatus::InvalidArgument;
        };
        write_result(out, cli::run_realize_text("<memory>", text, mode.into(), with_hopf))
    })
}

/// Releases a string produced by this library. Null is a no-op.
///
/// # Safety
/// `s` must be null or a string returned by this library that has not been
/// freed yet.
#[no_mangle]
pub unsafe extern "C" fn rpb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// The library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn rpb_version() -> *const c_char {
    const VERSION: &CStr =
        match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
            Ok(v) => v,
            Err(_) => unreachable!(),
        };
    VERSION.as_ptr()
}
