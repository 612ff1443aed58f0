//! C ABI over the `easterfield` engine.
//!
//! Groups are opaque `EfGroup` handles created by the constructor functions
//! and released with [`ef_group_free`]. Every fallible call returns an
//! [`EfStatus`]; on failure a description is available from
//! [`ef_last_error_message`] on the same thread. Strings handed out by the
//! library are NUL-terminated and must be released with [`ef_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use easterfield::capability::{check_lemma, easterfield_witness, exponent_gap, verify_witness};
use easterfield::constructions::{dihedral, easterfield, easterfield_subgroup, EasterfieldSpec};
use easterfield::presentation::presentation;
use easterfield::{Error, SplitGroup};

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    CapExceeded = 3,
    InvalidGroup = 4,
    NotNilpotent = 5,
    Internal = 6,
}

/// Opaque handle to a validated group.
pub struct EfGroup {
    inner: SplitGroup,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn status_of(error: &Error) -> EfStatus {
    match error.root() {
        Error::CapExceeded { .. } => EfStatus::CapExceeded,
        Error::NotNilpotent { .. } => EfStatus::NotNilpotent,
        Error::NotPrime(_)
        | Error::InvalidR
        | Error::InvalidDihedral(_)
        | Error::InvalidClass(_)
        | Error::OrderOverflow
        | Error::TrivialQuotient
        | Error::NotPrimePowerOrder(_) => EfStatus::InvalidArgument,
        Error::Io(_) => EfStatus::Internal,
        _ => EfStatus::InvalidGroup,
    }
}

/// Runs `body`, translating errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), EfStatus>) -> EfStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => EfStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_last_error("internal panic".to_string());
            EfStatus::Internal
        }
    }
}

fn fail(error: Error) -> EfStatus {
    let status = status_of(&error);
    set_last_error(error.to_string());
    status
}

fn null(what: &str) -> EfStatus {
    set_last_error(format!("{what} is NULL"));
    EfStatus::NullPointer
}

/// # Safety
/// `out` must be NULL or valid for a pointer write.
unsafe fn emit_group(
    result: Result<SplitGroup, Error>,
    out: *mut *mut EfGroup,
) -> Result<(), EfStatus> {
    if out.is_null() {
        return Err(null("out"));
    }
    let group = result.map_err(fail)?;
    *out = Box::into_raw(Box::new(EfGroup { inner: group }));
    Ok(())
}

/// # Safety
/// `out` must be NULL or valid for a pointer write.
unsafe fn emit_string(
    result: Result<String, Error>,
    out: *mut *mut c_char,
) -> Result<(), EfStatus> {
    if out.is_null() {
        return Err(null("out"));
    }
    let text = result.map_err(fail)?;
    let text = CString::new(text).map_err(|_| EfStatus::Internal)?;
    *out = text.into_raw();
    Ok(())
}

/// # Safety
/// `group` must be NULL or a live handle from this library.
unsafe fn group_ref<'a>(group: *const EfGroup) -> Result<&'a SplitGroup, EfStatus> {
    group
        .as_ref()
        .map(|g| &g.inner)
        .ok_or_else(|| null("group"))
}

fn spec(p: u64, r: u32) -> Result<EasterfieldSpec, Error> {
    EasterfieldSpec::new(p, r)
}

/// Builds `K(p, r)`.
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn ef_easterfield(p: u64, r: u32, out: *mut *mut EfGroup) -> EfStatus {
    guard(|| emit_group(spec(p, r).and_then(easterfield), out))
}

/// Builds the subgroup `⟨y, x1, …, x_{p-1}⟩` of `K(p, r)` as a group.
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn ef_easterfield_subgroup(
    p: u64,
    r: u32,
    out: *mut *mut EfGroup,
) -> EfStatus {
    guard(|| emit_group(spec(p, r).and_then(easterfield_subgroup), out))
}

/// Builds the dihedral group of order `2n` (`n` a power of two, `n >= 4`).
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn ef_dihedral(n: u64, out: *mut *mut EfGroup) -> EfStatus {
    guard(|| emit_group(dihedral(n), out))
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `group` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ef_group_free(group: *mut EfGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Sets the largest group order that enumeration will accept.
///
/// # Safety
/// `group` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ef_group_set_cap(group: *mut EfGroup, cap: u64) -> EfStatus {
    guard(|| {
        let handle = group.as_mut().ok_or_else(|| null("group"))?;
        handle.inner = handle.inner.clone().with_enumeration_cap(cap);
        Ok(())
    })
}

/// # Safety
/// `group` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ef_group_order(group: *const EfGroup, out: *mut u64) -> EfStatus {
    guard(|| {
        let g = group_ref(group)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = g.order();
        Ok(())
    })
}

/// Nilpotency class read from the computed lower central series.
///
/// # Safety
/// `group` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ef_nilpotency_class(group: *const EfGroup, out: *mut u64) -> EfStatus {
    guard(|| {
        let g = group_ref(group)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = g.nilpotency_class().map_err(fail)? as u64;
        Ok(())
    })
}

/// # Safety
/// `group` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ef_center_order(group: *const EfGroup, out: *mut u64) -> EfStatus {
    guard(|| {
        let g = group_ref(group)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = g.center().map_err(fail)?.order() as u64;
        Ok(())
    })
}

/// Witness report for `group` as a JSON object, same schema as the CLI.
///
/// # Safety
/// `group` must be a live handle and `out` valid for one pointer write. The
/// string must be released with [`ef_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ef_verify_witness_json(
    group: *const EfGroup,
    p: u64,
    expected_class: u64,
    out: *mut *mut c_char,
) -> EfStatus {
    guard(|| {
        let g = group_ref(group)?;
        if p < 2 {
            return Err(fail(Error::NotPrime(p)));
        }
        let report = verify_witness(g, p, expected_class)
            .map(|report| serde_json::to_string(&report).expect("report serializes"));
        emit_string(report, out)
    })
}

/// Builds `K(p, r)` under `cap` and returns its witness report as JSON.
///
/// # Safety
/// `out` must be valid for one pointer write; release with [`ef_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ef_witness_json(
    p: u64,
    r: u32,
    cap: u64,
    out: *mut *mut c_char,
) -> EfStatus {
    guard(|| {
        let report = easterfield_witness(p, r, cap)
            .map(|report| serde_json::to_string(&report).expect("report serializes"));
        emit_string(report, out)
    })
}

/// Plain-text presentation of `K(p, r)`.
///
/// # Safety
/// `out` must be valid for one pointer write; release with [`ef_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ef_presentation(p: u64, r: u32, out: *mut *mut c_char) -> EfStatus {
    guard(|| emit_string(spec(p, r).and_then(|s| presentation(&s)), out))
}

/// Whether `x0^(p^(r-1))` fails to commute with `y` in `K(p, r)`.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ef_check_lemma(p: u64, r: u32, out: *mut bool) -> EfStatus {
    guard(|| {
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = check_lemma(p, r).map_err(fail)?;
        Ok(())
    })
}

/// `floor((c - 1)/(p - 1))`.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn ef_exponent_gap(p: u64, c: u64, out: *mut u64) -> EfStatus {
    guard(|| {
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        if p < 2 {
            return Err(fail(Error::NotPrime(p)));
        }
        *out = exponent_gap(p, c);
        Ok(())
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ef_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ef_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Reads a library string without taking ownership; test and binding helper.
///
/// # Safety
/// `s` must be NULL or a valid NUL-terminated string.
pub unsafe fn borrow_str<'a>(s: *const c_char) -> Option<&'a str> {
    if s.is_null() {
        None
    } else {
        CStr::from_ptr(s).to_str().ok()
    }
}
