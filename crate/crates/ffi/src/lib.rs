//! C interface to `gentle`.
//!
//! Algebras live behind opaque handles created by a parse function and
//! released with [`gentle_algebra_free`]. Every fallible function returns a
//! [`GentleStatus`]; on failure a message is available from
//! [`gentle_last_error`] on the same thread. Strings and integers are
//! passed through caller-provided out-pointers. Strings returned by the
//! library must be released with [`gentle_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gentle::ext::{ext_dim, ext_sequence};
use gentle::format::{parse_algebra, parse_triangulation};
use gentle::homology::{gl_dim_status, proj_dim, GlobalDimension};
use gentle::oracle::{ext_dims_oracle, Representation};
use gentle::{GentleAlgebra, StringModule};

#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum GentleStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// The algebra or triangulation text was rejected.
    ParseError = 3,
    /// A module string did not parse over the algebra.
    InvalidString = 4,
    OracleError = 5,
    InvalidArgument = 6,
    Panic = 7,
}

/// Opaque validated gentle algebra.
pub struct GentleAlgebraHandle {
    inner: GentleAlgebra,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let c = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Fail(GentleStatus);

fn fail(status: GentleStatus, msg: impl Into<String>) -> Fail {
    set_error(msg);
    Fail(status)
}

/// Run `f`, mapping errors and panics to status codes.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> GentleStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GentleStatus::Ok,
        Ok(Err(Fail(s))) => s,
        Err(_) => {
            set_error("internal panic");
            GentleStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(fail(GentleStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(GentleStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

unsafe fn algebra<'a>(h: *const GentleAlgebraHandle) -> Result<&'a GentleAlgebra, Fail> {
    h.as_ref()
        .map(|h| &h.inner)
        .ok_or_else(|| fail(GentleStatus::NullPointer, "null algebra handle"))
}

unsafe fn out_ptr<'a, T>(p: *mut T) -> Result<&'a mut T, Fail> {
    p.as_mut()
        .ok_or_else(|| fail(GentleStatus::NullPointer, "null output pointer"))
}

fn module(a: &GentleAlgebra, s: &str) -> Result<StringModule, Fail> {
    StringModule::parse(a, s)
        .map_err(|e| fail(GentleStatus::InvalidString, format!("string `{s}`: {e}")))
}

unsafe fn store(out: *mut *mut GentleAlgebraHandle, a: GentleAlgebra) -> Result<(), Fail> {
    *out_ptr(out)? = Box::into_raw(Box::new(GentleAlgebraHandle { inner: a }));
    Ok(())
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn gentle_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parse an algebra file (`vertex`, `arrow`, `rel` lines).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gentle_algebra_parse(
    text_ptr: *const c_char,
    out: *mut *mut GentleAlgebraHandle,
) -> GentleStatus {
    guard(|| {
        let a = parse_algebra(text(text_ptr)?)
            .map_err(|e| fail(GentleStatus::ParseError, e.to_string()))?;
        store(out, a)
    })
}

/// Build the gentle algebra of a triangulation file.
///
/// # Safety
/// As for [`gentle_algebra_parse`].
#[no_mangle]
pub unsafe extern "C" fn gentle_algebra_from_triangulation(
    text_ptr: *const c_char,
    out: *mut *mut GentleAlgebraHandle,
) -> GentleStatus {
    guard(|| {
        let t = parse_triangulation(text(text_ptr)?)
            .map_err(|e| fail(GentleStatus::ParseError, e.to_string()))?;
        let a = t
            .algebra()
            .map_err(|e| fail(GentleStatus::ParseError, e.to_string()))?;
        store(out, a)
    })
}

/// Release a handle; null is ignored.
///
/// # Safety
/// `h` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn gentle_algebra_free(h: *mut GentleAlgebraHandle) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gentle_algebra_vertex_count(
    h: *const GentleAlgebraHandle,
    out: *mut usize,
) -> GentleStatus {
    guard(|| {
        *out_ptr(out)? = algebra(h)?.vertex_count();
        Ok(())
    })
}

/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gentle_algebra_arrow_count(
    h: *const GentleAlgebraHandle,
    out: *mut usize,
) -> GentleStatus {
    guard(|| {
        *out_ptr(out)? = algebra(h)?.arrow_count();
        Ok(())
    })
}

/// Number of relation cycles.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gentle_algebra_cycle_count(
    h: *const GentleAlgebraHandle,
    out: *mut usize,
) -> GentleStatus {
    guard(|| {
        *out_ptr(out)? = algebra(h)?.relation_cycles().len();
        Ok(())
    })
}

/// Global dimension; `-1` for infinite.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gentle_algebra_gl_dim(
    h: *const GentleAlgebraHandle,
    out: *mut i64,
) -> GentleStatus {
    guard(|| {
        *out_ptr(out)? = match gl_dim_status(algebra(h)?) {
            GlobalDimension::Finite(d) => d as i64,
            GlobalDimension::Infinite => -1,
        };
        Ok(())
    })
}

/// The algebra in file format; release with [`gentle_string_free`].
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gentle_algebra_to_text(
    h: *const GentleAlgebraHandle,
    out: *mut *mut c_char,
) -> GentleStatus {
    guard(|| {
        let s = CString::new(algebra(h)?.to_string())
            .map_err(|_| fail(GentleStatus::Panic, "NUL in output"))?;
        *out_ptr(out)? = s.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn gentle_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Projective dimension of a string module; `-1` for infinite.
///
/// # Safety
/// `h` must be a live handle, `string` NUL-terminated, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn gentle_proj_dim(
    h: *const GentleAlgebraHandle,
    string: *const c_char,
    out: *mut i64,
) -> GentleStatus {
    guard(|| {
        let a = algebra(h)?;
        let m = module(a, text(string)?)?;
        *out_ptr(out)? = proj_dim(a, &m).map_or(-1, |d| d as i64);
        Ok(())
    })
}

/// `dim Ext^degree(M(from), M(to))` for `degree ≥ 1`.
///
/// # Safety
/// `h` must be a live handle, strings NUL-terminated, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn gentle_ext_dim(
    h: *const GentleAlgebraHandle,
    from: *const c_char,
    to: *const c_char,
    degree: usize,
    out: *mut usize,
) -> GentleStatus {
    guard(|| {
        if degree == 0 {
            return Err(fail(
                GentleStatus::InvalidArgument,
                "degree must be at least 1",
            ));
        }
        let a = algebra(h)?;
        let (m, n) = (module(a, text(from)?)?, module(a, text(to)?)?);
        *out_ptr(out)? = ext_dim(a, &m, &n, degree);
        Ok(())
    })
}

/// Fill `buf[i]` with `dim Ext^{i+1}` for `i < len`.
///
/// # Safety
/// `buf` must point to `len` writable elements.
#[no_mangle]
pub unsafe extern "C" fn gentle_ext_dims(
    h: *const GentleAlgebraHandle,
    from: *const c_char,
    to: *const c_char,
    buf: *mut usize,
    len: usize,
) -> GentleStatus {
    guard(|| {
        let a = algebra(h)?;
        let (m, n) = (module(a, text(from)?)?, module(a, text(to)?)?);
        if len == 0 {
            return Ok(());
        }
        if buf.is_null() {
            return Err(fail(GentleStatus::NullPointer, "null buffer"));
        }
        let out = std::slice::from_raw_parts_mut(buf, len);
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = ext_dim(a, &m, &n, i + 1);
        }
        Ok(())
    })
}

/// Eventual behaviour of `dim Ext^i`: `period` is 0 when the sequence is
/// eventually zero; `tail_start` is the first degree of the repeating part.
///
/// # Safety
/// `h` must be a live handle, strings NUL-terminated, out-pointers valid.
#[no_mangle]
pub unsafe extern "C" fn gentle_ext_period(
    h: *const GentleAlgebraHandle,
    from: *const c_char,
    to: *const c_char,
    period: *mut usize,
    tail_start: *mut usize,
) -> GentleStatus {
    guard(|| {
        let a = algebra(h)?;
        let (m, n) = (module(a, text(from)?)?, module(a, text(to)?)?);
        let seq = ext_sequence(a, &m, &n);
        *out_ptr(period)? = seq.period;
        *out_ptr(tail_start)? = seq.tail_start();
        Ok(())
    })
}

/// `dim Ext^degree` computed by exact linear algebra, independently of
/// the string combinatorics.
///
/// # Safety
/// As for [`gentle_ext_dim`].
#[no_mangle]
pub unsafe extern "C" fn gentle_oracle_ext_dim(
    h: *const GentleAlgebraHandle,
    from: *const c_char,
    to: *const c_char,
    degree: usize,
    out: *mut usize,
) -> GentleStatus {
    guard(|| {
        let a = algebra(h)?;
        let (m, n) = (module(a, text(from)?)?, module(a, text(to)?)?);
        let (rm, rn) = (
            Representation::from_module(a, &m),
            Representation::from_module(a, &n),
        );
        let dims = ext_dims_oracle(a, &rm, &rn, degree)
            .map_err(|e| fail(GentleStatus::OracleError, e.to_string()))?;
        *out_ptr(out)? = dims[degree];
        Ok(())
    })
}
