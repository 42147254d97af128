//! C interface to `rb-shuffle`.
//!
//! A session fixes an algebra handle, a coefficient ring and a weight.
//! Elements are opaque and belong to the session that made them. Every
//! function returns a status code; on failure `rb_last_error` describes the
//! problem until the next call on the same thread. Strings returned through
//! out-parameters are owned by the caller and released with
//! `rb_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use rb_shuffle::algebra::{AlgError, AlgebraHandle, Ctx, Element};
use rb_shuffle::cli::eval::{eval_str, Operators};
use rb_shuffle::cli::parser::DiagKind;
use rb_shuffle::coeffs::RingMode;
use rb_shuffle::laws::{self, reports_json, Config};
use rb_shuffle::text::{render, to_json};

pub const RB_OK: c_int = 0;
pub const RB_PARSE_ERROR: c_int = 1;
pub const RB_TYPE_ERROR: c_int = 2;
pub const RB_ALGEBRA_ERROR: c_int = 3;
pub const RB_NULL_POINTER: c_int = 4;
pub const RB_INVALID_UTF8: c_int = 5;
pub const RB_UNKNOWN_SUITE: c_int = 6;
pub const RB_LAW_FAILED: c_int = 7;
pub const RB_PANIC: c_int = 8;

/// An algebra together with the operators used by `P(..)` and `D(..)`.
pub struct RbSession {
    handle: AlgebraHandle,
    ops: Operators,
    precision: usize,
}

/// An element of a session's algebra.
pub struct RbElement {
    handle: AlgebraHandle,
    value: Element,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(c_int, String);

type Out<T> = Result<T, Failure>;

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Out<c_int>) -> c_int {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(code)) => code,
        Ok(Err(Failure(code, msg))) => {
            set_error(&msg);
            code
        }
        Err(_) => {
            set_error("internal panic");
            RB_PANIC
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Out<&'a str> {
    if p.is_null() {
        return Err(Failure(RB_NULL_POINTER, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(RB_INVALID_UTF8, format!("{what}: {e}")))
}

unsafe fn opt_text<'a>(p: *const c_char, what: &str) -> Out<Option<&'a str>> {
    if p.is_null() {
        Ok(None)
    } else {
        text(p, what).map(Some)
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Out<&'a T> {
    p.as_ref()
        .ok_or_else(|| Failure(RB_NULL_POINTER, format!("{what} is null")))
}

fn alg(e: AlgError) -> Failure {
    let code = match e {
        AlgError::HandleMismatch { .. } => RB_TYPE_ERROR,
        AlgError::InvalidHandle(_) => RB_PARSE_ERROR,
        _ => RB_ALGEBRA_ERROR,
    };
    Failure(code, e.to_string())
}

unsafe fn put<T>(out: *mut T, value: T) -> Out<c_int> {
    if out.is_null() {
        return Err(Failure(RB_NULL_POINTER, "output pointer is null".into()));
    }
    out.write(value);
    Ok(RB_OK)
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior nul").into_raw()
}

/// Opens a session on `handle` (e.g. `"sha(poly(x,y))"`). `ring` is `"q"`,
/// `"z"` or `"zmod:M"` and `lambda` a scalar literal; either may be null for
/// the rationals and weight 0.
///
/// # Safety
/// String arguments must be null or nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rb_session_new(
    handle: *const c_char,
    ring: *const c_char,
    lambda: *const c_char,
    out: *mut *mut RbSession,
) -> c_int {
    guard(|| {
        let spec = text(handle, "handle")?;
        let ring: RingMode = match opt_text(ring, "ring")? {
            None => RingMode::Rational,
            Some(r) => r.parse().map_err(|e| Failure(RB_PARSE_ERROR, format!("ring: {e}")))?,
        };
        let lambda = match opt_text(lambda, "lambda")? {
            None => ring.zero(),
            Some(l) => ring
                .parse_scalar(l)
                .map_err(|e| Failure(RB_PARSE_ERROR, format!("lambda: {e}")))?,
        };
        let ctx = Ctx::new(ring, lambda).map_err(alg)?;
        let h = AlgebraHandle::parse(spec, ctx).map_err(alg)?;
        let s = Box::new(RbSession {
            handle: h,
            ops: Operators::default(),
            precision: 4,
        });
        put(out, Box::into_raw(s))
    })
}

/// # Safety
/// `s` must come from `rb_session_new` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn rb_session_free(s: *mut RbSession) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Evaluates an expression such as `"P(x # y) * (1 # x)"`.
///
/// # Safety
/// `s` must be a live session, `expr` nul-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rb_eval(s: *const RbSession, expr: *const c_char, out: *mut *mut RbElement) -> c_int {
    guard(|| {
        let s = deref(s, "session")?;
        let src = text(expr, "expr")?;
        let value = eval_str(src, &s.handle, &s.ops, s.precision).map_err(|d| {
            let code = match d.kind {
                DiagKind::Type => RB_TYPE_ERROR,
                DiagKind::Algebra => RB_ALGEBRA_ERROR,
                _ => RB_PARSE_ERROR,
            };
            Failure(code, d.to_string())
        })?;
        let e = Box::new(RbElement {
            handle: s.handle.clone(),
            value,
        });
        put(out, Box::into_raw(e))
    })
}

unsafe fn binary(
    a: *const RbElement,
    b: *const RbElement,
    out: *mut *mut RbElement,
    op: fn(&AlgebraHandle, &Element, &Element) -> Result<Element, AlgError>,
) -> c_int {
    guard(|| {
        let (a, b) = (deref(a, "a")?, deref(b, "b")?);
        if a.handle != b.handle {
            return Err(Failure(
                RB_TYPE_ERROR,
                format!("elements of {} and {} do not combine", a.handle, b.handle),
            ));
        }
        let value = op(&a.handle, &a.value, &b.value).map_err(alg)?;
        put(
            out,
            Box::into_raw(Box::new(RbElement {
                handle: a.handle.clone(),
                value,
            })),
        )
    })
}

/// # Safety
/// `a` and `b` must be live elements and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rb_element_add(a: *const RbElement, b: *const RbElement, out: *mut *mut RbElement) -> c_int {
    binary(a, b, out, rb_shuffle::algebra::alg_add)
}

/// # Safety
/// `a` and `b` must be live elements and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rb_element_mul(a: *const RbElement, b: *const RbElement, out: *mut *mut RbElement) -> c_int {
    binary(a, b, out, rb_shuffle::algebra::alg_mul)
}

/// Writes 1 to `out` when `a = b` at their common precision, else 0.
///
/// # Safety
/// `a` and `b` must be live elements and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rb_element_equal(a: *const RbElement, b: *const RbElement, out: *mut c_int) -> c_int {
    guard(|| {
        let (a, b) = (deref(a, "a")?, deref(b, "b")?);
        if a.handle != b.handle {
            return put(out, 0);
        }
        let eq = rb_shuffle::algebra::alg_eq(&a.handle, &a.value, &b.value).map_err(alg)?;
        put(out, c_int::from(eq))
    })
}

/// Text form, readable back by `rb_eval`.
///
/// # Safety
/// `e` must be a live element and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rb_element_to_string(e: *const RbElement, out: *mut *mut c_char) -> c_int {
    guard(|| {
        let e = deref(e, "element")?;
        put(out, owned_string(render(&e.handle, &e.value)))
    })
}

/// # Safety
/// `e` must be a live element and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rb_element_to_json(e: *const RbElement, out: *mut *mut c_char) -> c_int {
    guard(|| {
        let e = deref(e, "element")?;
        put(out, owned_string(to_json(&e.handle, &e.value).to_string()))
    })
}

/// # Safety
/// `e` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn rb_element_free(e: *mut RbElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Runs one law suite (or all, when `suite` is null) over the session's
/// ring and writes the JSON report to `out`. Returns `RB_LAW_FAILED` when a
/// suite fails; the report is written either way. `samples < 0` keeps the
/// default sample counts.
///
/// # Safety
/// `s` must be a live session, `suite` null or nul-terminated, `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn rb_check(
    s: *const RbSession,
    suite: *const c_char,
    seed: u64,
    samples: i64,
    out: *mut *mut c_char,
) -> c_int {
    guard(|| {
        let s = deref(s, "session")?;
        if out.is_null() {
            return Err(Failure(RB_NULL_POINTER, "output pointer is null".into()));
        }
        let names: Option<Vec<String>> = opt_text(suite, "suite")?.map(|n| vec![n.to_string()]);
        let cfg = Config {
            ring: s.handle.ring(),
            samples: usize::try_from(samples).ok(),
            ..Config::default()
        };
        let reports = laws::run_many(names.as_deref(), seed, &cfg).map_err(|e| Failure(RB_UNKNOWN_SUITE, e))?;
        let passed = reports.iter().all(|r| r.passed);
        put(out, owned_string(reports_json(&reports, false).to_string()))?;
        if passed {
            Ok(RB_OK)
        } else {
            Err(Failure(RB_LAW_FAILED, "a law suite failed".into()))
        }
    })
}

/// Message for the last failure on this thread, or an empty string. The
/// pointer stays valid until the next library call on this thread.
#[no_mangle]
pub extern "C" fn rb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `p` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn rb_string_free(p: *mut c_char) {
    if !p.is_null() {
        drop(CString::from_raw(p));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn last() -> String {
        unsafe { CStr::from_ptr(rb_last_error()) }
            .to_string_lossy()
            .into_owned()
    }

    #[test]
    fn panics_become_status_codes() {
        let rc = guard(|| panic!("boom"));
        assert_eq!(rc, RB_PANIC);
        assert_eq!(last(), "internal panic");
        assert_eq!(guard(|| Ok(RB_OK)), RB_OK);
        assert_eq!(last(), "");
    }

    #[test]
    fn interior_nul_is_replaced() {
        let rc = guard(|| Err(Failure(RB_ALGEBRA_ERROR, "a\0b".into())));
        assert_eq!(rc, RB_ALGEBRA_ERROR);
        assert_eq!(last(), "a b");
        let p = owned_string("x\0y".into());
        assert_eq!(unsafe { CStr::from_ptr(p) }.to_str().unwrap(), "x y");
        unsafe { rb_string_free(p) };
    }
}
