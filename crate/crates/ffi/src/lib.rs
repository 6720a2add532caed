//! C ABI over the `cfrac` library.
//!
//! Numbers cross the boundary as NUL-terminated decimal strings so that no
//! value is ever truncated to a machine integer. Every function returns a
//! [`CfracStatus`]; on failure a description is available from
//! [`cfrac_last_error_message`] until the next call on the same thread.
//!
//! Strings handed out by this library must be released with
//! [`cfrac_string_free`], surds with [`cfrac_surd_free`] and convergent
//! lists with [`cfrac_convergents_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::{c_char, c_int, size_t};

use cfrac::{parse_cf, sqrt_cf, ContinuedFraction, Convergent, Error, FiniteCF, QuadraticSurd, Rational};

/// Result of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CfracStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    ZeroDenominator = 5,
    DivisionByZero = 6,
    PerfectSquare = 7,
    NonPositiveRadicand = 8,
    BudgetExceeded = 9,
    NoSolution = 10,
    IndexOutOfRange = 11,
    Panic = 12,
}

/// A quadratic surd `(P + sqrt D) / Q`.
pub struct CfracSurd(QuadraticSurd);

/// The convergents of a continued fraction.
pub struct CfracConvergents(Vec<Convergent>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("NULs replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(CfracStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse(_) | Error::InvalidCoefficients(_) => CfracStatus::Parse,
            Error::InvalidArgument(_) | Error::InsufficientCoefficients { .. } => CfracStatus::InvalidArgument,
            Error::ZeroDenominator | Error::ZeroSurdDenominator => CfracStatus::ZeroDenominator,
            Error::DivisionByZero => CfracStatus::DivisionByZero,
            Error::PerfectSquare(_) => CfracStatus::PerfectSquare,
            Error::NonPositiveRadicand(_) => CfracStatus::NonPositiveRadicand,
            Error::PeriodNotFoundWithinBudget(_) => CfracStatus::BudgetExceeded,
            Error::NoNegativeSolution { .. } => CfracStatus::NoSolution,
        };
        Failure(status, e.to_string())
    }
}

fn fail(status: CfracStatus, msg: impl Into<String>) -> Failure {
    Failure(status, msg.into())
}

/// Runs `f`, records any error and converts panics into `Panic`.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> CfracStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            CfracStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            CfracStatus::Panic
        }
    }
}

/// # Safety
/// `p` must be null or point to a NUL-terminated string.
unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(fail(CfracStatus::NullPointer, format!("{what} is null")));
    }
    // SAFETY: non-null and NUL-terminated per the caller's contract.
    unsafe { CStr::from_ptr(p) }
        .to_str()
        .map_err(|_| fail(CfracStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

fn integer(s: &str, what: &str) -> Result<num_bigint::BigInt, Failure> {
    s.trim()
        .parse()
        .map_err(|_| fail(CfracStatus::Parse, format!("{what} is not an integer: {s:?}")))
}

/// # Safety
/// `out` must be null or valid for a pointer write.
unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(fail(CfracStatus::NullPointer, "output pointer is null"));
    }
    let c = CString::new(s).map_err(|_| fail(CfracStatus::Panic, "interior NUL in output"))?;
    // SAFETY: checked non-null; validity is the caller's contract.
    unsafe { *out = c.into_raw() };
    Ok(())
}

/// # Safety
/// `out` must be null or valid for a pointer write.
unsafe fn put_box<T>(out: *mut *mut T, v: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(fail(CfracStatus::NullPointer, "output pointer is null"));
    }
    // SAFETY: checked non-null; validity is the caller's contract.
    unsafe { *out = Box::into_raw(Box::new(v)) };
    Ok(())
}

/// # Safety
/// `p` must be null or a live handle returned by this library.
unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    // SAFETY: the caller guarantees the pointer is a live handle if non-null.
    unsafe { p.as_ref() }.ok_or_else(|| fail(CfracStatus::NullPointer, "handle is null"))
}

/// Message for the most recent failure on this thread, or null if the last
/// call succeeded. The pointer stays valid until the next call into this
/// library on the same thread and must not be freed.
#[no_mangle]
pub extern "C" fn cfrac_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string produced by this library that has not been
/// freed yet.
#[no_mangle]
pub unsafe extern "C" fn cfrac_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: produced by CString::into_raw in put_string.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Continued fraction of the rational `text_in` (`"p/q"` or `"p"`), written as
/// e.g. `"[2;1,3,4]"`.
///
/// # Safety
/// `text_in` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cfrac_expand_rational(text_in: *const c_char, out: *mut *mut c_char) -> CfracStatus {
    guard(|| {
        let r: Rational = unsafe { text(text_in, "rational") }?.parse()?;
        unsafe { put_string(out, FiniteCF::expand(&r).to_string()) }
    })
}

/// Value of a continued fraction in bracket notation: `"p/q"` for a finite
/// one, the surd text (e.g. `"(1+√5)/2"`) for a periodic one.
///
/// # Safety
/// `cf` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cfrac_evaluate(cf: *const c_char, out: *mut *mut c_char) -> CfracStatus {
    guard(|| {
        let value = match parse_cf(unsafe { text(cf, "continued fraction") }?).map_err(Error::from)? {
            ContinuedFraction::Finite(f) => f.evaluate().to_string(),
            ContinuedFraction::Periodic(p) => p.to_surd().to_string(),
        };
        unsafe { put_string(out, value) }
    })
}

/// Periodic expansion of `sqrt(n)`, e.g. `"[1;(2)]"` for `"2"`.
///
/// # Safety
/// `n` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cfrac_sqrt_cf(n: *const c_char, out: *mut *mut c_char) -> CfracStatus {
    guard(|| {
        let n = integer(unsafe { text(n, "n") }?, "n")?;
        unsafe { put_string(out, sqrt_cf(n)?.to_string()) }
    })
}

/// New surd `(P + sqrt D) / Q` from decimal integer strings.
///
/// # Safety
/// `p`, `d`, `q` must be NUL-terminated strings; `out` must be valid for
/// writes. Release the result with [`cfrac_surd_free`].
#[no_mangle]
pub unsafe extern "C" fn cfrac_surd_new(
    p: *const c_char,
    d: *const c_char,
    q: *const c_char,
    out: *mut *mut CfracSurd,
) -> CfracStatus {
    guard(|| {
        let p = integer(unsafe { text(p, "P") }?, "P")?;
        let d = integer(unsafe { text(d, "D") }?, "D")?;
        let q = integer(unsafe { text(q, "Q") }?, "Q")?;
        unsafe { put_box(out, CfracSurd(QuadraticSurd::new(p, d, q)?)) }
    })
}

/// Surd with the given periodic expansion, e.g. `"[(1)]"`.
///
/// # Safety
/// `cf` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cfrac_periodic_to_surd(cf: *const c_char, out: *mut *mut CfracSurd) -> CfracStatus {
    guard(|| match parse_cf(unsafe { text(cf, "continued fraction") }?).map_err(Error::from)? {
        ContinuedFraction::Periodic(p) => unsafe { put_box(out, CfracSurd(p.to_surd())) },
        ContinuedFraction::Finite(_) => Err(fail(
            CfracStatus::InvalidArgument,
            "expected a periodic continued fraction",
        )),
    })
}

/// # Safety
/// `s` must be null or a surd from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn cfrac_surd_free(s: *mut CfracSurd) {
    if !s.is_null() {
        // SAFETY: produced by Box::into_raw in put_box.
        drop(unsafe { Box::from_raw(s) });
    }
}

/// # Safety
/// `s` must be a live surd handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cfrac_surd_conjugate(s: *const CfracSurd, out: *mut *mut CfracSurd) -> CfracStatus {
    guard(|| {
        let s = unsafe { handle(s) }?;
        unsafe { put_box(out, CfracSurd(s.0.conjugate())) }
    })
}

/// Periodic expansion of the surd, giving up after `max_terms` partial
/// quotients with `BudgetExceeded`.
///
/// # Safety
/// `s` must be a live surd handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cfrac_surd_expand(s: *const CfracSurd, max_terms: size_t, out: *mut *mut c_char) -> CfracStatus {
    guard(|| {
        let s = unsafe { handle(s) }?;
        unsafe { put_string(out, s.0.expand(max_terms)?.to_string()) }
    })
}

/// Text such as `"(1+√5)/2"`.
///
/// # Safety
/// `s` must be a live surd handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cfrac_surd_to_string(s: *const CfracSurd, out: *mut *mut c_char) -> CfracStatus {
    guard(|| {
        let s = unsafe { handle(s) }?;
        unsafe { put_string(out, s.0.to_string()) }
    })
}

/// Correctly rounded decimal with `digits` fractional digits.
///
/// # Safety
/// `s` must be a live surd handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cfrac_surd_decimal(s: *const CfracSurd, digits: size_t, out: *mut *mut c_char) -> CfracStatus {
    guard(|| {
        let s = unsafe { handle(s) }?;
        unsafe { put_string(out, s.0.decimal(digits)) }
    })
}

/// Normalized `P`, `D`, `Q` as decimal strings.
///
/// # Safety
/// `s` must be a live surd handle; the three outputs must be valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn cfrac_surd_components(
    s: *const CfracSurd,
    p_out: *mut *mut c_char,
    d_out: *mut *mut c_char,
    q_out: *mut *mut c_char,
) -> CfracStatus {
    guard(|| {
        let s = unsafe { handle(s) }?;
        if p_out.is_null() || d_out.is_null() || q_out.is_null() {
            return Err(fail(CfracStatus::NullPointer, "output pointer is null"));
        }
        unsafe {
            put_string(p_out, s.0.p().to_string())?;
            put_string(d_out, s.0.d().to_string())?;
            put_string(q_out, s.0.q().to_string())
        }
    })
}

/// The first `count` convergents of `cf`. A finite fraction with fewer
/// terms fails with `InvalidArgument`; pass 0 to take every term of a
/// finite fraction.
///
/// # Safety
/// `cf` must be a NUL-terminated string; `out` must be valid for writes.
/// Release the result with [`cfrac_convergents_free`].
#[no_mangle]
pub unsafe extern "C" fn cfrac_convergents_new(
    cf: *const c_char,
    count: size_t,
    out: *mut *mut CfracConvergents,
) -> CfracStatus {
    guard(|| {
        let list = match parse_cf(unsafe { text(cf, "continued fraction") }?).map_err(Error::from)? {
            ContinuedFraction::Finite(f) => {
                let n = if count == 0 { f.len() } else { count };
                cfrac::convergents(f.coefficients(), n)?
            }
            ContinuedFraction::Periodic(p) => p.convergents().take(count).collect(),
        };
        unsafe { put_box(out, CfracConvergents(list)) }
    })
}

/// Number of convergents held, 0 for a null handle.
///
/// # Safety
/// `c` must be null or a live convergents handle.
#[no_mangle]
pub unsafe extern "C" fn cfrac_convergents_len(c: *const CfracConvergents) -> size_t {
    // SAFETY: caller contract.
    unsafe { c.as_ref() }.map_or(0, |c| c.0.len())
}

/// Numerator and denominator of convergent `index`.
///
/// # Safety
/// `c` must be a live convergents handle; both outputs must be valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn cfrac_convergents_get(
    c: *const CfracConvergents,
    index: size_t,
    p_out: *mut *mut c_char,
    q_out: *mut *mut c_char,
) -> CfracStatus {
    guard(|| {
        let c = unsafe { handle(c) }?;
        let conv = c.0.get(index).ok_or_else(|| {
            fail(CfracStatus::IndexOutOfRange, format!("index {index} out of range for {} convergents", c.0.len()))
        })?;
        if p_out.is_null() || q_out.is_null() {
            return Err(fail(CfracStatus::NullPointer, "output pointer is null"));
        }
        unsafe {
            put_string(p_out, conv.p.to_string())?;
            put_string(q_out, conv.q.to_string())
        }
    })
}

/// # Safety
/// `c` must be null or a convergents handle that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn cfrac_convergents_free(c: *mut CfracConvergents) {
    if !c.is_null() {
        // SAFETY: produced by Box::into_raw in put_box.
        drop(unsafe { Box::from_raw(c) });
    }
}

/// Smallest positive solution of `x^2 - n y^2 = ±1`; `sign_out` receives
/// the right-hand side.
///
/// # Safety
/// `n` must be a NUL-terminated string; all outputs must be valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn cfrac_pell_fundamental(
    n: *const c_char,
    x_out: *mut *mut c_char,
    y_out: *mut *mut c_char,
    sign_out: *mut c_int,
) -> CfracStatus {
    guard(|| {
        let n = integer(unsafe { text(n, "n") }?, "n")?;
        if x_out.is_null() || y_out.is_null() || sign_out.is_null() {
            return Err(fail(CfracStatus::NullPointer, "output pointer is null"));
        }
        let s = cfrac::solve_fundamental(n)?;
        unsafe {
            put_string(x_out, s.x.to_string())?;
            put_string(y_out, s.y.to_string())?;
            *sign_out = c_int::from(s.sign);
        }
        Ok(())
    })
}
