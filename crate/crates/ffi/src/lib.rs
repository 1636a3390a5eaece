//! C ABI over the culminating-paths library: opaque handles, integer status
//! codes, and caller-freed strings. Counts cross the boundary as decimal
//! strings since they outgrow every fixed-width integer; samples cross as
//! the same JSON records the CLI emits.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use culminating::counting::{count_culminating, count_culminating_height, count_positive};
use culminating::samplers::{Method, PositiveBackend, PreparedSampler, SampleError, WalkRng};
use culminating::word::{parse_word, StepSystem};

/// Status codes returned by every fallible entry point.
#[repr(i32)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CulmStatus {
    Ok = 0,
    RuntimeError = 1,
    InvalidArgument = 2,
    EmptyClass = 3,
    GiveUp = 4,
    ParseError = 5,
    NullPointer = 6,
}

/// Opaque handle to a validated step system.
pub struct CulmSystem {
    sys: StepSystem,
}

fn status_of_sample_error(e: &SampleError) -> CulmStatus {
    match e {
        SampleError::EmptyClass(_) => CulmStatus::EmptyClass,
        SampleError::GiveUp { .. } => CulmStatus::GiveUp,
        SampleError::InvalidConfig(_) => CulmStatus::InvalidArgument,
        _ => CulmStatus::RuntimeError,
    }
}

fn string_out(s: String, out: *mut *mut c_char) -> CulmStatus {
    match CString::new(s) {
        Ok(cs) => {
            unsafe { *out = cs.into_raw() };
            CulmStatus::Ok
        }
        Err(_) => CulmStatus::RuntimeError,
    }
}

/// Validates and allocates a step system handle; the caller owns it and must
/// release it with `culm_system_free`.
///
/// # Safety
/// `out` must point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn culm_system_new(a: u32, b: u32, out: *mut *mut CulmSystem) -> CulmStatus {
    if out.is_null() {
        return CulmStatus::NullPointer;
    }
    match StepSystem::new(a, b) {
        Ok(sys) => {
            *out = Box::into_raw(Box::new(CulmSystem { sys }));
            CulmStatus::Ok
        }
        Err(_) => CulmStatus::InvalidArgument,
    }
}

/// Releases a handle from `culm_system_new`. NULL is ignored.
///
/// # Safety
/// `sys` must be a pointer previously returned by `culm_system_new` that has
/// not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn culm_system_free(sys: *mut CulmSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

/// Frees a string returned by any `culm_*` call. NULL is ignored.
///
/// # Safety
/// `s` must originate from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn culm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of culminating words of length n, as a decimal string the caller
/// frees with `culm_string_free`.
///
/// # Safety
/// `sys` must be a live handle; `out` must point to writable storage for one
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn culm_count_culminating(
    sys: *const CulmSystem,
    n: u32,
    out: *mut *mut c_char,
) -> CulmStatus {
    if sys.is_null() || out.is_null() {
        return CulmStatus::NullPointer;
    }
    let sys = &(*sys).sys;
    match catch_unwind(AssertUnwindSafe(|| {
        count_culminating(sys, n as usize).to_string()
    })) {
        Ok(s) => string_out(s, out),
        Err(_) => CulmStatus::RuntimeError,
    }
}

/// Number of positive words of length n, as a decimal string.
///
/// # Safety
/// As for `culm_count_culminating`.
#[no_mangle]
pub unsafe extern "C" fn culm_count_positive(
    sys: *const CulmSystem,
    n: u32,
    out: *mut *mut c_char,
) -> CulmStatus {
    if sys.is_null() || out.is_null() {
        return CulmStatus::NullPointer;
    }
    let sys = &(*sys).sys;
    match catch_unwind(AssertUnwindSafe(|| {
        count_positive(sys, n as usize).to_string()
    })) {
        Ok(s) => string_out(s, out),
        Err(_) => CulmStatus::RuntimeError,
    }
}

/// Number of culminating words of length n with final (and maximal) height
/// exactly k, as a decimal string. Requires n >= 1 and k >= 1.
///
/// # Safety
/// As for `culm_count_culminating`.
#[no_mangle]
pub unsafe extern "C" fn culm_count_culminating_height(
    sys: *const CulmSystem,
    n: u32,
    k: u32,
    out: *mut *mut c_char,
) -> CulmStatus {
    if sys.is_null() || out.is_null() {
        return CulmStatus::NullPointer;
    }
    if n == 0 || k == 0 {
        return CulmStatus::InvalidArgument;
    }
    let sys = &(*sys).sys;
    match catch_unwind(AssertUnwindSafe(|| {
        count_culminating_height(sys, n as usize, k as usize).to_string()
    })) {
        Ok(s) => string_out(s, out),
        Err(_) => CulmStatus::RuntimeError,
    }
}

/// Final height of the walk encoded by a 'u'/'d' word.
///
/// # Safety
/// `sys` must be a live handle; `word` must be a NUL-terminated string;
/// `out` must point to writable storage for one i64.
#[no_mangle]
pub unsafe extern "C" fn culm_phi(
    sys: *const CulmSystem,
    word: *const c_char,
    out: *mut i64,
) -> CulmStatus {
    if sys.is_null() || word.is_null() || out.is_null() {
        return CulmStatus::NullPointer;
    }
    let text = match CStr::from_ptr(word).to_str() {
        Ok(t) => t,
        Err(_) => return CulmStatus::ParseError,
    };
    match parse_word(text) {
        Ok(w) => {
            *out = w.phi(&(*sys).sys);
            CulmStatus::Ok
        }
        Err(_) => CulmStatus::ParseError,
    }
}

/// Whether the word is culminating in this system.
///
/// # Safety
/// As for `culm_phi`, with `out` pointing to one bool.
#[no_mangle]
pub unsafe extern "C" fn culm_is_culminating(
    sys: *const CulmSystem,
    word: *const c_char,
    out: *mut bool,
) -> CulmStatus {
    if sys.is_null() || word.is_null() || out.is_null() {
        return CulmStatus::NullPointer;
    }
    let text = match CStr::from_ptr(word).to_str() {
        Ok(t) => t,
        Err(_) => return CulmStatus::ParseError,
    };
    match parse_word(text) {
        Ok(w) => {
            *out = w.is_culminating(&(*sys).sys);
            CulmStatus::Ok
        }
        Err(_) => CulmStatus::ParseError,
    }
}

/// Whether the word is positive in this system.
///
/// # Safety
/// As for `culm_is_culminating`.
#[no_mangle]
pub unsafe extern "C" fn culm_is_positive(
    sys: *const CulmSystem,
    word: *const c_char,
    out: *mut bool,
) -> CulmStatus {
    if sys.is_null() || word.is_null() || out.is_null() {
        return CulmStatus::NullPointer;
    }
    let text = match CStr::from_ptr(word).to_str() {
        Ok(t) => t,
        Err(_) => return CulmStatus::ParseError,
    };
    match parse_word(text) {
        Ok(w) => {
            *out = w.is_positive(&(*sys).sys);
            CulmStatus::Ok
        }
        Err(_) => CulmStatus::ParseError,
    }
}

fn method_from_name(name: &str) -> Option<Method> {
    Some(match name {
        "recursive" => Method::Recursive,
        "fixed-height" => Method::FixedHeight,
        "grammar" => Method::Grammar,
        "anticipated" => Method::Anticipated,
        "reject-positive" => Method::RejectPositive,
        "hybrid" => Method::Hybrid,
        "boltzmann" => Method::Boltzmann,
        _ => return None,
    })
}

/// Draws one uniform walk and returns the JSON record the CLI would emit.
/// `method` is one of "recursive", "fixed-height", "grammar", "anticipated",
/// "reject-positive", "hybrid", "boltzmann"; `k` is the target height for
/// "fixed-height" and ignored (pass 0) otherwise; `epsilon` is the Boltzmann
/// size tolerance and ignored otherwise. Identical arguments produce an
/// identical record.
///
/// # Safety
/// `sys` must be a live handle; `method` a NUL-terminated string; `out`
/// writable storage for one pointer. Free the result with
/// `culm_string_free`.
#[no_mangle]
pub unsafe extern "C" fn culm_sample_json(
    sys: *const CulmSystem,
    method: *const c_char,
    n: u32,
    k: u32,
    seed: u64,
    epsilon: f64,
    out: *mut *mut c_char,
) -> CulmStatus {
    if sys.is_null() || method.is_null() || out.is_null() {
        return CulmStatus::NullPointer;
    }
    let name = match CStr::from_ptr(method).to_str() {
        Ok(t) => t,
        Err(_) => return CulmStatus::InvalidArgument,
    };
    let Some(method) = method_from_name(name) else {
        return CulmStatus::InvalidArgument;
    };
    let sys = &(*sys).sys;
    let k = if k == 0 { None } else { Some(k as usize) };
    let outcome = catch_unwind(AssertUnwindSafe(|| -> Result<String, SampleError> {
        let prepared =
            PreparedSampler::prepare(method, sys, n as usize, k, epsilon, PositiveBackend::Auto)?;
        let mut rng = WalkRng::from_seed(seed);
        let record = prepared.sample(&mut rng)?;
        Ok(serde_json::to_string(&record).expect("records serialize"))
    }));
    match outcome {
        Ok(Ok(json)) => string_out(json, out),
        Ok(Err(e)) => status_of_sample_error(&e),
        Err(_) => CulmStatus::RuntimeError,
    }
}

/// Static description of a status code; never freed by the caller.
#[no_mangle]
pub extern "C" fn culm_status_message(status: CulmStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        CulmStatus::Ok => b"ok\0",
        CulmStatus::RuntimeError => b"runtime error\0",
        CulmStatus::InvalidArgument => b"invalid argument\0",
        CulmStatus::EmptyClass => b"empty class\0",
        CulmStatus::GiveUp => b"sampler gave up\0",
        CulmStatus::ParseError => b"word parse error\0",
        CulmStatus::NullPointer => b"null pointer\0",
    };
    msg.as_ptr().cast()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    unsafe fn take_string(p: *mut c_char) -> String {
        let s = CStr::from_ptr(p).to_str().unwrap().to_string();
        culm_string_free(p);
        s
    }

    #[test]
    fn system_lifecycle_and_counts() {
        unsafe {
            let mut sys: *mut CulmSystem = ptr::null_mut();
            assert_eq!(culm_system_new(1, 1, &mut sys), CulmStatus::Ok);
            let mut out: *mut c_char = ptr::null_mut();
            assert_eq!(culm_count_culminating(sys, 6, &mut out), CulmStatus::Ok);
            assert_eq!(take_string(out), "3");
            assert_eq!(culm_count_positive(sys, 6, &mut out), CulmStatus::Ok);
            assert_eq!(take_string(out), "10");
            assert_eq!(
                culm_count_culminating_height(sys, 5, 3, &mut out),
                CulmStatus::Ok
            );
            assert_eq!(take_string(out), "1");
            culm_system_free(sys);
        }
    }

    #[test]
    fn rejects_invalid_systems() {
        unsafe {
            let mut sys: *mut CulmSystem = ptr::null_mut();
            assert_eq!(culm_system_new(2, 4, &mut sys), CulmStatus::InvalidArgument);
            assert_eq!(culm_system_new(0, 1, &mut sys), CulmStatus::InvalidArgument);
            assert_eq!(
                culm_system_new(1, 1, ptr::null_mut()),
                CulmStatus::NullPointer
            );
        }
    }

    #[test]
    fn predicates_and_parse_errors() {
        unsafe {
            let mut sys: *mut CulmSystem = ptr::null_mut();
            culm_system_new(1, 1, &mut sys);
            let word = CString::new("uuduu").unwrap();
            let mut flag = false;
            assert_eq!(
                culm_is_culminating(sys, word.as_ptr(), &mut flag),
                CulmStatus::Ok
            );
            assert!(flag);
            let mut phi = 0i64;
            assert_eq!(culm_phi(sys, word.as_ptr(), &mut phi), CulmStatus::Ok);
            assert_eq!(phi, 3);
            let bad = CString::new("uxd").unwrap();
            assert_eq!(
                culm_is_culminating(sys, bad.as_ptr(), &mut flag),
                CulmStatus::ParseError
            );
            culm_system_free(sys);
        }
    }

    #[test]
    fn sampling_is_deterministic_and_classified() {
        unsafe {
            let mut sys: *mut CulmSystem = ptr::null_mut();
            culm_system_new(2, 1, &mut sys);
            let method = CString::new("hybrid").unwrap();
            let mut out: *mut c_char = ptr::null_mut();
            assert_eq!(
                culm_sample_json(sys, method.as_ptr(), 20, 0, 99, 0.1, &mut out),
                CulmStatus::Ok
            );
            let first = take_string(out);
            assert_eq!(
                culm_sample_json(sys, method.as_ptr(), 20, 0, 99, 0.1, &mut out),
                CulmStatus::Ok
            );
            let second = take_string(out);
            assert_eq!(first, second);
            assert!(first.contains("\"method\":\"hybrid\""));

            let fixed = CString::new("fixed-height").unwrap();
            assert_eq!(
                culm_sample_json(sys, fixed.as_ptr(), 10, 0, 1, 0.1, &mut out),
                CulmStatus::InvalidArgument
            );
            culm_system_free(sys);

            let mut impossible: *mut CulmSystem = ptr::null_mut();
            culm_system_new(5, 3, &mut impossible);
            assert_eq!(
                culm_sample_json(impossible, fixed.as_ptr(), 10, 6, 1, 0.1, &mut out),
                CulmStatus::EmptyClass
            );
            culm_system_free(impossible);
        }
    }

    #[test]
    fn status_messages_are_static() {
        unsafe {
            let msg = CStr::from_ptr(culm_status_message(CulmStatus::EmptyClass));
            assert_eq!(msg.to_str().unwrap(), "empty class");
        }
    }
}
