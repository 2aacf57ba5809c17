//! C ABI over the coremp library.
//!
//! Conventions: every constructor returns a status code and writes an
//! opaque handle through an out-pointer; handles are released with the
//! matching `_free` function; strings returned through out-pointers are
//! NUL-terminated, owned by the caller, and released with
//! `coremp_string_free`. Collection-valued results are returned as JSON
//! documents in the same shapes the CLI emits.

use std::ffi::{c_char, CStr, CString};

use coremp::enumeration::{
    aa_decode, aa_encode, count_aa, count_ss, count_t0, rational_catalan, st_decode, st_encode,
    CyclicWord,
};
use coremp::finiteness::{
    decide_finite, enumerate_members, BoundUsed, Certificate, EnumMode, Reason,
};
use coremp::multicore::{is_core, weight};
use coremp::weyl::orbit_members;
use coremp::{Datum, DatumSet, Error, Multipartition, Partition};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CorempStatus {
    Ok = 0,
    ParseError = 1,
    InfiniteSet = 2,
    PreconditionViolated = 3,
    GuardExceeded = 4,
    NullPointer = 5,
    InvalidUtf8 = 6,
}

fn status_of(e: &Error) -> CorempStatus {
    match e {
        Error::Parse(_) => CorempStatus::ParseError,
        Error::InfiniteSet => CorempStatus::InfiniteSet,
        Error::GuardExceeded(_) => CorempStatus::GuardExceeded,
        _ => CorempStatus::PreconditionViolated,
    }
}

/// Opaque handle to a multipartition datum.
pub struct CorempDatum(Datum);

/// Opaque handle to a set of data.
pub struct CorempDatumSet(DatumSet);

/// Opaque handle to a multipartition.
pub struct CorempMultipartition(Multipartition);

/// Reason tags for finiteness verdicts.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CorempReason {
    GNot1 = 0,
    XFails = 1,
    AllZeroFinite = 2,
    PositiveModulusFinite = 3,
    SEqualsOne = 4,
    EmptyTInfinite = 5,
}

/// A finiteness verdict: `finite` is 0/1, `condition_x` is -1 when not
/// applicable and 0/1 otherwise.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct CorempVerdict {
    pub finite: u8,
    pub g_value: u64,
    pub condition_x: i8,
    pub reason: CorempReason,
}

unsafe fn text_in<'a>(ptr: *const c_char) -> Result<&'a str, CorempStatus> {
    if ptr.is_null() {
        return Err(CorempStatus::NullPointer);
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| CorempStatus::InvalidUtf8)
}

fn string_out(text: String, out: *mut *mut c_char) -> CorempStatus {
    if out.is_null() {
        return CorempStatus::NullPointer;
    }
    match CString::new(text) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            CorempStatus::Ok
        }
        Err(_) => CorempStatus::PreconditionViolated,
    }
}

/// The library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn coremp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Frees a string returned by this library.
///
/// # Safety
/// `ptr` must come from a coremp function and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn coremp_string_free(ptr: *mut c_char) {
    if !ptr.is_null() {
        drop(CString::from_raw(ptr));
    }
}

/// Parses a datum from its text form `s:c1,c2,...`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn coremp_datum_parse(
    text: *const c_char,
    out: *mut *mut CorempDatum,
) -> CorempStatus {
    let text = match text_in(text) {
        Ok(t) => t,
        Err(s) => return s,
    };
    if out.is_null() {
        return CorempStatus::NullPointer;
    }
    match text.parse::<Datum>() {
        Ok(d) => {
            *out = Box::into_raw(Box::new(CorempDatum(d)));
            CorempStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// # Safety
/// `ptr` must come from `coremp_datum_parse` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn coremp_datum_free(ptr: *mut CorempDatum) {
    if !ptr.is_null() {
        drop(Box::from_raw(ptr));
    }
}

/// Parses a datum set from its text form `s:c,...;s:c,...` (empty string
/// allowed).
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn coremp_datum_set_parse(
    text: *const c_char,
    out: *mut *mut CorempDatumSet,
) -> CorempStatus {
    let text = match text_in(text) {
        Ok(t) => t,
        Err(s) => return s,
    };
    if out.is_null() {
        return CorempStatus::NullPointer;
    }
    match text.parse::<DatumSet>() {
        Ok(ts) => {
            *out = Box::into_raw(Box::new(CorempDatumSet(ts)));
            CorempStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// # Safety
/// `ptr` must come from `coremp_datum_set_parse` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn coremp_datum_set_free(ptr: *mut CorempDatumSet) {
    if !ptr.is_null() {
        drop(Box::from_raw(ptr));
    }
}

/// Parses a multipartition from its text form `[2]|[4,1,1]|[1,1]`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn coremp_multipartition_parse(
    text: *const c_char,
    out: *mut *mut CorempMultipartition,
) -> CorempStatus {
    let text = match text_in(text) {
        Ok(t) => t,
        Err(s) => return s,
    };
    if out.is_null() {
        return CorempStatus::NullPointer;
    }
    match text.parse::<Multipartition>() {
        Ok(m) => {
            *out = Box::into_raw(Box::new(CorempMultipartition(m)));
            CorempStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// # Safety
/// `ptr` must come from `coremp_multipartition_parse` and not be used
/// afterwards.
#[no_mangle]
pub unsafe extern "C" fn coremp_multipartition_free(ptr: *mut CorempMultipartition) {
    if !ptr.is_null() {
        drop(Box::from_raw(ptr));
    }
}

/// Writes the canonical text form of a multipartition.
///
/// # Safety
/// `mp` must be a live handle; `out` receives an owned string.
#[no_mangle]
pub unsafe extern "C" fn coremp_multipartition_to_string(
    mp: *const CorempMultipartition,
    out: *mut *mut c_char,
) -> CorempStatus {
    if mp.is_null() {
        return CorempStatus::NullPointer;
    }
    string_out((*mp).0.to_string(), out)
}

/// Core membership and weight of a multipartition under one datum.
///
/// # Safety
/// `mp` and `datum` must be live handles; the out-pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn coremp_check(
    mp: *const CorempMultipartition,
    datum: *const CorempDatum,
    out_is_core: *mut u8,
    out_weight: *mut u64,
) -> CorempStatus {
    if mp.is_null() || datum.is_null() || out_is_core.is_null() || out_weight.is_null() {
        return CorempStatus::NullPointer;
    }
    let m = &(*mp).0;
    let d = &(*datum).0;
    match (is_core(m, d), weight(m, d)) {
        (Ok(core), Ok(w)) => {
            *out_is_core = core as u8;
            *out_weight = w;
            CorempStatus::Ok
        }
        (Err(e), _) | (_, Err(e)) => status_of(&e),
    }
}

/// Decides whether the intersection of core sets is finite.
///
/// # Safety
/// `set` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn coremp_decide_finite(
    set: *const CorempDatumSet,
    out: *mut CorempVerdict,
) -> CorempStatus {
    if set.is_null() || out.is_null() {
        return CorempStatus::NullPointer;
    }
    let v = decide_finite(&(*set).0);
    *out = CorempVerdict {
        finite: v.finite as u8,
        g_value: v.g_value,
        condition_x: v.condition_x.map_or(-1, |b| b as i8),
        reason: match v.reason {
            Reason::GNot1 => CorempReason::GNot1,
            Reason::XFails => CorempReason::XFails,
            Reason::AllZeroFinite => CorempReason::AllZeroFinite,
            Reason::PositiveModulusFinite => CorempReason::PositiveModulusFinite,
            Reason::SEqualsOne => CorempReason::SEqualsOne,
            Reason::EmptyTInfinite => CorempReason::EmptyTInfinite,
        },
    };
    CorempStatus::Ok
}

fn enumeration_json(ts: &DatumSet, complete: bool, max_size: u64) -> Result<String, Error> {
    let mode = if complete {
        EnumMode::Complete
    } else {
        EnumMode::Bounded
    };
    let result = enumerate_members(ts, max_size, mode)?;
    let members: Vec<String> = result.members.iter().map(|m| m.to_string()).collect();
    let (certificate, saturated) = match result.certificate {
        Certificate::Certified => ("certified", None),
        Certificate::SaturationHeuristic { saturated } => ("saturation-heuristic", Some(saturated)),
    };
    let bound = match &result.bound_used {
        BoundUsed::SizeCeiling(n) => serde_json::json!({"type": "size-ceiling", "value": n}),
        BoundUsed::ComponentBoxes(boxes) => serde_json::json!({
            "type": "component-boxes",
            "boxes": boxes
                .iter()
                .map(|b| serde_json::json!({"row": b.max_first_row, "column": b.max_first_column}))
                .collect::<Vec<_>>(),
        }),
    };
    Ok(serde_json::json!({
        "members": members,
        "count": members.len(),
        "certificate": certificate,
        "saturated": saturated,
        "bound": bound,
    })
    .to_string())
}

/// Enumerates members as a JSON document (same shape as the CLI). Pass
/// `complete = 0` for bounded enumeration up to `max_size`.
///
/// # Safety
/// `set` must be a live handle; `out_json` receives an owned string.
#[no_mangle]
pub unsafe extern "C" fn coremp_enumerate_json(
    set: *const CorempDatumSet,
    complete: u8,
    max_size: u64,
    out_json: *mut *mut c_char,
) -> CorempStatus {
    if set.is_null() {
        return CorempStatus::NullPointer;
    }
    match enumeration_json(&(*set).0, complete != 0, max_size) {
        Ok(json) => string_out(json, out_json),
        Err(e) => status_of(&e),
    }
}

/// Orbit members of the empty multipartition as a JSON document.
///
/// # Safety
/// `datum` must be a live handle; `out_json` receives an owned string.
#[no_mangle]
pub unsafe extern "C" fn coremp_orbit_json(
    datum: *const CorempDatum,
    max_size: u64,
    out_json: *mut *mut c_char,
) -> CorempStatus {
    if datum.is_null() {
        return CorempStatus::NullPointer;
    }
    let d = &(*datum).0;
    let members = if d.modulus() == 1 {
        Ok(vec![Multipartition::empty(d.level())])
    } else {
        orbit_members(d, max_size)
    };
    match members {
        Ok(members) => {
            let list: Vec<String> = members.iter().map(|m| m.to_string()).collect();
            let json = serde_json::json!({"members": list, "count": list.len()}).to_string();
            string_out(json, out_json)
        }
        Err(e) => status_of(&e),
    }
}

/// Closed-form counts. `family` is one of "ss" (params s,t,a,b), "t0"
/// (s,a,b), "aa" (s,t,a), "anderson" (s,t); the count is written as a
/// decimal string.
///
/// # Safety
/// `family` must be a valid NUL-terminated string, `params` must point to
/// `params_len` integers, and `out_decimal` receives an owned string.
#[no_mangle]
pub unsafe extern "C" fn coremp_count(
    family: *const c_char,
    params: *const u64,
    params_len: usize,
    out_decimal: *mut *mut c_char,
) -> CorempStatus {
    let family = match text_in(family) {
        Ok(t) => t,
        Err(s) => return s,
    };
    if params.is_null() && params_len > 0 {
        return CorempStatus::NullPointer;
    }
    let params = std::slice::from_raw_parts(params, params_len);
    let result = match (family, params) {
        ("ss", [s, t, a, b]) => count_ss(*s, *t, *a, *b),
        ("t0", [s, a, b]) => count_t0(*s, *a, *b),
        ("aa", [s, t, a]) => count_aa(*s, *t, *a),
        ("anderson", [s, t]) => rational_catalan(*s, *t),
        _ => {
            return CorempStatus::ParseError;
        }
    };
    match result {
        Ok(n) => string_out(n.to_string(), out_decimal),
        Err(e) => status_of(&e),
    }
}

/// Decodes a boundary word. For family "st" pass `a = 0` and receive the
/// (s,t)-core; for "aa" receive the bipartition `[..]|[..]`.
///
/// # Safety
/// `family` and `word` must be valid NUL-terminated strings; `out`
/// receives an owned string.
#[no_mangle]
pub unsafe extern "C" fn coremp_codec_decode(
    family: *const c_char,
    word: *const c_char,
    s: u64,
    t: u64,
    a: u64,
    out: *mut *mut c_char,
) -> CorempStatus {
    let family = match text_in(family) {
        Ok(f) => f,
        Err(st) => return st,
    };
    let word = match text_in(word) {
        Ok(w) => w,
        Err(st) => return st,
    };
    let word: CyclicWord = match word.parse() {
        Ok(w) => w,
        Err(e) => return status_of(&e),
    };
    let text = match family {
        "st" => st_decode(&word, s, t).map(|la| la.to_string()),
        "aa" => aa_decode(&word, s, t, a).map(|(la, mu)| format!("{la}|{mu}")),
        _ => return CorempStatus::ParseError,
    };
    match text {
        Ok(text) => string_out(text, out),
        Err(e) => status_of(&e),
    }
}

/// Encodes a partition (family "st", text form `[3,1]`) or bipartition
/// (family "aa", text form `[1]|[2]`) as its canonical boundary word.
///
/// # Safety
/// `family` and `object` must be valid NUL-terminated strings; `out`
/// receives an owned string.
#[no_mangle]
pub unsafe extern "C" fn coremp_codec_encode(
    family: *const c_char,
    object: *const c_char,
    s: u64,
    t: u64,
    a: u64,
    out: *mut *mut c_char,
) -> CorempStatus {
    let family = match text_in(family) {
        Ok(f) => f,
        Err(st) => return st,
    };
    let object = match text_in(object) {
        Ok(o) => o,
        Err(st) => return st,
    };
    let word = match family {
        "st" => object
            .parse::<Partition>()
            .and_then(|la| st_encode(&la, s, t)),
        "aa" => object.parse::<Multipartition>().and_then(|m| {
            if m.level() != 2 {
                return Err(Error::Precondition("aa encoding needs a bipartition".into()));
            }
            aa_encode(m.component(0), m.component(1), s, t, a)
        }),
        _ => return CorempStatus::ParseError,
    };
    match word {
        Ok(w) => string_out(w.to_string(), out),
        Err(e) => status_of(&e),
    }
}
