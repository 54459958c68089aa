//! C ABI over the core toolkit: opaque graph handles, integer error codes,
//! and a thread-local last-error message.
//!
//! Ownership rules: every `*mut GogGraph` returned through an out-parameter
//! must be released with `gog_graph_free`; every `char*` returned by a
//! `_text`/`_error` accessor must be released with `gog_string_free`.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gog_core::pullback::intersection_subgroup;
use gog_core::{GogError, LabeledGraph, Word};

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GogStatus {
    Ok = 0,
    NullArgument = 1,
    ParseError = 2,
    DomainError = 3,
    Panic = 4,
}

/// Opaque handle to a folded subgroup graph.
pub struct GogGraph {
    inner: LabeledGraph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(err: &GogError) -> GogStatus {
    set_error(err.to_string());
    match err {
        GogError::WordSyntax { .. } | GogError::InstanceParse { .. } => GogStatus::ParseError,
        _ => GogStatus::DomainError,
    }
}

fn guard<F: FnOnce() -> GogStatus>(f: F) -> GogStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic".into());
            GogStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Option<&'a str> {
    if s.is_null() {
        return None;
    }
    CStr::from_ptr(s).to_str().ok()
}

/// Returns the last error message for this thread, or NULL if none.
/// The caller owns the returned string (release with `gog_string_free`).
#[no_mangle]
pub extern "C" fn gog_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| match &*e.borrow() {
        Some(c) => c.clone().into_raw(),
        None => ptr::null_mut(),
    })
}

/// Releases a string returned by this library. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn gog_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the folded core graph of the subgroup generated by `n_words`
/// NUL-terminated words (lowercase generators, uppercase inverses) over
/// `rank` generators. On success writes a new handle to `out`.
#[no_mangle]
pub unsafe extern "C" fn gog_graph_from_words(
    rank: u32,
    words: *const *const c_char,
    n_words: usize,
    out: *mut *mut GogGraph,
) -> GogStatus {
    guard(|| {
        if out.is_null() || (words.is_null() && n_words > 0) {
            set_error("null argument".into());
            return GogStatus::NullArgument;
        }
        let mut ws = Vec::with_capacity(n_words);
        for i in 0..n_words {
            let Some(s) = read_str(*words.add(i)) else {
                set_error(format!("word {i} is null or not UTF-8"));
                return GogStatus::NullArgument;
            };
            match Word::parse(s) {
                Ok(w) => ws.push(w),
                Err(e) => return fail(&e),
            }
        }
        match LabeledGraph::from_words(&ws, rank) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(GogGraph { inner: g }));
                GogStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Releases a graph handle. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn gog_graph_free(g: *mut GogGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Ambient rank (number of generators of the free group).
#[no_mangle]
pub unsafe extern "C" fn gog_graph_ambient_rank(g: *const GogGraph) -> u32 {
    if g.is_null() {
        return 0;
    }
    (*g).inner.rank()
}

#[no_mangle]
pub unsafe extern "C" fn gog_graph_num_vertices(g: *const GogGraph) -> u64 {
    if g.is_null() {
        return 0;
    }
    (*g).inner.num_vertices() as u64
}

#[no_mangle]
pub unsafe extern "C" fn gog_graph_num_edges(g: *const GogGraph) -> u64 {
    if g.is_null() {
        return 0;
    }
    (*g).inner.num_edges() as u64
}

/// Euler characteristic (vertices minus edges).
#[no_mangle]
pub unsafe extern "C" fn gog_graph_euler(g: *const GogGraph) -> i64 {
    if g.is_null() {
        return 0;
    }
    (*g).inner.euler_characteristic()
}

/// Rank of the subgroup the graph represents (0 for the trivial subgroup).
#[no_mangle]
pub unsafe extern "C" fn gog_graph_subgroup_rank(g: *const GogGraph) -> i64 {
    if g.is_null() {
        return 0;
    }
    let inner = &(*g).inner;
    if inner.num_edges() == 0 {
        0
    } else {
        inner.first_betti()
    }
}

/// Membership test. Writes 1 to `out` if `word` lies in the subgroup,
/// 0 otherwise.
#[no_mangle]
pub unsafe extern "C" fn gog_graph_contains(
    g: *const GogGraph,
    word: *const c_char,
    out: *mut i32,
) -> GogStatus {
    guard(|| {
        if g.is_null() || out.is_null() {
            set_error("null argument".into());
            return GogStatus::NullArgument;
        }
        let Some(s) = read_str(word) else {
            set_error("word is null or not UTF-8".into());
            return GogStatus::NullArgument;
        };
        match Word::parse(s) {
            Ok(w) => {
                *out = (*g).inner.contains(&w) as i32;
                GogStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Intersection H₁ ∩ H₂ (the based fiber-product component).
#[no_mangle]
pub unsafe extern "C" fn gog_graph_intersect(
    g1: *const GogGraph,
    g2: *const GogGraph,
    out: *mut *mut GogGraph,
) -> GogStatus {
    guard(|| {
        if g1.is_null() || g2.is_null() || out.is_null() {
            set_error("null argument".into());
            return GogStatus::NullArgument;
        }
        match intersection_subgroup(&(*g1).inner, &(*g2).inner) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(GogGraph { inner: g }));
                GogStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Join ⟨H₁ ∪ H₂⟩.
#[no_mangle]
pub unsafe extern "C" fn gog_graph_join(
    g1: *const GogGraph,
    g2: *const GogGraph,
    out: *mut *mut GogGraph,
) -> GogStatus {
    guard(|| {
        if g1.is_null() || g2.is_null() || out.is_null() {
            set_error("null argument".into());
            return GogStatus::NullArgument;
        }
        match (*g1).inner.join(&(*g2).inner) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(GogGraph { inner: g }));
                GogStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Line-based text serialization of the graph. The caller owns the string.
#[no_mangle]
pub unsafe extern "C" fn gog_graph_to_text(
    g: *const GogGraph,
    out: *mut *mut c_char,
) -> GogStatus {
    guard(|| {
        if g.is_null() || out.is_null() {
            set_error("null argument".into());
            return GogStatus::NullArgument;
        }
        let text = (*g).inner.to_text();
        match CString::new(text) {
            Ok(c) => {
                *out = c.into_raw();
                GogStatus::Ok
            }
            Err(_) => {
                set_error("serialization contained an interior NUL".into());
                GogStatus::DomainError
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    fn make(words: &[&str], rank: u32) -> *mut GogGraph {
        let cs: Vec<CString> = words.iter().map(|w| CString::new(*w).unwrap()).collect();
        let ptrs: Vec<*const c_char> = cs.iter().map(|c| c.as_ptr()).collect();
        let mut out = ptr::null_mut();
        let status =
            unsafe { gog_graph_from_words(rank, ptrs.as_ptr(), ptrs.len(), &mut out) };
        assert_eq!(status, GogStatus::Ok);
        out
    }

    #[test]
    fn roundtrip_and_membership() {
        let g = make(&["ab", "ba"], 2);
        unsafe {
            assert_eq!(gog_graph_ambient_rank(g), 2);
            assert_eq!(gog_graph_subgroup_rank(g), 2);
            let word = CString::new("abba").unwrap();
            let mut hit = -1;
            assert_eq!(gog_graph_contains(g, word.as_ptr(), &mut hit), GogStatus::Ok);
            assert_eq!(hit, 1);
            let word = CString::new("a").unwrap();
            assert_eq!(gog_graph_contains(g, word.as_ptr(), &mut hit), GogStatus::Ok);
            assert_eq!(hit, 0);
            gog_graph_free(g);
        }
    }

    #[test]
    fn intersect_and_join() {
        let a = make(&["a"], 2);
        let b = make(&["b"], 2);
        unsafe {
            let mut j = ptr::null_mut();
            assert_eq!(gog_graph_join(a, b, &mut j), GogStatus::Ok);
            assert_eq!(gog_graph_subgroup_rank(j), 2);
            let mut m = ptr::null_mut();
            assert_eq!(gog_graph_intersect(a, b, &mut m), GogStatus::Ok);
            assert_eq!(gog_graph_subgroup_rank(m), 0);
            gog_graph_free(j);
            gog_graph_free(m);
            gog_graph_free(a);
            gog_graph_free(b);
        }
    }

    #[test]
    fn errors_set_message() {
        unsafe {
            let bad = CString::new("a^2").unwrap();
            let ptrs = [bad.as_ptr()];
            let mut out = ptr::null_mut();
            let status = gog_graph_from_words(2, ptrs.as_ptr(), 1, &mut out);
            assert_eq!(status, GogStatus::ParseError);
            let msg = gog_last_error();
            assert!(!msg.is_null());
            let text = CStr::from_ptr(msg).to_str().unwrap().to_string();
            assert!(text.contains("invalid character"), "{text}");
            gog_string_free(msg);
        }
    }

    #[test]
    fn null_handling() {
        unsafe {
            assert_eq!(gog_graph_subgroup_rank(ptr::null()), 0);
            let mut out = ptr::null_mut();
            assert_eq!(
                gog_graph_intersect(ptr::null(), ptr::null(), &mut out),
                GogStatus::NullArgument
            );
            gog_graph_free(ptr::null_mut());
            gog_string_free(ptr::null_mut());
        }
    }
}
