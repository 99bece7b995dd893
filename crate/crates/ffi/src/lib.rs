//! C ABI over `contact_bgg`.
//!
//! Objects cross the boundary as opaque handles created by `cbgg_*_new` and
//! released by the matching `cbgg_*_free`. Fallible calls return a
//! [`CbggStatus`]; the message for the most recent failure on the calling
//! thread is available from [`cbgg_last_error`].
//!
//! Weights are passed as parallel arrays of numerators and denominators; a
//! NULL denominator array means every denominator is 1. Dynkin nodes are
//! 1-based.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use contact_bgg::bgg::{build_bgg, build_relative_bgg, BggDiagram};
use contact_bgg::descent::{descended_cohomology, CohomologyProfile};
use contact_bgg::lattice::{LieType, RootSystem, Weight};
use contact_bgg::parabolic::{hasse_diagram, relative_hasse, HasseDiagram, Parabolic};
use contact_bgg::repinfo::{weyl_dim, GroupTag};
use contact_bgg::{output, Error, Rational};
use num_bigint::BigInt;

/// Status codes returned by fallible calls.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CbggStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Resource = 3,
    BufferTooSmall = 4,
    Panic = 5,
}

/// A root system of type A, B, C or D.
pub struct CbggRootSystem {
    inner: Arc<RootSystem>,
}

/// A parabolic subalgebra given by crossed nodes.
pub struct CbggParabolic {
    inner: Parabolic,
}

/// A (possibly relative) Hasse diagram.
pub struct CbggHasse {
    algebra: String,
    crossed: Vec<usize>,
    inner: HasseDiagram,
}

/// An absolute or relative BGG diagram.
pub struct CbggBgg {
    inner: BggDiagram,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: CbggStatus, msg: impl Into<String>) -> CbggStatus {
    set_error(msg);
    status
}

fn from_core(e: Error) -> CbggStatus {
    let status = match e {
        Error::Input(_) => CbggStatus::InvalidInput,
        Error::Resource(_) => CbggStatus::Resource,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> CbggStatus) -> CbggStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(CbggStatus::Panic, "internal panic"),
    }
}

fn into_handle<T>(value: T, out: *mut *mut T) -> CbggStatus {
    // SAFETY: callers check `out` for NULL before getting here.
    unsafe { *out = Box::into_raw(Box::new(value)) };
    CbggStatus::Ok
}

unsafe fn str_arg<'a>(s: *const c_char, what: &str) -> Result<&'a str, CbggStatus> {
    if s.is_null() {
        return Err(fail(CbggStatus::NullPointer, format!("{what} is NULL")));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(CbggStatus::InvalidInput, format!("{what} is not UTF-8")))
}

unsafe fn slice_arg<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], CbggStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(fail(CbggStatus::NullPointer, format!("{what} is NULL")));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn weight_arg(num: *const i64, den: *const i64, len: usize) -> Result<Weight, CbggStatus> {
    let num = slice_arg(num, len, "weight numerators")?;
    let den = if den.is_null() { None } else { Some(slice_arg(den, len, "weight denominators")?) };
    let mut coeffs = Vec::with_capacity(len);
    for (i, &n) in num.iter().enumerate() {
        let d = den.map_or(1, |d| d[i]);
        if d == 0 {
            return Err(fail(CbggStatus::InvalidInput, "zero denominator in weight"));
        }
        coeffs.push(Rational::new(BigInt::from(n), BigInt::from(d)));
    }
    Ok(Weight::new(coeffs))
}

unsafe fn nodes_arg(nodes: *const u32, len: usize) -> Result<Vec<usize>, CbggStatus> {
    Ok(slice_arg(nodes, len, "crossed nodes")?.iter().map(|&i| i as usize).collect())
}

unsafe fn write_out(values: &[u64], buf: *mut u64, cap: usize, len_out: *mut usize) -> CbggStatus {
    if len_out.is_null() {
        return fail(CbggStatus::NullPointer, "length output is NULL");
    }
    *len_out = values.len();
    if values.len() > cap {
        return fail(CbggStatus::BufferTooSmall, format!("{} entries needed", values.len()));
    }
    if !values.is_empty() {
        if buf.is_null() {
            return fail(CbggStatus::NullPointer, "output buffer is NULL");
        }
        ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
    }
    CbggStatus::Ok
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

macro_rules! check_null {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            return fail(CbggStatus::NullPointer, concat!(stringify!($p), " is NULL"));
        })+
    };
}

/// Message describing the last failure on this thread, or NULL if none.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cbgg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Frees a string returned by one of the `*_to_json` functions.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn cbgg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the root system named by `algebra`, e.g. "C3".
///
/// # Safety
/// `algebra` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cbgg_root_system_new(algebra: *const c_char, out: *mut *mut CbggRootSystem) -> CbggStatus {
    guard(|| {
        check_null!(out);
        let name = match str_arg(algebra, "algebra") {
            Ok(s) => s,
            Err(s) => return s,
        };
        match name.parse::<LieType>() {
            Ok(t) => into_handle(
                CbggRootSystem {
                    inner: Arc::new(RootSystem::new(t)),
                },
                out,
            ),
            Err(e) => from_core(e),
        }
    })
}

/// # Safety
/// `rs` must be NULL or a handle from [`cbgg_root_system_new`].
#[no_mangle]
pub unsafe extern "C" fn cbgg_root_system_free(rs: *mut CbggRootSystem) {
    if !rs.is_null() {
        drop(Box::from_raw(rs));
    }
}

/// Rank of the root system, or 0 for NULL.
///
/// # Safety
/// `rs` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cbgg_root_system_rank(rs: *const CbggRootSystem) -> usize {
    rs.as_ref().map_or(0, |rs| rs.inner.rank())
}

/// Number of positive roots, or 0 for NULL.
///
/// # Safety
/// `rs` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cbgg_root_system_positive_root_count(rs: *const CbggRootSystem) -> usize {
    rs.as_ref().map_or(0, |rs| rs.inner.positive_roots().len())
}

/// Dimension of the irreducible representation with highest weight given in
/// fundamental-weight coordinates.
///
/// # Safety
/// `rs` must be a live handle, `num` (and `den` unless NULL) must hold `len`
/// entries, and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cbgg_weyl_dim(
    rs: *const CbggRootSystem,
    num: *const i64,
    den: *const i64,
    len: usize,
    out: *mut u64,
) -> CbggStatus {
    guard(|| {
        check_null!(rs, out);
        let w = match weight_arg(num, den, len) {
            Ok(w) => w,
            Err(s) => return s,
        };
        match weyl_dim(&(*rs).inner, &w) {
            Ok(d) => {
                *out = d;
                CbggStatus::Ok
            }
            Err(e) => from_core(e),
        }
    })
}

/// Builds the parabolic with the given 1-based crossed nodes. The root system
/// handle may be freed afterwards.
///
/// # Safety
/// `rs` must be a live handle, `crossed` must hold `len` entries and `out`
/// must be valid.
#[no_mangle]
pub unsafe extern "C" fn cbgg_parabolic_new(
    rs: *const CbggRootSystem,
    crossed: *const u32,
    len: usize,
    out: *mut *mut CbggParabolic,
) -> CbggStatus {
    guard(|| {
        check_null!(rs, out);
        let nodes = match nodes_arg(crossed, len) {
            Ok(n) => n,
            Err(s) => return s,
        };
        match Parabolic::new((*rs).inner.clone(), &nodes) {
            Ok(p) => into_handle(CbggParabolic { inner: p }, out),
            Err(e) => from_core(e),
        }
    })
}

/// # Safety
/// `p` must be NULL or a handle from [`cbgg_parabolic_new`].
#[no_mangle]
pub unsafe extern "C" fn cbgg_parabolic_free(p: *mut CbggParabolic) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Whether the parabolic defines a contact grading.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cbgg_parabolic_is_contact(p: *const CbggParabolic) -> bool {
    p.as_ref().is_some_and(|p| p.inner.is_contact_grading())
}

fn crossed_of(p: &Parabolic) -> Vec<usize> {
    p.crossed().iter().copied().collect()
}

/// Hasse diagram of `p`.
///
/// # Safety
/// `p` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn cbgg_hasse_new(p: *const CbggParabolic, out: *mut *mut CbggHasse) -> CbggStatus {
    guard(|| {
        check_null!(p, out);
        let p = &(*p).inner;
        into_handle(
            CbggHasse {
                algebra: p.root_system().lie_type().to_string(),
                crossed: crossed_of(p),
                inner: hasse_diagram(p),
            },
            out,
        )
    })
}

/// Relative Hasse diagram for `q` contained in `p` (crossed nodes of `p` a
/// subset of those of `q`).
///
/// # Safety
/// `p` and `q` must be live handles and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn cbgg_relative_hasse_new(
    p: *const CbggParabolic,
    q: *const CbggParabolic,
    out: *mut *mut CbggHasse,
) -> CbggStatus {
    guard(|| {
        check_null!(p, q, out);
        let (p, q) = (&(*p).inner, &(*q).inner);
        match relative_hasse(p, q) {
            Ok(h) => into_handle(
                CbggHasse {
                    algebra: q.root_system().lie_type().to_string(),
                    crossed: crossed_of(q),
                    inner: h,
                },
                out,
            ),
            Err(e) => from_core(e),
        }
    })
}

/// # Safety
/// `h` must be NULL or a Hasse handle.
#[no_mangle]
pub unsafe extern "C" fn cbgg_hasse_free(h: *mut CbggHasse) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Number of elements, or 0 for NULL.
///
/// # Safety
/// `h` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cbgg_hasse_len(h: *const CbggHasse) -> usize {
    h.as_ref().map_or(0, |h| h.inner.len())
}

/// Number of cover edges, or 0 for NULL.
///
/// # Safety
/// `h` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cbgg_hasse_edge_count(h: *const CbggHasse) -> usize {
    h.as_ref().map_or(0, |h| h.inner.edges().len())
}

/// Writes the number of elements of each length into `buf`. `*len_out`
/// always receives the required length; if it exceeds `cap` nothing is
/// written and `BufferTooSmall` is returned.
///
/// # Safety
/// `h` must be a live handle, `buf` must have room for `cap` entries and
/// `len_out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cbgg_hasse_length_counts(
    h: *const CbggHasse,
    buf: *mut u64,
    cap: usize,
    len_out: *mut usize,
) -> CbggStatus {
    guard(|| {
        check_null!(h);
        let counts: Vec<u64> = (*h).inner.length_counts().into_iter().map(|c| c as u64).collect();
        write_out(&counts, buf, cap, len_out)
    })
}

/// JSON document for the diagram; free with [`cbgg_string_free`]. NULL for a
/// NULL handle.
///
/// # Safety
/// `h` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cbgg_hasse_to_json(h: *const CbggHasse) -> *mut c_char {
    match h.as_ref() {
        Some(h) => into_c_string(output::emit_json(&output::hasse_json(&h.algebra, &h.crossed, &h.inner))),
        None => ptr::null_mut(),
    }
}

/// Builds the BGG diagram of `p` with highest weight `num/den`. `group` names
/// the center character to check ("adjoint-C", "adjoint-A-even",
/// "su-center:m") or is NULL to skip the check.
///
/// # Safety
/// `p` must be a live handle, the weight arrays must hold `len` entries,
/// `group` must be NULL or NUL-terminated, and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cbgg_bgg_new(
    p: *const CbggParabolic,
    num: *const i64,
    den: *const i64,
    len: usize,
    group: *const c_char,
    out: *mut *mut CbggBgg,
) -> CbggStatus {
    guard(|| {
        check_null!(p, out);
        let w = match weight_arg(num, den, len) {
            Ok(w) => w,
            Err(s) => return s,
        };
        let group = if group.is_null() {
            None
        } else {
            match str_arg(group, "group").map(str::parse::<GroupTag>) {
                Ok(Ok(g)) => Some(g),
                Ok(Err(e)) => return from_core(e),
                Err(s) => return s,
            }
        };
        match build_bgg(&(*p).inner, &w, group) {
            Ok(d) => into_handle(CbggBgg { inner: d }, out),
            Err(e) => from_core(e),
        }
    })
}

/// Builds the relative BGG diagram for `q` contained in `p`.
///
/// # Safety
/// As for [`cbgg_bgg_new`], with `q` a live handle.
#[no_mangle]
pub unsafe extern "C" fn cbgg_relative_bgg_new(
    p: *const CbggParabolic,
    q: *const CbggParabolic,
    num: *const i64,
    den: *const i64,
    len: usize,
    out: *mut *mut CbggBgg,
) -> CbggStatus {
    guard(|| {
        check_null!(p, q, out);
        let w = match weight_arg(num, den, len) {
            Ok(w) => w,
            Err(s) => return s,
        };
        match build_relative_bgg(&(*p).inner, &(*q).inner, &w) {
            Ok(d) => into_handle(CbggBgg { inner: d }, out),
            Err(e) => from_core(e),
        }
    })
}

/// # Safety
/// `d` must be NULL or a BGG handle.
#[no_mangle]
pub unsafe extern "C" fn cbgg_bgg_free(d: *mut CbggBgg) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Number of nodes, or 0 for NULL.
///
/// # Safety
/// `d` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cbgg_bgg_node_count(d: *const CbggBgg) -> usize {
    d.as_ref().map_or(0, |d| d.inner.nodes.len())
}

/// Number of edges, or 0 for NULL.
///
/// # Safety
/// `d` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cbgg_bgg_edge_count(d: *const CbggBgg) -> usize {
    d.as_ref().map_or(0, |d| d.inner.edges.len())
}

/// Degree and dimension of node `i`.
///
/// # Safety
/// `d` must be a live handle; `degree` and `dim` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cbgg_bgg_node(d: *const CbggBgg, i: usize, degree: *mut usize, dim: *mut u64) -> CbggStatus {
    guard(|| {
        check_null!(d, degree, dim);
        let d = &*d;
        match d.inner.nodes.get(i) {
            Some(n) => {
                *degree = n.degree;
                *dim = n.dim;
                CbggStatus::Ok
            }
            None => fail(CbggStatus::InvalidInput, format!("node {i} out of range")),
        }
    })
}

/// Endpoints and weighted order of edge `i`.
///
/// # Safety
/// `d` must be a live handle; the output pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cbgg_bgg_edge(
    d: *const CbggBgg,
    i: usize,
    from: *mut usize,
    to: *mut usize,
    order: *mut u64,
) -> CbggStatus {
    guard(|| {
        check_null!(d, from, to, order);
        let d = &*d;
        match d.inner.edges.get(i) {
            Some(e) => {
                *from = e.from;
                *to = e.to;
                *order = e.order;
                CbggStatus::Ok
            }
            None => fail(CbggStatus::InvalidInput, format!("edge {i} out of range")),
        }
    })
}

/// Integrability of the highest weight: 1 integrable, 0 not, -1 unchecked.
///
/// # Safety
/// `d` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cbgg_bgg_integrable(d: *const CbggBgg) -> i32 {
    match d.as_ref().and_then(|d| d.inner.integrability.as_ref()) {
        Some(c) => i32::from(c.integrable),
        None => -1,
    }
}

/// JSON document for the diagram; free with [`cbgg_string_free`].
///
/// # Safety
/// `d` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cbgg_bgg_to_json(d: *const CbggBgg) -> *mut c_char {
    match d.as_ref() {
        Some(d) => into_c_string(output::emit_json(&output::bgg_json(&d.inner))),
        None => ptr::null_mut(),
    }
}

/// Graded dimensions of the descended cohomology in degrees 0..=dim_m+1.
/// `lefschetz_ranks` may be NULL when `n_ranks` is 0. `*len_out` always
/// receives dim_m + 2 on valid input.
///
/// # Safety
/// The input arrays must hold the stated number of entries, `buf` must have
/// room for `cap` entries and `len_out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cbgg_descended_cohomology(
    dim_m: usize,
    betti: *const u64,
    n_betti: usize,
    lefschetz_ranks: *const u64,
    n_ranks: usize,
    w1: u64,
    buf: *mut u64,
    cap: usize,
    len_out: *mut usize,
) -> CbggStatus {
    guard(|| {
        let betti = match slice_arg(betti, n_betti, "betti") {
            Ok(b) => b.to_vec(),
            Err(s) => return s,
        };
        let ranks = match slice_arg(lefschetz_ranks, n_ranks, "lefschetz_ranks") {
            Ok(r) => r.to_vec(),
            Err(s) => return s,
        };
        match CohomologyProfile::new(dim_m, betti, ranks, w1) {
            Ok(profile) => write_out(&descended_cohomology(&profile).dims, buf, cap, len_out),
            Err(e) => from_core(e),
        }
    })
}
