//! C ABI over `spex-core`.
//!
//! Graphs cross the boundary as opaque `SpexGraph` handles owned by the
//! caller and released with [`spex_graph_free`]. Every fallible function
//! returns a [`SpexStatus`]; on failure [`spex_last_error`] describes the
//! problem for the calling thread. Strings returned by the library are
//! released with [`spex_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use spex_core::certificates::feng_yu_bound;
use spex_core::constructions::{g_extremal, h_extremal};
use spex_core::spectral::q_radius;
use spex_core::structure::{circumference, clique_number, girth};
use spex_core::{canonical_graph6, parse_graph6, to_graph6, Error, Graph};

/// Opaque graph handle.
pub struct SpexGraph(Graph);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpexStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidEdge = 3,
    Format = 4,
    InvalidParameter = 5,
    InvalidInput = 6,
    Convergence = 7,
    BufferTooSmall = 8,
    Panic = 9,
    Other = 10,
}

impl From<&Error> for SpexStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::InvalidEdge(_) => SpexStatus::InvalidEdge,
            Error::Format(_) => SpexStatus::Format,
            Error::InvalidParameter(_) => SpexStatus::InvalidParameter,
            Error::InvalidInput(_) => SpexStatus::InvalidInput,
            Error::Convergence { .. } => SpexStatus::Convergence,
            _ => SpexStatus::Other,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: SpexStatus, msg: impl Into<String>) -> SpexStatus {
    set_error(msg);
    status
}

/// Runs `f`, mapping core errors and panics to status codes.
fn guard<F: FnOnce() -> Result<(), SpexStatus>>(f: F) -> SpexStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SpexStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(SpexStatus::Panic, "internal panic"),
    }
}

fn core<T>(r: spex_core::Result<T>) -> Result<T, SpexStatus> {
    r.map_err(|e| fail(SpexStatus::from(&e), e.to_string()))
}

unsafe fn graph_ref<'a>(g: *const SpexGraph) -> Result<&'a Graph, SpexStatus> {
    g.as_ref().map(|h| &h.0).ok_or_else(|| fail(SpexStatus::NullPointer, "graph handle is null"))
}

unsafe fn out_ref<'a, T>(p: *mut T) -> Result<&'a mut T, SpexStatus> {
    p.as_mut().ok_or_else(|| fail(SpexStatus::NullPointer, "output pointer is null"))
}

fn new_handle(g: Graph) -> *mut SpexGraph {
    Box::into_raw(Box::new(SpexGraph(g)))
}

fn new_string(s: String) -> *mut c_char {
    CString::new(s).expect("graph6 has no nul bytes").into_raw()
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn spex_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a graph6 string.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn spex_graph_from_graph6(text: *const c_char, out: *mut *mut SpexGraph) -> SpexStatus {
    guard(|| {
        let out = out_ref(out)?;
        if text.is_null() {
            return Err(fail(SpexStatus::NullPointer, "graph6 text is null"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| fail(SpexStatus::InvalidUtf8, e.to_string()))?;
        *out = new_handle(core(parse_graph6(text))?);
        Ok(())
    })
}

/// Builds a graph on `n` vertices from `m` edges stored as `2m` endpoint
/// ids `[u0, v0, u1, v1, ...]`.
///
/// # Safety
/// `endpoints` must point to `2 * m` readable values (it may be null when
/// `m == 0`) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spex_graph_from_edges(
    n: usize,
    endpoints: *const usize,
    m: usize,
    out: *mut *mut SpexGraph,
) -> SpexStatus {
    guard(|| {
        let out = out_ref(out)?;
        let flat: &[usize] = if m == 0 {
            &[]
        } else if endpoints.is_null() {
            return Err(fail(SpexStatus::NullPointer, "edge array is null"));
        } else {
            std::slice::from_raw_parts(endpoints, 2 * m)
        };
        let edges: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        *out = new_handle(core(Graph::from_edges(n, &edges))?);
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn spex_graph_free(g: *mut SpexGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn spex_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Vertex count.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn spex_graph_order(g: *const SpexGraph, out: *mut usize) -> SpexStatus {
    guard(|| {
        *out_ref(out)? = graph_ref(g)?.n();
        Ok(())
    })
}

/// Edge count.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn spex_graph_size(g: *const SpexGraph, out: *mut usize) -> SpexStatus {
    guard(|| {
        *out_ref(out)? = graph_ref(g)?.m();
        Ok(())
    })
}

/// graph6 encoding in the handle's labeling; free with [`spex_string_free`].
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn spex_graph_to_graph6(g: *const SpexGraph, out: *mut *mut c_char) -> SpexStatus {
    guard(|| {
        let g = graph_ref(g)?;
        *out_ref(out)? = new_string(to_graph6(g));
        Ok(())
    })
}

/// Canonical graph6: equal for two graphs exactly when they are
/// isomorphic. Free with [`spex_string_free`].
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn spex_graph_canonical_graph6(g: *const SpexGraph, out: *mut *mut c_char) -> SpexStatus {
    guard(|| {
        let g = graph_ref(g)?;
        *out_ref(out)? = new_string(canonical_graph6(g));
        Ok(())
    })
}

/// Largest signless Laplacian eigenvalue, solved to residual `tol`.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn spex_q_radius(g: *const SpexGraph, tol: f64, out: *mut f64) -> SpexStatus {
    guard(|| {
        let g = graph_ref(g)?;
        *out_ref(out)? = core(q_radius(g, tol))?.q;
        Ok(())
    })
}

/// Writes the unit Perron vector into `buf`, which must hold at least
/// the vertex count; `q` receives the eigenvalue when non-null.
///
/// # Safety
/// `g` must be a live handle, `buf` must point to `len` writable doubles
/// and `q` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn spex_perron(g: *const SpexGraph, tol: f64, buf: *mut f64, len: usize, q: *mut f64) -> SpexStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if buf.is_null() {
            return Err(fail(SpexStatus::NullPointer, "output buffer is null"));
        }
        if len < g.n() {
            return Err(fail(SpexStatus::BufferTooSmall, format!("buffer holds {len}, need {}", g.n())));
        }
        let r = core(q_radius(g, tol))?;
        std::slice::from_raw_parts_mut(buf, g.n()).copy_from_slice(&r.perron);
        if let Some(q) = q.as_mut() {
            *q = r.q;
        }
        Ok(())
    })
}

/// Shortest cycle length, or 0 for a forest.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn spex_girth(g: *const SpexGraph, out: *mut usize) -> SpexStatus {
    guard(|| {
        *out_ref(out)? = girth(graph_ref(g)?).unwrap_or(0);
        Ok(())
    })
}

/// Longest cycle length, or 0 for a forest.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn spex_circumference(g: *const SpexGraph, out: *mut usize) -> SpexStatus {
    guard(|| {
        *out_ref(out)? = circumference(graph_ref(g)?).unwrap_or(0);
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn spex_clique_number(g: *const SpexGraph, out: *mut usize) -> SpexStatus {
    guard(|| {
        *out_ref(out)? = clique_number(graph_ref(g)?);
        Ok(())
    })
}

/// `max_u (d(u) + m(u))` over a connected graph, with `m(u)` the mean
/// neighbor degree. `tight` (if non-null) is set when the bound equals q.
///
/// # Safety
/// `g` must be a live handle, `out` writable and `tight` null or writable.
#[no_mangle]
pub unsafe extern "C" fn spex_average_degree_bound(g: *const SpexGraph, out: *mut f64, tight: *mut bool) -> SpexStatus {
    guard(|| {
        let fy = core(feng_yu_bound(graph_ref(g)?))?;
        *out_ref(out)? = fy.bound;
        if let Some(t) = tight.as_mut() {
            *t = fy.is_tight();
        }
        Ok(())
    })
}

/// The cycle C_g with m - g pendant edges at one vertex.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spex_girth_extremal(m: usize, g: usize, out: *mut *mut SpexGraph) -> SpexStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = new_handle(core(g_extremal(m, g))?);
        Ok(())
    })
}

/// The cycle C_c with one vertex joined to all others on the cycle and
/// m - 2c + 3 pendant edges there.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spex_circumference_extremal(m: usize, c: usize, out: *mut *mut SpexGraph) -> SpexStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = new_handle(core(h_extremal(m, c))?);
        Ok(())
    })
}
