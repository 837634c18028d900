//! C ABI over the `adm2` library.
//!
//! Graphs and orderings cross the boundary as opaque handles owned by the
//! caller and released with the matching `*_free` function. Every fallible
//! call returns an [`Adm2Status`]; on failure a description is available from
//! [`adm2_last_error_message`] on the same thread. Vertices are the dense ids
//! `0..n`; for graphs loaded from a file these follow first appearance.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;
use std::time::{Duration, Instant};

use adm2::engine::{compute_until, decide_until};
use adm2::graph::{degeneracy, load_edge_list_file};
use adm2::{verify_ordering, Error, Graph, Ordering};

/// Result codes. `ADM2_STATUS_OK` is zero; every other value is an error.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Adm2Status {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    Io = 4,
    InvalidOrdering = 5,
    TimedOut = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

/// A simple undirected graph.
pub struct Adm2Graph(Graph);

/// A vertex ordering, read from left to right.
pub struct Adm2Ordering(Ordering);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("nul bytes replaced");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

struct Failure(Adm2Status, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse { .. } | Error::EmptyInput => Adm2Status::Parse,
            Error::Io(_) => Adm2Status::Io,
            Error::InvalidOrdering(_) => Adm2Status::InvalidOrdering,
            Error::TimedOut => Adm2Status::TimedOut,
            _ => Adm2Status::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(Adm2Status::NullPointer, format!("{what} is null"))
}

/// Runs `body`, converting errors and panics into a status.
fn guard<F>(body: F) -> Adm2Status
where
    F: FnOnce() -> Result<(), Failure>,
{
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => Adm2Status::Ok,
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_last_error(format!("internal error: {message}"));
            Adm2Status::Panic
        }
    }
}

unsafe fn graph_ref<'a>(graph: *const Adm2Graph) -> Result<&'a Graph, Failure> {
    graph.as_ref().map(|g| &g.0).ok_or_else(|| null("graph"))
}

fn deadline(timeout_ms: u64) -> Option<Instant> {
    (timeout_ms > 0).then(|| Instant::now() + Duration::from_millis(timeout_ms))
}

unsafe fn store_ordering(out: *mut *mut Adm2Ordering, ordering: Option<Ordering>) {
    if !out.is_null() {
        *out = ordering.map_or(ptr::null_mut(), |o| {
            Box::into_raw(Box::new(Adm2Ordering(o)))
        });
    }
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`u0, v0, u1, v1, ...`). Self-loops and repeated edges are
/// dropped.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or may be null
/// when `edge_count` is zero). `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn adm2_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut Adm2Graph,
) -> Adm2Status {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let flat: &[usize] = match edge_count {
            0 => &[],
            _ if edges.is_null() => return Err(null("edges")),
            _ => std::slice::from_raw_parts(edges, 2 * edge_count),
        };
        if let Some(&bad) = flat.iter().find(|&&v| v >= n) {
            return Err(Failure(
                Adm2Status::InvalidArgument,
                format!("vertex {bad} out of range for n = {n}"),
            ));
        }
        let (graph, _) = Graph::from_edges(n, flat.chunks_exact(2).map(|e| (e[0], e[1])));
        *out = Box::into_raw(Box::new(Adm2Graph(graph)));
        Ok(())
    })
}

/// Loads a graph from an edge-list file.
///
/// # Safety
/// `path` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn adm2_graph_load_edge_list(
    path: *const c_char,
    out: *mut *mut Adm2Graph,
) -> Adm2Status {
    guard(|| {
        if path.is_null() {
            return Err(null("path"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let path = CStr::from_ptr(path).to_str().map_err(|_| {
            Failure(
                Adm2Status::InvalidArgument,
                "path is not valid UTF-8".into(),
            )
        })?;
        let loaded = load_edge_list_file(Path::new(path))?;
        *out = Box::into_raw(Box::new(Adm2Graph(loaded.graph)));
        Ok(())
    })
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `graph` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn adm2_graph_free(graph: *mut Adm2Graph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Number of vertices, or 0 for a null graph.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn adm2_graph_vertex_count(graph: *const Adm2Graph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.n())
}

/// Number of edges, or 0 for a null graph.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn adm2_graph_edge_count(graph: *const Adm2Graph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.m())
}

/// Writes the degeneracy of `graph` to `out_value`.
///
/// # Safety
/// `graph` must be a live handle and `out_value` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn adm2_graph_degeneracy(
    graph: *const Adm2Graph,
    out_value: *mut usize,
) -> Adm2Status {
    guard(|| {
        let g = graph_ref(graph)?;
        if out_value.is_null() {
            return Err(null("out_value"));
        }
        *out_value = degeneracy(g).0;
        Ok(())
    })
}

/// Decides whether the 2-admissibility of `graph` is at most `p`.
///
/// `out_answer` receives the answer. When `out_witness` is non-null it
/// receives an ordering of 2-admissibility at most `p` on a yes answer and
/// null otherwise. A `timeout_ms` of 0 means no limit; on expiry the call
/// returns `ADM2_STATUS_TIMED_OUT`.
///
/// # Safety
/// `graph` must be a live handle, `out_answer` a valid pointer and
/// `out_witness` null or a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn adm2_decide(
    graph: *const Adm2Graph,
    p: usize,
    timeout_ms: u64,
    out_answer: *mut bool,
    out_witness: *mut *mut Adm2Ordering,
) -> Adm2Status {
    guard(|| {
        let g = graph_ref(graph)?;
        if out_answer.is_null() {
            return Err(null("out_answer"));
        }
        let result = decide_until(g, p, deadline(timeout_ms))?;
        *out_answer = result.answer();
        store_ordering(out_witness, result.witness);
        Ok(())
    })
}

/// Computes the exact 2-admissibility of `graph` into `out_value`, with an
/// optimal ordering in `out_witness` when that is non-null.
///
/// # Safety
/// As for [`adm2_decide`].
#[no_mangle]
pub unsafe extern "C" fn adm2_compute(
    graph: *const Adm2Graph,
    timeout_ms: u64,
    out_value: *mut usize,
    out_witness: *mut *mut Adm2Ordering,
) -> Adm2Status {
    guard(|| {
        let g = graph_ref(graph)?;
        if out_value.is_null() {
            return Err(null("out_value"));
        }
        let result = compute_until(g, deadline(timeout_ms))?;
        *out_value = result.value;
        store_ordering(out_witness, Some(result.witness));
        Ok(())
    })
}

/// Number of vertices in an ordering, or 0 for null.
///
/// # Safety
/// `ordering` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn adm2_ordering_len(ordering: *const Adm2Ordering) -> usize {
    ordering.as_ref().map_or(0, |o| o.0.len())
}

/// Copies the ordering into `buffer`, which holds `capacity` values.
///
/// # Safety
/// `ordering` must be a live handle and `buffer` must have room for
/// `capacity` values.
#[no_mangle]
pub unsafe extern "C" fn adm2_ordering_copy(
    ordering: *const Adm2Ordering,
    buffer: *mut usize,
    capacity: usize,
) -> Adm2Status {
    guard(|| {
        let o = ordering.as_ref().ok_or_else(|| null("ordering"))?;
        let sequence = o.0.sequence();
        if capacity < sequence.len() {
            return Err(Failure(
                Adm2Status::BufferTooSmall,
                format!(
                    "ordering has {} vertices, buffer holds {capacity}",
                    sequence.len()
                ),
            ));
        }
        if !sequence.is_empty() {
            if buffer.is_null() {
                return Err(null("buffer"));
            }
            ptr::copy_nonoverlapping(sequence.as_ptr(), buffer, sequence.len());
        }
        Ok(())
    })
}

/// Releases an ordering. Null is ignored.
///
/// # Safety
/// `ordering` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn adm2_ordering_free(ordering: *mut Adm2Ordering) {
    if !ordering.is_null() {
        drop(Box::from_raw(ordering));
    }
}

/// Writes the 2-admissibility of `graph` under the vertex sequence
/// `order[0..len]` to `out_value`. The sequence must list every vertex once.
///
/// # Safety
/// `graph` must be a live handle, `order` must point to `len` readable
/// values (or may be null when `len` is zero) and `out_value` must be valid.
#[no_mangle]
pub unsafe extern "C" fn adm2_verify_ordering(
    graph: *const Adm2Graph,
    order: *const usize,
    len: usize,
    out_value: *mut usize,
) -> Adm2Status {
    guard(|| {
        let g = graph_ref(graph)?;
        if out_value.is_null() {
            return Err(null("out_value"));
        }
        let sequence = match len {
            0 => Vec::new(),
            _ if order.is_null() => return Err(null("order")),
            _ => std::slice::from_raw_parts(order, len).to_vec(),
        };
        let ordering = Ordering::new(sequence)?;
        *out_value = verify_ordering(g, &ordering)?;
        Ok(())
    })
}

/// The message for the most recent failure on this thread, or null if none.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn adm2_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}

/// A static description of a status code.
#[no_mangle]
pub extern "C" fn adm2_status_str(status: Adm2Status) -> *const c_char {
    let text: &'static CStr = match status {
        Adm2Status::Ok => c"ok",
        Adm2Status::NullPointer => c"null pointer argument",
        Adm2Status::InvalidArgument => c"invalid argument",
        Adm2Status::Parse => c"malformed input",
        Adm2Status::Io => c"i/o error",
        Adm2Status::InvalidOrdering => c"invalid ordering",
        Adm2Status::TimedOut => c"timed out",
        Adm2Status::BufferTooSmall => c"buffer too small",
        Adm2Status::Panic => c"internal error",
    };
    text.as_ptr()
}
