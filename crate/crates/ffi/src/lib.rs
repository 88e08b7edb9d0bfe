//! C interface to `disclab`.
//!
//! Point sets are opaque handles created by `disclab_points_*` or the
//! sequence constructors and released with [`disclab_points_free`]. Every
//! fallible call returns a [`DisclabStatus`]; on failure a message is kept
//! per thread and can be read with [`disclab_last_error`]. Panics never
//! cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use disclab::oracle::{exact_lp_1d, linf_exact_small, linf_extreme_1d, linf_star_1d, mc_lp, McConfig};
use disclab::{exact_l2, sequences, Error, Kind, PointSet, SequenceGen};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DisclabStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    DimensionMismatch = 3,
    OutOfRange = 4,
    EmptyPointSet = 5,
    GuardExceeded = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DisclabKind {
    Star = 0,
    Extreme = 1,
    Periodic = 2,
    Diaphony = 3,
}

impl From<DisclabKind> for Kind {
    fn from(k: DisclabKind) -> Kind {
        match k {
            DisclabKind::Star => Kind::Star,
            DisclabKind::Extreme => Kind::Extreme,
            DisclabKind::Periodic => Kind::Periodic,
            DisclabKind::Diaphony => Kind::Diaphony,
        }
    }
}

/// Opaque point set.
pub struct DisclabPointSet {
    inner: PointSet,
}

/// Monte Carlo estimate with its sampling metadata.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct DisclabMcResult {
    pub value: f64,
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> DisclabStatus {
    match e {
        Error::DimensionMismatch { .. } => DisclabStatus::DimensionMismatch,
        Error::EmptyPointSet => DisclabStatus::EmptyPointSet,
        Error::CoordinateOutOfRange { .. } => DisclabStatus::OutOfRange,
        Error::GuardExceeded(_) => DisclabStatus::GuardExceeded,
        Error::Io(_) => DisclabStatus::Internal,
        _ => DisclabStatus::InvalidArgument,
    }
}

/// Runs `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (DisclabStatus, String)>) -> DisclabStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            DisclabStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            DisclabStatus::Internal
        }
    }
}

fn lib<T>(r: disclab::Result<T>) -> Result<T, (DisclabStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (DisclabStatus, String) {
    (DisclabStatus::NullPointer, format!("{what} is NULL"))
}

unsafe fn points<'a>(ps: *const DisclabPointSet) -> Result<&'a PointSet, (DisclabStatus, String)> {
    ps.as_ref().map(|p| &p.inner).ok_or_else(|| null("point set"))
}

unsafe fn write<T>(out: *mut T, v: T) -> Result<(), (DisclabStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(v);
    Ok(())
}

fn boxed(p: PointSet) -> *mut DisclabPointSet {
    Box::into_raw(Box::new(DisclabPointSet { inner: p }))
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// valid until the next `disclab_*` call on the same thread.
#[no_mangle]
pub extern "C" fn disclab_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Copies `n * dim` row-major coordinates into a new point set.
///
/// # Safety
/// `coords` must point to `n * dim` doubles (may be NULL when `n == 0`);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn disclab_points_new(
    dim: usize,
    coords: *const f64,
    n: usize,
    out: *mut *mut DisclabPointSet,
) -> DisclabStatus {
    guard(|| {
        let len = dim.checked_mul(n).ok_or((DisclabStatus::InvalidArgument, "dim * n overflows".into()))?;
        let flat = if len == 0 {
            Vec::new()
        } else if coords.is_null() {
            return Err(null("coords"));
        } else {
            std::slice::from_raw_parts(coords, len).to_vec()
        };
        let ps = lib(PointSet::from_flat(dim, flat))?;
        write(out, boxed(ps))
    })
}

/// Releases a point set. NULL is ignored.
///
/// # Safety
/// `ps` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn disclab_points_free(ps: *mut DisclabPointSet) {
    if !ps.is_null() {
        drop(Box::from_raw(ps));
    }
}

/// Number of points, 0 for NULL.
///
/// # Safety
/// `ps` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn disclab_points_len(ps: *const DisclabPointSet) -> usize {
    ps.as_ref().map_or(0, |p| p.inner.len())
}

/// Dimension, 0 for NULL.
///
/// # Safety
/// `ps` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn disclab_points_dim(ps: *const DisclabPointSet) -> usize {
    ps.as_ref().map_or(0, |p| p.inner.dim())
}

/// Copies the row-major coordinates into `buf`, which must hold `len * dim`.
///
/// # Safety
/// `buf` must be writable for `buf_len` doubles.
#[no_mangle]
pub unsafe extern "C" fn disclab_points_copy(
    ps: *const DisclabPointSet,
    buf: *mut f64,
    buf_len: usize,
) -> DisclabStatus {
    guard(|| {
        let p = points(ps)?;
        let flat = p.as_flat();
        if buf_len < flat.len() {
            return Err((DisclabStatus::InvalidArgument, format!("buffer holds {buf_len}, need {}", flat.len())));
        }
        if !flat.is_empty() {
            if buf.is_null() {
                return Err(null("buf"));
            }
            ptr::copy_nonoverlapping(flat.as_ptr(), buf, flat.len());
        }
        Ok(())
    })
}

/// First `n` terms of the van der Corput sequence in `base`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn disclab_vdc_prefix(base: u32, n: usize, out: *mut *mut DisclabPointSet) -> DisclabStatus {
    guard(|| {
        let gen = lib(SequenceGen::van_der_corput(base))?;
        write(out, boxed(lib(sequences::prefix(&gen, n))?))
    })
}

/// First `n` terms of the Halton sequence with `dim` pairwise coprime bases.
///
/// # Safety
/// `bases` must point to `dim` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn disclab_halton_prefix(
    bases: *const u32,
    dim: usize,
    n: usize,
    out: *mut *mut DisclabPointSet,
) -> DisclabStatus {
    guard(|| {
        if bases.is_null() && dim > 0 {
            return Err(null("bases"));
        }
        let b = if dim == 0 { Vec::new() } else { std::slice::from_raw_parts(bases, dim).to_vec() };
        let gen = lib(SequenceGen::halton(b))?;
        write(out, boxed(lib(sequences::prefix(&gen, n))?))
    })
}

/// The set `{(x_k, k/n) : k < n}` built from the first `n` points of `ps`.
///
/// # Safety
/// `ps` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn disclab_lift(
    ps: *const DisclabPointSet,
    n: usize,
    out: *mut *mut DisclabPointSet,
) -> DisclabStatus {
    guard(|| {
        let p = points(ps)?;
        write(out, boxed(lib(sequences::lift_points(p, n))?))
    })
}

/// Base-`b` radical inverse of `k`; needs `b >= 2` and `k < 2^53`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn disclab_radical_inverse(k: u64, base: u32, out: *mut f64) -> DisclabStatus {
    guard(|| {
        if base < 2 || k >= sequences::MAX_INDEX {
            return Err((
                DisclabStatus::InvalidArgument,
                format!("radical inverse needs base >= 2 and k < 2^53, got base {base}, k {k}"),
            ));
        }
        write(out, disclab::radical_inverse(k, base))
    })
}

/// Exact L2 discrepancy (or diaphony) from the closed forms.
///
/// # Safety
/// `ps` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn disclab_l2(ps: *const DisclabPointSet, kind: DisclabKind, out: *mut f64) -> DisclabStatus {
    guard(|| {
        let p = points(ps)?;
        write(out, lib(exact_l2::squared(p, kind.into()))?.sqrt())
    })
}

/// Diaphony restricted to `max_j |h_j| <= cutoff`: `squared` is the truncated
/// `F²` and `F² <= squared + tail_bound`.
///
/// # Safety
/// `ps` must be a live handle; both outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn disclab_diaphony_truncated(
    ps: *const DisclabPointSet,
    cutoff: u64,
    squared: *mut f64,
    tail_bound: *mut f64,
) -> DisclabStatus {
    guard(|| {
        let p = points(ps)?;
        if squared.is_null() || tail_bound.is_null() {
            return Err(null("output pointer"));
        }
        let t = lib(exact_l2::diaphony_truncated(p, cutoff))?;
        write(squared, t.squared)?;
        write(tail_bound, t.tail_bound)
    })
}

/// Seeded Monte Carlo `L_p` estimate (star, extreme or periodic).
///
/// # Safety
/// `ps` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn disclab_mc_lp(
    ps: *const DisclabPointSet,
    kind: DisclabKind,
    p: f64,
    samples: u64,
    seed: u64,
    out: *mut DisclabMcResult,
) -> DisclabStatus {
    guard(|| {
        let pts = points(ps)?;
        let cfg = lib(McConfig::new(kind.into(), p, samples, seed))?;
        let est = lib(mc_lp(pts, &cfg))?;
        let s = est.sampling.expect("Monte Carlo estimates carry sampling data");
        write(out, DisclabMcResult { value: est.value, std_error: s.stderr, samples: s.samples, seed: s.seed })
    })
}

/// Exact star or extreme `L_p` discrepancy of a one-dimensional set.
///
/// # Safety
/// `ps` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn disclab_exact_lp_1d(
    ps: *const DisclabPointSet,
    kind: DisclabKind,
    p: f64,
    out: *mut f64,
) -> DisclabStatus {
    guard(|| {
        let pts = points(ps)?;
        write(out, lib(exact_lp_1d(pts, kind.into(), p))?)
    })
}

/// Exact star or extreme `L∞` discrepancy: any `N` in one dimension,
/// `N <= 64` in two.
///
/// # Safety
/// `ps` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn disclab_linf(ps: *const DisclabPointSet, kind: DisclabKind, out: *mut f64) -> DisclabStatus {
    guard(|| {
        let pts = points(ps)?;
        let v = match (kind, pts.dim()) {
            (DisclabKind::Star, 1) => linf_star_1d(pts),
            (DisclabKind::Extreme, 1) => linf_extreme_1d(pts),
            _ => linf_exact_small(pts, kind.into()),
        };
        write(out, lib(v)?)
    })
}
