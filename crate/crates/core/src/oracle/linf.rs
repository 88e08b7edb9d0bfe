//! Exact suprema of the local discrepancy (`p = ∞`).
//!
//! The supremum over half-open boxes is taken over the closure: each box
//! face may sit exactly on a point coordinate and either include or exclude
//! the points on it, with the volume evaluated at that coordinate. Between
//! breakpoints the local discrepancy is monotone in every face, so these
//! limits exhaust the candidates.

use crate::error::{Error, Result};
use crate::estimate::Kind;
use crate::points::PointSet;

pub const LINF_MAX_DIM: usize = 2;
pub const LINF_MAX_POINTS: usize = 64;

/// `D(t) = #{y < t} - slope·t` at every breakpoint limit, in `t` order:
/// `D(0)`, then `D(y⁻), D(y⁺)` for each distinct `y`, then `D(1)`.
/// `ys` must be sorted.
fn breakpoint_values(ys: &[f64], slope: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(2 * ys.len() + 2);
    out.push(0.0);
    let mut i = 0;
    while i < ys.len() {
        let y = ys[i];
        let below = i as f64;
        while i < ys.len() && ys[i] == y {
            i += 1;
        }
        let line = slope * y;
        out.push(below - line);
        out.push(i as f64 - line);
    }
    out.push(ys.len() as f64 - slope);
    out
}

/// `sup_t |D(t)|` for anchored intervals `[0, t)`.
fn anchored_sup(values: &[f64]) -> f64 {
    values.iter().fold(0.0, |m, v| m.max(v.abs()))
}

/// `sup_{u <= v} |D(v) - D(u)|` by prefix-extrema scans.
fn interval_sup(values: &[f64]) -> f64 {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    let mut best: f64 = 0.0;
    for &v in values {
        lo = lo.min(v);
        hi = hi.max(v);
        best = best.max(v - lo).max(hi - v);
    }
    best
}

fn sorted_axis(points: &PointSet, axis: usize) -> Vec<f64> {
    let mut ys = points.axis(axis);
    ys.sort_by(f64::total_cmp);
    ys
}

fn require_1d(points: &PointSet) -> Result<()> {
    if points.dim() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, found: points.dim() });
    }
    points.require_nonempty()
}

/// Star discrepancy `sup_t |A([0,t)) - N t|` of a one-dimensional set.
///
/// For sorted `x_(1) <= … <= x_(N)` this is
/// `max_i max(N x_(i) - (i-1), i - N x_(i))`.
pub fn linf_star_1d(points: &PointSet) -> Result<f64> {
    require_1d(points)?;
    let xs = sorted_axis(points, 0);
    let n = xs.len() as f64;
    Ok(xs.iter().enumerate().fold(0.0, |m: f64, (i, &x)| {
        let nx = n * x;
        m.max(nx - i as f64).max((i + 1) as f64 - nx)
    }))
}

/// Extreme discrepancy `sup_{u<=v} |A([u,v)) - N(v-u)|` in one dimension,
/// in O(N log N).
pub fn linf_extreme_1d(points: &PointSet) -> Result<f64> {
    require_1d(points)?;
    let ys = sorted_axis(points, 0);
    Ok(interval_sup(&breakpoint_values(&ys, points.len() as f64)))
}

/// One face choice on an axis: coordinate and whether points lying exactly
/// on it are inside.
#[derive(Clone, Copy)]
struct Face {
    at: f64,
    closed: bool,
}

fn faces(coords: &[f64], extra: f64) -> Vec<Face> {
    let mut cs: Vec<f64> = coords.to_vec();
    cs.push(extra);
    cs.sort_by(f64::total_cmp);
    cs.dedup();
    cs.iter().flat_map(|&at| [Face { at, closed: false }, Face { at, closed: true }]).collect()
}

/// Exact star or extreme `L∞` discrepancy for `d <= 2`, `N <= 64`.
///
/// Box faces on the leading axes are enumerated over the critical values;
/// the last axis is resolved exactly by a breakpoint scan of the points
/// inside the resulting strip.
pub fn linf_exact_small(points: &PointSet, kind: Kind) -> Result<f64> {
    points.require_nonempty()?;
    let (d, n) = (points.dim(), points.len());
    if d > LINF_MAX_DIM || n > LINF_MAX_POINTS {
        return Err(Error::GuardExceeded(format!(
            "exact L-infinity enumeration needs d <= {LINF_MAX_DIM} and N <= {LINF_MAX_POINTS}, got d={d}, N={n}"
        )));
    }
    if !matches!(kind, Kind::Star | Kind::Extreme) {
        return Err(Error::InvalidArgument(format!("L-infinity supports star|extreme, not {kind}")));
    }
    let nf = n as f64;
    let scan = |ys: &[f64], slope: f64| {
        let values = breakpoint_values(ys, slope);
        match kind {
            Kind::Star => anchored_sup(&values),
            _ => interval_sup(&values),
        }
    };
    if d == 1 {
        return Ok(scan(&sorted_axis(points, 0), nf));
    }

    // Points ordered by the last axis; strips keep that order.
    let mut order: Vec<&[f64]> = points.iter().collect();
    order.sort_by(|a, b| a[1].total_cmp(&b[1]));
    let first_axis = points.axis(0);
    let mut strip = Vec::with_capacity(n);
    let mut best: f64 = 0.0;

    match kind {
        Kind::Star => {
            for upper in faces(&first_axis, 1.0) {
                strip.clear();
                strip.extend(order.iter().filter(|x| below(x[0], upper)).map(|x| x[1]));
                best = best.max(scan(&strip, nf * upper.at));
            }
        }
        _ => {
            let lowers = faces(&first_axis, 0.0);
            let uppers = faces(&first_axis, 1.0);
            for lower in &lowers {
                for upper in uppers.iter().filter(|f| f.at >= lower.at) {
                    strip.clear();
                    strip.extend(order.iter().filter(|x| above(x[0], *lower) && below(x[0], *upper)).map(|x| x[1]));
                    best = best.max(scan(&strip, nf * (upper.at - lower.at)));
                }
            }
        }
    }
    Ok(best)
}

#[inline]
fn below(x: f64, face: Face) -> bool {
    x < face.at || (face.closed && x == face.at)
}

#[inline]
fn above(x: f64, face: Face) -> bool {
    x > face.at || (face.closed && x == face.at)
}
