//! Exact O(N²d) evaluation of the star, extreme and periodic L2
//! discrepancies and of the diaphony.
//!
//! Expanding the square in each defining integral gives a pair sum of a
//! product kernel, a single sum, and a constant:
//!
//! ```text
//! star      L² = Σ_{k,l} Π_j (1 - max(x_kj, x_lj))      - 2N Σ_k Π_j (1 - x_kj²)/2  + N² 3^{-d}
//! extreme   L² = Σ_{k,l} Π_j (min(x_kj, x_lj) - x_kj x_lj) - 2N Σ_k Π_j x_kj(1 - x_kj)/2 + N² 12^{-d}
//! periodic  L² = Σ_{k,l} Π_j (1/3 + B₂({x_kj - x_lj}))                                 - N² 3^{-d}
//! diaphony  F² = N^{-2} Σ_{k,l} [Π_j (1 + 2π² B₂({x_kj - x_lj})) - 1]
//! ```
//!
//! with `B₂(t) = t² - t + 1/6`. The extreme integral runs over `{u <= v}`,
//! a region of measure `2^{-d}`, without normalisation; that is where the
//! `12^{-d}` comes from. The diaphony sum excludes the frequency `h = 0`.
//!
//! Pair sums are taken over the diagonal plus twice the upper triangle, in
//! fixed row blocks that are merged in index order, so results do not depend
//! on the number of worker threads.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::boxes::frac;
use crate::error::{Error, Result};
use crate::estimate::{Estimate, Kind, Method};
use crate::points::PointSet;
use crate::summation::{reciprocal_power, two_prod, KernelAccumulator};

/// Rows per work unit in pair sums. Fixed, so the reduction tree is fixed.
const ROW_BLOCK: usize = 32;
/// Points per work unit in incremental row sums.
const COL_BLOCK: usize = 4096;

const TWO_PI_SQ: f64 = 2.0 * PI * PI;

/// Second Bernoulli polynomial.
#[inline]
pub fn bernoulli2(t: f64) -> f64 {
    t * t - t + 1.0 / 6.0
}

/// `Π_j (1 + a_j) - 1` without cancellation when the product is near 1.
#[inline]
fn product_minus_one(factors: impl Iterator<Item = f64>) -> f64 {
    factors.fold(0.0, |pm1, a| pm1 * (1.0 + a) + a)
}

#[inline]
fn star_pair(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(&x, &y)| 1.0 - x.max(y)).product()
}

#[inline]
fn extreme_pair(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(&x, &y)| x.min(y) - x * y).product()
}

#[inline]
fn periodic_pair(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| {
            let t = frac(x - y);
            t * t - t + 0.5
        })
        .product()
}

#[inline]
fn diaphony_pair(a: &[f64], b: &[f64]) -> f64 {
    product_minus_one(a.iter().zip(b).map(|(&x, &y)| TWO_PI_SQ * bernoulli2(frac(x - y))))
}

fn pair_kernel(kind: Kind) -> fn(&[f64], &[f64]) -> f64 {
    match kind {
        Kind::Star => star_pair,
        Kind::Extreme => extreme_pair,
        Kind::Periodic => periodic_pair,
        Kind::Diaphony => diaphony_pair,
    }
}

fn single_term(kind: Kind, x: &[f64]) -> f64 {
    match kind {
        Kind::Star => x.iter().map(|&c| (1.0 - c * c) * 0.5).product(),
        Kind::Extreme => x.iter().map(|&c| c * (1.0 - c) * 0.5).product(),
        Kind::Periodic | Kind::Diaphony => 0.0,
    }
}

/// `Σ_{k,l} K(x_k, x_l)` over all ordered pairs.
fn pair_sum(points: &PointSet, kernel: fn(&[f64], &[f64]) -> f64) -> KernelAccumulator {
    let n = points.len();
    let blocks: Vec<KernelAccumulator> = (0..n.div_ceil(ROW_BLOCK))
        .into_par_iter()
        .map(|b| {
            let mut diag = KernelAccumulator::new();
            let mut off = KernelAccumulator::new();
            for k in b * ROW_BLOCK..((b + 1) * ROW_BLOCK).min(n) {
                let xk = points.point(k);
                diag.add(kernel(xk, xk));
                for l in k + 1..n {
                    off.add(kernel(xk, points.point(l)));
                }
            }
            diag.merge(&off.scaled(2.0));
            diag
        })
        .collect();
    let mut total = KernelAccumulator::new();
    for b in &blocks {
        total.merge(b);
    }
    total
}

/// Combines pair sum, single sum and constant into the squared value.
fn assemble(kind: Kind, n: usize, d: usize, pairs: KernelAccumulator, singles: KernelAccumulator) -> f64 {
    let nf = n as f64;
    let mut total = pairs;
    match kind {
        Kind::Star | Kind::Extreme => {
            total.merge(&singles.scaled(-2.0 * nf));
            let (hi, lo) = reciprocal_power(if kind == Kind::Star { 3 } else { 12 }, d);
            let (n2, n2e) = two_prod(nf, nf);
            total.add_product(n2, hi);
            total.add_product(n2, lo);
            total.add(n2e * hi);
            total.value()
        }
        Kind::Periodic => {
            let (hi, lo) = reciprocal_power(3, d);
            let (n2, n2e) = two_prod(nf, nf);
            total.add_product(-n2, hi);
            total.add_product(-n2, lo);
            total.add(-n2e * hi);
            total.value()
        }
        Kind::Diaphony => total.value() / (nf * nf),
    }
}

/// Squared value of the given kind, clamped at zero.
pub fn squared(points: &PointSet, kind: Kind) -> Result<f64> {
    points.require_nonempty()?;
    let pairs = pair_sum(points, pair_kernel(kind));
    let singles: KernelAccumulator = points.iter().map(|x| single_term(kind, x)).collect();
    Ok(assemble(kind, points.len(), points.dim(), pairs, singles).max(0.0))
}

/// Star L2 discrepancy (unnormalised: the local discrepancy counts points).
pub fn star_l2(points: &PointSet) -> Result<f64> {
    Ok(squared(points, Kind::Star)?.sqrt())
}

/// Extreme L2 discrepancy over all boxes `[u, v) ⊆ [0,1]^d`.
pub fn extreme_l2(points: &PointSet) -> Result<f64> {
    Ok(squared(points, Kind::Extreme)?.sqrt())
}

/// Periodic L2 discrepancy over boxes modulo one.
pub fn periodic_l2(points: &PointSet) -> Result<f64> {
    Ok(squared(points, Kind::Periodic)?.sqrt())
}

/// Diaphony `F_N`, normalised by `N`, summing over frequencies `h != 0`.
pub fn diaphony(points: &PointSet) -> Result<f64> {
    Ok(squared(points, Kind::Diaphony)?.sqrt())
}

pub fn evaluate(points: &PointSet, kind: Kind) -> Result<Estimate> {
    let value = squared(points, kind)?.sqrt();
    Ok(Estimate::exact(kind, 2.0, value, Method::ExactClosedForm, points.len(), points.dim()))
}

/// Maintains the squared L2 value of a growing prefix `x_0, …, x_{n-1}`.
///
/// Each [`push`](Self::push) costs O(n d), so scanning every prefix up to
/// `N` costs O(N² d) in total.
#[derive(Debug, Clone)]
pub struct IncrementalL2 {
    kind: Kind,
    points: Vec<f64>,
    dim: usize,
    pairs: KernelAccumulator,
    singles: KernelAccumulator,
}

impl IncrementalL2 {
    pub fn new(kind: Kind, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(Self { kind, points: Vec::new(), dim, pairs: KernelAccumulator::new(), singles: KernelAccumulator::new() })
    }

    pub fn len(&self) -> usize {
        self.points.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn push(&mut self, x: &[f64]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: x.len() });
        }
        if let Some(c) = x.iter().find(|c| !(0.0..1.0).contains(*c)) {
            return Err(Error::CoordinateOutOfRange { row: self.len() + 1, col: 0, value: *c });
        }
        let kernel = pair_kernel(self.kind);
        let dim = self.dim;
        let blocks: Vec<KernelAccumulator> = self
            .points
            .par_chunks(COL_BLOCK * dim)
            .map(|chunk| chunk.chunks_exact(dim).map(|y| kernel(y, x)).collect())
            .collect();
        let mut cross = KernelAccumulator::new();
        for b in &blocks {
            cross.merge(b);
        }
        self.pairs.merge(&cross.scaled(2.0));
        self.pairs.add(kernel(x, x));
        self.singles.add(single_term(self.kind, x));
        self.points.extend_from_slice(x);
        Ok(())
    }

    /// Squared value for the current prefix, clamped at zero.
    pub fn squared(&self) -> Result<f64> {
        if self.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        Ok(assemble(self.kind, self.len(), self.dim, self.pairs, self.singles).max(0.0))
    }

    pub fn value(&self) -> Result<f64> {
        Ok(self.squared()?.sqrt())
    }
}

/// Diaphony restricted to frequencies with `max_j |h_j| <= H`, with a
/// rigorous bound on the omitted part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncatedDiaphony {
    pub cutoff: u64,
    /// Truncated sum of the squared diaphony; `squared <= F² <= squared + tail_bound`.
    pub squared: f64,
    pub tail_bound: f64,
}

impl TruncatedDiaphony {
    pub fn value(&self) -> f64 {
        self.squared.sqrt()
    }
}

/// Caps `(2H+1)^d` for the explicit frequency enumeration.
pub const MAX_TRUNCATED_TERMS: f64 = 4.0e8;

/// Direct Fourier evaluation of the diaphony over the frequency box
/// `max_j |h_j| <= H`.
///
/// Frequencies are visited shell by shell (`max_j |h_j| = 1, 2, …`), so the
/// sum for a cutoff `H` is a prefix of the sum for `H + 1` and the result is
/// nondecreasing in `H` even in floating point. The tail bound uses
/// `Σ_{|h|>H} h^{-2} <= 2/H` and `|S(h)/N| <= 1`:
/// `((W_H + 2/H)^d - W_H^d)` with `W_H = 1 + 2 Σ_{h<=H} h^{-2}`.
pub fn diaphony_truncated(points: &PointSet, cutoff: u64) -> Result<TruncatedDiaphony> {
    points.require_nonempty()?;
    if cutoff == 0 {
        return Err(Error::InvalidArgument("frequency cutoff must be at least 1".into()));
    }
    let d = points.dim();
    let n = points.len();
    let h_max = cutoff as usize;
    let side = 2 * h_max + 1;
    if (side as f64).powi(d as i32) > MAX_TRUNCATED_TERMS {
        return Err(Error::GuardExceeded(format!("(2H+1)^d = {side}^{d} frequencies exceeds {MAX_TRUNCATED_TERMS:e}")));
    }

    // phases[j][k][h] = exp(2πi h x_kj) for h in 0..=H; negative h by conjugation.
    let phases: Vec<Vec<Vec<(f64, f64)>>> = (0..d)
        .map(|j| {
            points
                .iter()
                .map(|x| {
                    (0..=h_max)
                        .map(|h| {
                            let (p, e) = two_prod(h as f64, x[j]);
                            let t = frac(p) + e;
                            let (s, c) = (2.0 * PI * t).sin_cos();
                            (c, s)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();

    let inv_n2 = 1.0 / (n as f64 * n as f64);
    let mut total = 0.0f64;
    let mut h = vec![0i64; d];
    for shell in 1..=h_max as i64 {
        // Enumerate every h with max |h_j| == shell, in lexicographic order.
        for flat in 0..(2 * shell as usize + 1).pow(d as u32) {
            let mut rest = flat;
            let mut on_shell = false;
            for hj in h.iter_mut() {
                *hj = (rest % (2 * shell as usize + 1)) as i64 - shell;
                rest /= 2 * shell as usize + 1;
                on_shell |= hj.abs() == shell;
            }
            if !on_shell {
                continue;
            }
            let weight: f64 = h.iter().map(|&hj| 1.0 / (hj.max(1).max(-hj) as f64).powi(2)).product();
            let (mut re, mut im) = (0.0, 0.0);
            for k in 0..n {
                let (mut pr, mut pi) = (1.0, 0.0);
                for (axis, &hj) in phases.iter().zip(h.iter()) {
                    let (c, s) = axis[k][hj.unsigned_abs() as usize];
                    let s = if hj < 0 { -s } else { s };
                    (pr, pi) = (pr * c - pi * s, pr * s + pi * c);
                }
                re += pr;
                im += pi;
            }
            total += weight * (re * re + im * im) * inv_n2;
        }
    }

    let w: f64 = 1.0 + 2.0 * (1..=cutoff).rev().map(|h| 1.0 / (h as f64 * h as f64)).sum::<f64>();
    let tail = 2.0 / cutoff as f64;
    let tail_bound = (w + tail).powi(d as i32) - w.powi(d as i32);
    // Absorb rounding in the computed bound.
    let tail_bound = tail_bound * (1.0 + 1e-12) + 1e-15;
    Ok(TruncatedDiaphony { cutoff, squared: total, tail_bound })
}
