//! Test sets (axis-parallel boxes), the counting function and the local
//! discrepancy.

use crate::error::{Error, Result};
use crate::points::PointSet;

/// A test set with a Lebesgue volume and a membership predicate.
pub trait TestSet {
    fn dim(&self) -> usize;
    fn volume(&self) -> f64;
    fn contains(&self, x: &[f64]) -> bool;
}

/// Half-open box `[u, v)` with `u <= v` componentwise.
#[derive(Debug, Clone, PartialEq)]
pub struct AxisBox {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl AxisBox {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::DimensionMismatch { expected: lower.len(), found: upper.len() });
        }
        if lower.is_empty() {
            return Err(Error::ZeroDimension);
        }
        for (axis, (&u, &v)) in lower.iter().zip(&upper).enumerate() {
            if !(0.0..=1.0).contains(&u) || !(0.0..=1.0).contains(&v) || u > v {
                return Err(Error::InvalidBox { axis, lower: u, upper: v });
            }
        }
        Ok(Self { lower, upper })
    }

    /// The box `[0, t)` anchored in the origin.
    pub fn anchored(upper: Vec<f64>) -> Result<Self> {
        Self::new(vec![0.0; upper.len()], upper)
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }
}

impl TestSet for AxisBox {
    fn dim(&self) -> usize {
        self.lower.len()
    }

    fn volume(&self) -> f64 {
        self.lower.iter().zip(&self.upper).map(|(u, v)| v - u).product()
    }

    fn contains(&self, x: &[f64]) -> bool {
        x.iter().zip(self.lower.iter().zip(&self.upper)).all(|(&c, (&u, &v))| u <= c && c < v)
    }
}

/// Periodic box modulo one: per axis `[u, v)` when `u <= v`, otherwise the
/// wrapped set `[0, v) ∪ [u, 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicBox {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl PeriodicBox {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::DimensionMismatch { expected: lower.len(), found: upper.len() });
        }
        if lower.is_empty() {
            return Err(Error::ZeroDimension);
        }
        for (axis, (&u, &v)) in lower.iter().zip(&upper).enumerate() {
            if !(0.0..=1.0).contains(&u) || !(0.0..=1.0).contains(&v) {
                return Err(Error::InvalidBox { axis, lower: u, upper: v });
            }
        }
        Ok(Self { lower, upper })
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }
}

impl TestSet for PeriodicBox {
    fn dim(&self) -> usize {
        self.lower.len()
    }

    fn volume(&self) -> f64 {
        self.lower.iter().zip(&self.upper).map(|(&u, &v)| frac(v - u)).product()
    }

    fn contains(&self, x: &[f64]) -> bool {
        x.iter().zip(self.lower.iter().zip(&self.upper)).all(|(&c, (&u, &v))| frac(c - u) < frac(v - u))
    }
}

/// Fractional part `{t} = t - floor(t)`, folded into `[0,1)`.
///
/// `t - floor(t)` can round up to exactly 1 for tiny negative `t`; that case
/// maps to 0.
#[inline]
pub fn frac(t: f64) -> f64 {
    let f = t - t.floor();
    if f >= 1.0 {
        0.0
    } else {
        f
    }
}

/// Counting function `A_N(B, P)`.
pub fn count_points<B: TestSet + ?Sized>(points: &PointSet, test: &B) -> Result<usize> {
    if points.dim() != test.dim() {
        return Err(Error::DimensionMismatch { expected: points.dim(), found: test.dim() });
    }
    Ok(points.iter().filter(|x| test.contains(x)).count())
}

/// Local discrepancy `A_N(B, P) - N λ(B)`.
pub fn local_discrepancy<B: TestSet + ?Sized>(points: &PointSet, test: &B) -> Result<f64> {
    let count = count_points(points, test)?;
    Ok(count as f64 - points.len() as f64 * test.volume())
}
