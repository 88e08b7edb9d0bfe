//! Compensated accumulation for kernel pair sums.
//!
//! Squared L2 discrepancies are differences of Θ(N²)-sized sums that nearly
//! cancel. The accumulator keeps a running sum plus the exact rounding error
//! of every addition (Knuth's TwoSum), so the result is as accurate as if it
//! had been computed in twice the working precision and rounded once.

/// Error-free sum: returns `(s, e)` with `s = fl(a + b)` and `a + b = s + e`.
#[inline(always)]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Error-free product: `a * b = p + e` exactly (barring underflow).
#[inline(always)]
pub fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

/// Running compensated sum.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct KernelAccumulator {
    sum: f64,
    comp: f64,
}

impl KernelAccumulator {
    pub const fn new() -> Self {
        Self { sum: 0.0, comp: 0.0 }
    }

    #[inline(always)]
    pub fn add(&mut self, x: f64) {
        let (s, e) = two_sum(self.sum, x);
        self.sum = s;
        self.comp += e;
    }

    /// Adds `a * b` including the rounding error of the product.
    #[inline]
    pub fn add_product(&mut self, a: f64, b: f64) {
        let (p, e) = two_prod(a, b);
        self.add(p);
        self.comp += e;
    }

    /// Adds another accumulator's unrounded contents.
    #[inline]
    pub fn merge(&mut self, other: &KernelAccumulator) {
        self.add(other.sum);
        self.comp += other.comp;
    }

    /// Multiplies the accumulated value by `k` keeping the compensation.
    pub fn scaled(&self, k: f64) -> KernelAccumulator {
        let (p, e) = two_prod(self.sum, k);
        let mut out = KernelAccumulator { sum: p, comp: e };
        out.comp += self.comp * k;
        out
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }

    /// The unevaluated pair `(sum, compensation)`.
    pub fn parts(&self) -> (f64, f64) {
        (self.sum, self.comp)
    }
}

impl std::ops::AddAssign<f64> for KernelAccumulator {
    fn add_assign(&mut self, rhs: f64) {
        self.add(rhs);
    }
}

impl FromIterator<f64> for KernelAccumulator {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = KernelAccumulator::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// `x^{-d}` as an unevaluated sum `hi + lo`, for integer `x` with `x^d < 2^53`.
///
/// Used for the constants `3^{-d}` and `12^{-d}`, whose rounding would
/// otherwise be multiplied by `N²` and dominate the result.
pub fn reciprocal_power(x: u32, d: usize) -> (f64, f64) {
    let denom = (x as f64).powi(d as i32);
    debug_assert!(denom < 9.007_199_254_740_992e15);
    let hi = 1.0 / denom;
    // 1 - hi*denom is exact under fma.
    let r = (-hi).mul_add(denom, 1.0);
    (hi, r / denom)
}
