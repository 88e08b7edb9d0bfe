//! Definition-level oracles: Monte Carlo for any finite `p`, exact piecewise
//! integration in one dimension, and exact suprema for `p = ∞`.

mod exact1d;
mod linf;
mod mc;

pub use exact1d::{exact_lp_1d, exact_lp_1d_estimate};
pub use linf::{linf_exact_small, linf_extreme_1d, linf_star_1d, LINF_MAX_DIM, LINF_MAX_POINTS};
pub use mc::{mc_lp, McConfig, MC_BATCH, MIN_SAMPLES};

/// `|c|^p`, with a fast path for small integer exponents.
#[derive(Debug, Clone, Copy)]
pub(crate) struct AbsPow {
    p: f64,
    int: Option<i32>,
}

impl AbsPow {
    pub(crate) fn new(p: f64) -> Self {
        let int = (p.fract() == 0.0 && p <= 32.0).then_some(p as i32);
        Self { p, int }
    }

    #[inline]
    pub(crate) fn of(&self, c: f64) -> f64 {
        let a = c.abs();
        match self.int {
            Some(1) => a,
            Some(2) => a * a,
            Some(k) => a.powi(k),
            None => a.powf(self.p),
        }
    }

    /// `|c|^{p + extra}` for a nonnegative integer `extra`.
    #[inline]
    pub(crate) fn of_shifted(&self, c: f64, extra: i32) -> f64 {
        let a = c.abs();
        match self.int {
            Some(k) => a.powi(k + extra),
            None => a.powf(self.p + extra as f64),
        }
    }
}
