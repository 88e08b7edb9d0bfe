//! Star, extreme and periodic L_p discrepancies and the diaphony of finite
//! point sets in `[0,1)^d`, together with the sequences and experiments used
//! to study how these quantities grow with the number of points.
//!
//! Exact closed forms cover `p = 2`; one-dimensional sets are integrated
//! exactly for any `p`; suprema (`p = ∞`) are exact for `d <= 2`; everything
//! else goes through a seeded, batch-deterministic Monte Carlo estimator.

// `!(x >= y)` is used on purpose so that NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod boxes;
pub mod cli;
pub mod error;
pub mod estimate;
pub mod exact_l2;
pub mod experiments;
pub mod format;
pub mod oracle;
pub mod points;
pub mod rng;
pub mod sequences;
pub mod summation;

/// Seed used whenever none is given.
pub const DEFAULT_SEED: u64 = 0x5eed_d15c;

pub use boxes::{count_points, local_discrepancy, AxisBox, PeriodicBox, TestSet};
pub use error::{Error, Result};
pub use estimate::{Estimate, Kind, Method, Sampling};
pub use exact_l2::{diaphony, diaphony_truncated, extreme_l2, periodic_l2, star_l2, IncrementalL2, TruncatedDiaphony};
pub use oracle::{exact_lp_1d, linf_exact_small, linf_extreme_1d, linf_star_1d, mc_lp, McConfig};
pub use points::PointSet;
pub use sequences::{lift, prefix, radical_inverse, SequenceGen};
