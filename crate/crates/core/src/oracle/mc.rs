use rayon::prelude::*;

use super::AbsPow;
use crate::error::{Error, Result};
use crate::estimate::{Estimate, Kind, Method, Sampling};
use crate::points::PointSet;
use crate::rng::{UniformStream, RNG_NAME};

/// Samples per batch; batch `b` draws from RNG stream `b`.
pub const MC_BATCH: u64 = 1 << 16;
/// Fewer samples than this give no meaningful standard error.
pub const MIN_SAMPLES: u64 = 100;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McConfig {
    pub kind: Kind,
    pub p: f64,
    pub samples: u64,
    pub seed: u64,
}

impl McConfig {
    pub fn new(kind: Kind, p: f64, samples: u64, seed: u64) -> Result<Self> {
        let cfg = Self { kind, p, samples, seed };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<()> {
        if self.kind == Kind::Diaphony {
            return Err(Error::InvalidArgument("Monte Carlo supports star|extreme|periodic".into()));
        }
        if self.p.is_infinite() {
            return Err(Error::InvalidArgument("p = inf is not an integral; use the exact L-infinity routines".into()));
        }
        if !(self.p >= 1.0) {
            return Err(Error::InvalidArgument(format!("p must be >= 1, got {}", self.p)));
        }
        if self.samples < MIN_SAMPLES {
            return Err(Error::InvalidArgument(format!(
                "at least {MIN_SAMPLES} samples are needed, got {}",
                self.samples
            )));
        }
        Ok(())
    }
}

/// Running mean and centred second moment of one batch (Welford).
#[derive(Debug, Clone, Copy, Default)]
struct Moments {
    n: f64,
    mean: f64,
    m2: f64,
}

impl Moments {
    #[inline]
    fn push(&mut self, x: f64) {
        self.n += 1.0;
        let delta = x - self.mean;
        self.mean += delta / self.n;
        self.m2 += delta * (x - self.mean);
    }

    /// Chan et al. pairwise combination.
    fn merge(&mut self, o: &Moments) {
        if o.n == 0.0 {
            return;
        }
        let n = self.n + o.n;
        let delta = o.mean - self.mean;
        self.mean += delta * o.n / n;
        self.m2 += o.m2 + delta * delta * self.n * o.n / n;
        self.n = n;
    }
}

/// Monte Carlo estimate of the star, extreme or periodic `L_p` discrepancy.
///
/// * star: `t ~ U[0,1)^d`, integrand `|Δ([0,t))|^p`.
/// * extreme: `a, b ~ U[0,1)^d`, `u = min(a,b)`, `v = max(a,b)`
///   componentwise. This pushes the uniform law onto `{u <= v}` with density
///   `2^d`, so the integral is `2^{-d} E|Δ([u,v))|^p`.
/// * periodic: `u, v ~ U[0,1)^d` with wrap-around boxes.
///
/// The value is `mean^{1/p}`; its standard error is the standard error of
/// the mean propagated through `x ↦ x^{1/p}` by the delta method.
///
/// Sampling runs in fixed batches of [`MC_BATCH`] merged in batch order, so
/// the estimate is bitwise identical for any thread count.
pub fn mc_lp(points: &PointSet, cfg: &McConfig) -> Result<Estimate> {
    cfg.validate()?;
    points.require_nonempty()?;
    let d = points.dim();
    let pow = AbsPow::new(cfg.p);
    let n_batches = cfg.samples.div_ceil(MC_BATCH);
    let weight = match cfg.kind {
        Kind::Extreme => 0.5f64.powi(d as i32),
        _ => 1.0,
    };

    let cols = Columns::new(points);
    let batches: Vec<Moments> = (0..n_batches)
        .into_par_iter()
        .map(|b| {
            let count = MC_BATCH.min(cfg.samples - b * MC_BATCH);
            let mut rng = UniformStream::new(cfg.seed, b);
            let mut m = Moments::default();
            let mut lo = vec![0.0; d];
            let mut hi = vec![0.0; d];
            let mut mask = vec![0u8; points.len()];
            for _ in 0..count {
                let delta = match cfg.kind {
                    Kind::Star => {
                        rng.fill_uniform(&mut hi);
                        cols.star_delta(&hi, &mut mask)
                    }
                    Kind::Extreme => {
                        rng.fill_uniform(&mut lo);
                        rng.fill_uniform(&mut hi);
                        for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                            if *a > *b {
                                std::mem::swap(a, b);
                            }
                        }
                        cols.box_delta(&lo, &hi, &mut mask)
                    }
                    Kind::Periodic => {
                        rng.fill_uniform(&mut lo);
                        rng.fill_uniform(&mut hi);
                        cols.periodic_delta(&lo, &hi, &mut mask)
                    }
                    Kind::Diaphony => unreachable!("rejected by validate"),
                };
                m.push(weight * pow.of(delta));
            }
            m
        })
        .collect();

    let mut total = Moments::default();
    for b in &batches {
        total.merge(b);
    }
    let mean = total.mean.max(0.0);
    let var = if total.n > 1.0 { total.m2 / (total.n - 1.0) } else { 0.0 };
    let se_mean = (var / total.n).sqrt();
    let value = mean.powf(1.0 / cfg.p);
    let stderr = if mean > 0.0 { se_mean * value / (cfg.p * mean) } else { 0.0 };
    Ok(Estimate {
        kind: cfg.kind,
        p: cfg.p,
        value,
        method: Method::MonteCarlo,
        n: points.len(),
        d,
        sampling: Some(Sampling { stderr, samples: cfg.samples, seed: cfg.seed, rng: RNG_NAME }),
    })
}

/// Axis-major copy of the points for branch-free membership masks.
struct Columns {
    n: usize,
    axes: Vec<Vec<f64>>,
}

impl Columns {
    fn new(points: &PointSet) -> Self {
        let axes = (0..points.dim()).map(|j| points.axis(j)).collect();
        Self { n: points.len(), axes }
    }

    #[inline]
    fn finish(&self, mask: &[u8], vol: f64) -> f64 {
        let count: usize = mask.iter().map(|&m| m as usize).sum();
        count as f64 - self.n as f64 * vol
    }

    /// `Δ([0,t))`.
    #[inline]
    fn star_delta(&self, t: &[f64], mask: &mut [u8]) -> f64 {
        mask.fill(1);
        for (col, &tj) in self.axes.iter().zip(t) {
            for (m, &x) in mask.iter_mut().zip(col) {
                *m &= (x < tj) as u8;
            }
        }
        self.finish(mask, t.iter().product())
    }

    /// `Δ([u,v))` for `u <= v`.
    #[inline]
    fn box_delta(&self, u: &[f64], v: &[f64], mask: &mut [u8]) -> f64 {
        mask.fill(1);
        for (col, (&a, &b)) in self.axes.iter().zip(u.iter().zip(v)) {
            for (m, &x) in mask.iter_mut().zip(col) {
                *m &= ((a <= x) & (x < b)) as u8;
            }
        }
        self.finish(mask, u.iter().zip(v).map(|(a, b)| b - a).product())
    }

    /// Periodic box from `u` to `v`: `[u_j, v_j)` when `u_j <= v_j`, else
    /// `[u_j, 1) ∪ [0, v_j)`.
    #[inline]
    fn periodic_delta(&self, u: &[f64], v: &[f64], mask: &mut [u8]) -> f64 {
        mask.fill(1);
        let mut vol = 1.0;
        for (col, (&a, &b)) in self.axes.iter().zip(u.iter().zip(v)) {
            if a <= b {
                vol *= b - a;
                for (m, &x) in mask.iter_mut().zip(col) {
                    *m &= ((a <= x) & (x < b)) as u8;
                }
            } else {
                vol *= 1.0 - a + b;
                for (m, &x) in mask.iter_mut().zip(col) {
                    *m &= ((a <= x) | (x < b)) as u8;
                }
            }
        }
        self.finish(mask, vol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set1(xs: &[f64]) -> PointSet {
        PointSet::from_flat(1, xs.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_configs() {
        assert!(McConfig::new(Kind::Star, f64::INFINITY, 1000, 1).is_err());
        assert!(McConfig::new(Kind::Star, 0.5, 1000, 1).is_err());
        assert!(McConfig::new(Kind::Diaphony, 2.0, 1000, 1).is_err());
        assert!(McConfig::new(Kind::Star, 2.0, 10, 1).is_err());
        let cfg = McConfig::new(Kind::Star, 2.0, 1000, 1).unwrap();
        assert!(matches!(mc_lp(&PointSet::empty(1).unwrap(), &cfg), Err(Error::EmptyPointSet)));
    }

    #[test]
    fn singleton_identities_within_three_sigma() {
        let cases = [
            (Kind::Extreme, 0.5, 1.0 / 12f64.sqrt()),
            (Kind::Star, 0.0, 1.0 / 3f64.sqrt()),
            (Kind::Periodic, 0.3, 1.0 / 6f64.sqrt()),
        ];
        for (kind, x, exact) in cases {
            let cfg = McConfig::new(kind, 2.0, 1_000_000, 2024).unwrap();
            let est = mc_lp(&set1(&[x]), &cfg).unwrap();
            let se = est.stderr().unwrap();
            assert!(se > 0.0);
            assert!((est.value - exact).abs() <= 3.0 * se, "{kind}: {} vs {exact} (se {se})", est.value);
        }
    }

    #[test]
    fn bitwise_reproducible() {
        let p = set1(&[0.1, 0.7, 0.4]);
        let cfg = McConfig::new(Kind::Extreme, 1.5, 200_000, 42).unwrap();
        assert_eq!(mc_lp(&p, &cfg).unwrap(), mc_lp(&p, &cfg).unwrap());
        let other = McConfig { seed: 43, ..cfg };
        assert_ne!(mc_lp(&p, &cfg).unwrap().value, mc_lp(&p, &other).unwrap().value);
    }

    #[test]
    fn moments_merge_matches_single_pass() {
        let xs: Vec<f64> = (0..1000).map(|i| ((i * 7919) % 1009) as f64 / 13.0).collect();
        let mut whole = Moments::default();
        xs.iter().for_each(|&x| whole.push(x));
        let mut a = Moments::default();
        let mut b = Moments::default();
        xs[..377].iter().for_each(|&x| a.push(x));
        xs[377..].iter().for_each(|&x| b.push(x));
        a.merge(&b);
        assert!((a.mean - whole.mean).abs() < 1e-12 * whole.mean);
        assert!((a.m2 - whole.m2).abs() < 1e-9 * whole.m2);
    }
}
