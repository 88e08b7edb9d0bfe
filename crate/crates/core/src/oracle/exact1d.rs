//! Exact star and extreme `L_p` discrepancy in one dimension for any real
//! `p >= 1`.
//!
//! With breakpoints `0 = z_0 < z_1 < … < z_M = 1` (the distinct point
//! coordinates plus the endpoints) the counting function `#{x < t}` equals a
//! constant `c_a` on each open cell `(z_a, z_{a+1})`. The star integrand on a
//! cell is `|c_a - N t|^p`, integrated with the antiderivative
//! `G(c) = sign(c)|c|^{p+1}/(p+1)`. For the extreme discrepancy with `u` in
//! cell `a` and `v` in cell `b > a` the integrand is `|m - N(v - u)|^p` with
//! `m = c_b - c_a`; the rectangle integral is a mixed second difference of
//! `H(c) = |c|^{p+2}/((p+1)(p+2))` divided by `N²`. Cells paired with
//! themselves contribute `N^p L^{p+2}/((p+1)(p+2))`.

use super::AbsPow;
use crate::error::{Error, Result};
use crate::estimate::{Estimate, Kind, Method};
use crate::points::PointSet;
use crate::summation::KernelAccumulator;

struct Cells {
    /// Breakpoints including 0 and 1.
    z: Vec<f64>,
    /// `#{x < t}` on cell `(z_a, z_{a+1})`.
    count: Vec<f64>,
}

fn cells(points: &PointSet) -> Cells {
    let mut xs = points.axis(0);
    xs.sort_by(f64::total_cmp);
    let mut z = vec![0.0];
    let mut count = Vec::with_capacity(xs.len() + 1);
    let mut i = 0;
    while i < xs.len() && xs[i] == 0.0 {
        i += 1;
    }
    count.push(i as f64);
    while i < xs.len() {
        let v = xs[i];
        while i < xs.len() && xs[i] == v {
            i += 1;
        }
        z.push(v);
        count.push(i as f64);
    }
    z.push(1.0);
    Cells { z, count }
}

/// Exact `L_p` discrepancy of a one-dimensional point set.
pub fn exact_lp_1d(points: &PointSet, kind: Kind, p: f64) -> Result<f64> {
    if points.dim() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, found: points.dim() });
    }
    points.require_nonempty()?;
    if !(p >= 1.0) || p.is_infinite() {
        return Err(Error::InvalidArgument(format!("exact piecewise integration needs finite p >= 1, got {p}")));
    }
    let integral = match kind {
        Kind::Star => star_integral(points, p),
        Kind::Extreme => extreme_integral(points, p),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "exact piecewise integration supports star|extreme, not {kind}"
            )))
        }
    };
    Ok(integral.max(0.0).powf(1.0 / p))
}

pub fn exact_lp_1d_estimate(points: &PointSet, kind: Kind, p: f64) -> Result<Estimate> {
    let value = exact_lp_1d(points, kind, p)?;
    Ok(Estimate::exact(kind, p, value, Method::ExactPiecewise, points.len(), 1))
}

fn star_integral(points: &PointSet, p: f64) -> f64 {
    let n = points.len() as f64;
    let pow = AbsPow::new(p);
    let g = |c: f64| c.signum() * pow.of_shifted(c, 1) / (p + 1.0);
    let Cells { z, count } = cells(points);
    let mut acc = KernelAccumulator::new();
    for (a, &c) in count.iter().enumerate() {
        acc.add(g(c - n * z[a]));
        acc.add(-g(c - n * z[a + 1]));
    }
    acc.value() / n
}

fn extreme_integral(points: &PointSet, p: f64) -> f64 {
    let n = points.len() as f64;
    let pow = AbsPow::new(p);
    let norm = 1.0 / ((p + 1.0) * (p + 2.0));
    let h = |c: f64| pow.of_shifted(c, 2) * norm;
    let Cells { z, count } = cells(points);
    let cells = count.len();

    let mut diag = KernelAccumulator::new();
    for a in 0..cells {
        let len = z[a + 1] - z[a];
        diag.add(n.powf(p) * pow.of_shifted(len, 2) * norm);
    }

    let mut off = KernelAccumulator::new();
    for a in 0..cells {
        let (u0, u1) = (n * z[a], n * z[a + 1]);
        for b in a + 1..cells {
            let m = count[b] - count[a];
            let (v0, v1) = (n * z[b], n * z[b + 1]);
            off.add(h(m - v1 + u1));
            off.add(-h(m - v1 + u0));
            off.add(-h(m - v0 + u1));
            off.add(h(m - v0 + u0));
        }
    }
    let mut total = diag;
    total.merge(&off.scaled(-1.0 / (n * n)));
    total.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set1(xs: &[f64]) -> PointSet {
        PointSet::from_flat(1, xs.to_vec()).unwrap()
    }

    /// Midpoint-rule quadrature of the definitions on a fine grid.
    fn quadrature(xs: &[f64], kind: Kind, p: f64, m: usize) -> f64 {
        let n = xs.len() as f64;
        let h = 1.0 / m as f64;
        let count_lt = |t: f64| xs.iter().filter(|&&x| x < t).count() as f64;
        let star_d: Vec<f64> = (0..m)
            .map(|i| {
                let t = (i as f64 + 0.5) * h;
                count_lt(t) - n * t
            })
            .collect();
        match kind {
            Kind::Star => star_d.iter().map(|d| d.abs().powf(p)).sum::<f64>() * h,
            Kind::Extreme => {
                let mut s = 0.0;
                for i in 0..m {
                    for j in i + 1..m {
                        s += (star_d[j] - star_d[i]).abs().powf(p);
                    }
                }
                s * h * h
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn singleton_half() {
        let p = set1(&[0.5]);
        let r12 = 1.0 / 12f64.sqrt();
        assert!((exact_lp_1d(&p, Kind::Extreme, 2.0).unwrap() - r12).abs() < 1e-15);
        assert!((exact_lp_1d(&p, Kind::Star, 2.0).unwrap() - r12).abs() < 1e-15);
    }

    #[test]
    fn extreme_singleton_is_position_free_at_p2() {
        for x in [0.0, 0.2, 0.77] {
            let v = exact_lp_1d(&set1(&[x]), Kind::Extreme, 2.0).unwrap();
            assert!((v - 1.0 / 12f64.sqrt()).abs() < 1e-14);
        }
    }

    #[test]
    fn star_p1_of_zero_and_half() {
        // D(t) = 1 - 2t on (0, 1/2) and 2 - 2t on (1/2, 1); each piece integrates to 1/4.
        let v = exact_lp_1d(&set1(&[0.0, 0.5]), Kind::Star, 1.0).unwrap();
        assert!((v - 0.5).abs() < 1e-15);
    }

    #[test]
    fn matches_quadrature_for_fractional_p() {
        let xs = [0.13, 0.5, 0.5, 0.81, 0.02];
        for kind in [Kind::Star, Kind::Extreme] {
            for p in [1.0, 1.5, 3.0] {
                let exact = exact_lp_1d(&set1(&xs), kind, p).unwrap().powf(p);
                let quad = quadrature(&xs, kind, p, 4000);
                assert!((exact - quad).abs() < 2e-3 * exact, "{kind} p={p}: {exact} vs {quad}");
            }
        }
    }

    #[test]
    fn ties_and_zero_coordinates() {
        let a = exact_lp_1d(&set1(&[0.0, 0.0, 0.25]), Kind::Extreme, 2.5).unwrap();
        let b = quadrature(&[0.0, 0.0, 0.25], Kind::Extreme, 2.5, 4000).powf(1.0 / 2.5);
        assert!((a - b).abs() < 1e-3 * b);
    }

    #[test]
    fn rejects_bad_inputs() {
        let p2 = PointSet::from_flat(2, vec![0.1, 0.2]).unwrap();
        assert!(matches!(exact_lp_1d(&p2, Kind::Star, 2.0), Err(Error::DimensionMismatch { .. })));
        assert!(exact_lp_1d(&set1(&[0.1]), Kind::Periodic, 2.0).is_err());
        assert!(exact_lp_1d(&set1(&[0.1]), Kind::Star, f64::INFINITY).is_err());
        assert!(exact_lp_1d(&set1(&[0.1]), Kind::Star, 0.9).is_err());
    }
}
