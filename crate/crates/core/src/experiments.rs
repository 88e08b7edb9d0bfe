//! Numerical experiments: inequality checks between discrepancy kinds, the
//! transference from lifted point sets back to sequence prefixes, growth
//! scans against `(log N)^{d/2}`, log-exponent fits and the van der Corput
//! star constant.
//!
//! Every check produces a [`VerdictReport`] whose cases pass when
//! `lhs >= rhs - tol`.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::estimate::Kind;
use crate::exact_l2::{self, IncrementalL2};
use crate::format::json_num;
use crate::oracle::{exact_lp_1d, linf_exact_small, mc_lp, McConfig, LINF_MAX_DIM, LINF_MAX_POINTS};
use crate::points::PointSet;
use crate::rng::uniform_point_set;
use crate::sequences::{lift, SequenceGen};

/// Relative tolerance for the inequality suite.
pub const INEQUALITY_TOL: f64 = 1e-9;
/// Absolute tolerance for the exact transference check.
pub const LEMMA1_TOL: f64 = 1e-9;
/// Default cap on `N` for the exact transference check.
pub const LEMMA1_DEFAULT_MAX_N: usize = 1 << 10;

/// `1/(6 ln 2)`, the limiting ratio of the van der Corput star L2
/// discrepancy to `ln N`.
pub fn vdc_star_limit() -> f64 {
    1.0 / (6.0 * std::f64::consts::LN_2)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRow {
    pub n: usize,
    pub value: f64,
    pub rate: f64,
    pub ratio: f64,
}

/// One comparison `lhs >= rhs - tol`.
#[derive(Debug, Clone, PartialEq)]
pub struct Case {
    pub label: String,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub tol: f64,
    pub pass: bool,
    pub p: f64,
    pub d: usize,
    pub n: usize,
    pub seed: Option<u64>,
}

impl Case {
    pub fn new(label: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        Self {
            label: label.into(),
            lhs,
            rhs,
            margin: lhs - rhs,
            tol,
            pass: lhs >= rhs - tol,
            p: 2.0,
            d: 0,
            n: 0,
            seed: None,
        }
    }

    pub fn meta(mut self, p: f64, d: usize, n: usize, seed: Option<u64>) -> Self {
        (self.p, self.d, self.n, self.seed) = (p, d, n, seed);
        self
    }

    fn to_json(&self) -> Value {
        json!({
            "label": self.label,
            "lhs": json_num(self.lhs),
            "rhs": json_num(self.rhs),
            "margin": json_num(self.margin),
            "tol": json_num(self.tol),
            "pass": self.pass,
            "p": json_num(self.p),
            "d": self.d,
            "n": self.n,
            "seed": self.seed,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerdictReport {
    pub claim: String,
    pub cases: Vec<Case>,
    /// Extra named figures (suprema, fitted exponents, …).
    pub summary: Vec<(String, f64)>,
}

impl VerdictReport {
    pub fn new(claim: impl Into<String>) -> Self {
        Self { claim: claim.into(), cases: Vec::new(), summary: Vec::new() }
    }

    pub fn pass(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> usize {
        self.cases.iter().filter(|c| !c.pass).count()
    }

    /// Smallest `margin + tol` over all cases.
    pub fn worst_slack(&self) -> Option<f64> {
        self.cases.iter().map(|c| c.margin + c.tol).min_by(f64::total_cmp)
    }

    pub fn summary_value(&self, key: &str) -> Option<f64> {
        self.summary.iter().find(|(k, _)| k == key).map(|&(_, v)| v)
    }

    pub fn extend(&mut self, other: VerdictReport) {
        self.cases.extend(other.cases);
        self.summary.extend(other.summary);
    }

    pub fn to_json(&self) -> Value {
        let mut summary = Map::new();
        for (k, v) in &self.summary {
            // Keys ending in `_n` hold point counts.
            let value = if k.ends_with("_n") && v.fract() == 0.0 && v.abs() < 9e15 {
                Value::from(*v as i64)
            } else {
                json_num(*v)
            };
            summary.insert(k.clone(), value);
        }
        json!({
            "claim": self.claim,
            "pass": self.pass(),
            "cases_total": self.cases.len(),
            "failures": self.failures(),
            "summary": summary,
            "cases": self.cases.iter().map(Case::to_json).collect::<Vec<_>>(),
        })
    }
}

fn rel_tol(a: f64, b: f64) -> f64 {
    INEQUALITY_TOL * a.abs().max(b.abs())
}

/// Draws `trials` uniform sets of `n` points for each dimension and checks
/// `extreme_l2 <= star_l2`, `extreme_l2 <= periodic_l2` and, when the exact
/// supremum is available (`d <= 2`, `N <= 64`),
/// `linf_star <= linf_extreme <= 2^d linf_star`.
///
/// Trial `t` in dimension `d` uses RNG stream `(d << 32) | t`.
pub fn inequality_suite(trials: usize, dims: &[usize], n: usize, seed: u64) -> Result<VerdictReport> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("N must be at least 1".into()));
    }
    let mut report = VerdictReport::new("inequalities");
    for &d in dims {
        if d == 0 {
            return Err(Error::ZeroDimension);
        }
        for t in 0..trials {
            let stream = ((d as u64) << 32) | t as u64;
            let pts = uniform_point_set(d, n, seed, stream)?;
            report.cases.extend(inequality_cases(&pts, Some(seed))?.into_iter().map(|c| {
                let label = format!("{} d={d} trial={t}", c.label);
                Case { label, ..c }
            }));
        }
    }
    Ok(report)
}

/// The inequality checks for a single point set.
pub fn inequality_cases(points: &PointSet, seed: Option<u64>) -> Result<Vec<Case>> {
    let (d, n) = (points.dim(), points.len());
    let star = exact_l2::star_l2(points)?;
    let extreme = exact_l2::extreme_l2(points)?;
    let periodic = exact_l2::periodic_l2(points)?;
    let mut cases = vec![
        Case::new("star_l2 >= extreme_l2", star, extreme, rel_tol(star, extreme)).meta(2.0, d, n, seed),
        Case::new("periodic_l2 >= extreme_l2", periodic, extreme, rel_tol(periodic, extreme)).meta(2.0, d, n, seed),
    ];
    if d <= LINF_MAX_DIM && n <= LINF_MAX_POINTS {
        let ls = linf_exact_small(points, Kind::Star)?;
        let le = linf_exact_small(points, Kind::Extreme)?;
        let cap = 2f64.powi(d as i32) * ls;
        let inf = f64::INFINITY;
        cases.push(Case::new("linf_extreme >= linf_star", le, ls, rel_tol(le, ls)).meta(inf, d, n, seed));
        cases.push(Case::new("2^d linf_star >= linf_extreme", cap, le, rel_tol(cap, le)).meta(inf, d, n, seed));
    }
    Ok(cases)
}

/// Running maximum of the extreme L2 discrepancy over prefixes:
/// `out[i] = max_{1 <= n <= i+1} L(y_0..y_{n-1})`.
pub fn prefix_extreme_maxima(gen: &SequenceGen, n: usize) -> Result<Vec<f64>> {
    let mut inc = IncrementalL2::new(Kind::Extreme, gen.dim())?;
    let mut term = vec![0.0; gen.dim()];
    let mut best = f64::NEG_INFINITY;
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        gen.term_into(k as u64, &mut term);
        inc.push(&term)?;
        best = best.max(inc.value()?);
        out.push(best);
    }
    Ok(out)
}

/// Checks, for every `N' <= n`,
/// `max_{m <= N'} L2extr(y_0..y_{m-1}) >= 2^{-1/2} L2extr(lift(N')) - 2^{-d/2}`
/// where `d` is the sequence dimension and the lift lives in `d + 1`.
///
/// Refuses `n` above [`LEMMA1_DEFAULT_MAX_N`] unless `allow_large`.
pub fn lemma1_verify(gen: &SequenceGen, n: usize, allow_large: bool) -> Result<VerdictReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be at least 1".into()));
    }
    if n > LEMMA1_DEFAULT_MAX_N && !allow_large {
        return Err(Error::GuardExceeded(format!(
            "N = {n} exceeds the default cap {LEMMA1_DEFAULT_MAX_N}; pass the large-N override"
        )));
    }
    let d = gen.dim();
    let maxima = prefix_extreme_maxima(gen, n)?;
    let shift = 2f64.powf(-(d as f64) / 2.0);
    let mut report = VerdictReport::new("lemma1");
    let mut worst = f64::INFINITY;
    for m in 1..=n {
        let lifted = exact_l2::extreme_l2(&lift(gen, m)?)?;
        let rhs = std::f64::consts::FRAC_1_SQRT_2 * lifted - shift;
        let case = Case::new(format!("{} N={m}", gen.label()), maxima[m - 1], rhs, LEMMA1_TOL).meta(2.0, d, m, None);
        worst = worst.min(case.margin);
        report.cases.push(case);
    }
    report.summary.push(("min_slack".into(), worst));
    Ok(report)
}

/// Monte Carlo variant of [`lemma1_verify`] for `p != 2`:
/// `max_m L_p(prefix m) >= 2^{1/p - 1} L_p(lift(N')) - 2^{-d/p}`, checked at
/// `N'` a power of two or `n`, with three standard errors of slack on each
/// side. One-dimensional prefixes are integrated exactly.
pub fn lemma1_verify_mc(gen: &SequenceGen, n: usize, p: f64, samples: u64, seed: u64) -> Result<VerdictReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be at least 1".into()));
    }
    let d = gen.dim();
    let prefix_all = crate::sequences::prefix(gen, n)?;
    let mut report = VerdictReport::new("lemma1-mc");
    let mut best = (f64::NEG_INFINITY, 0.0);
    for m in 1..=n {
        let pts = prefix_all.prefix(m);
        let (v, se) = if d == 1 {
            (exact_lp_1d(&pts, Kind::Extreme, p)?, 0.0)
        } else {
            let est = mc_lp(&pts, &McConfig::new(Kind::Extreme, p, samples, seed)?)?;
            (est.value, est.stderr().unwrap_or(0.0))
        };
        if v > best.0 {
            best = (v, se);
        }
        if m.is_power_of_two() || m == n {
            let lifted = mc_lp(&lift(gen, m)?, &McConfig::new(Kind::Extreme, p, samples, seed)?)?;
            let factor = 2f64.powf(1.0 / p - 1.0);
            let rhs = factor * lifted.value - 2f64.powf(-(d as f64) / p);
            let tol = 3.0 * (best.1 + factor * lifted.stderr().unwrap_or(0.0));
            report.cases.push(Case::new(format!("{} N={m}", gen.label()), best.0, rhs, tol).meta(p, d, m, Some(seed)));
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    /// The value at each listed `N`.
    Pointwise,
    /// The largest value over all prefixes of length `<= N`.
    Envelope,
}

/// Monte Carlo settings for scans that cannot be evaluated exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McSettings {
    pub samples: u64,
    pub seed: u64,
}

impl Default for McSettings {
    fn default() -> Self {
        Self { samples: 100_000, seed: crate::DEFAULT_SEED }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthScan {
    pub label: String,
    pub kind: Kind,
    pub p: f64,
    pub d: usize,
    pub mode: ScanMode,
    pub rows: Vec<ScanRow>,
}

impl GrowthScan {
    /// `(N, ratio)` with the largest ratio; the first one on ties.
    pub fn max_ratio(&self) -> Option<(usize, f64)> {
        self.rows.iter().fold(None, |best, r| match best {
            Some((_, b)) if b >= r.ratio => best,
            _ => Some((r.n, r.ratio)),
        })
    }

    pub fn min_ratio(&self) -> Option<(usize, f64)> {
        self.rows.iter().fold(None, |best, r| match best {
            Some((_, b)) if b <= r.ratio => best,
            _ => Some((r.n, r.ratio)),
        })
    }

    /// Running maximum of the ratio along the scan.
    pub fn running_max(&self) -> Vec<f64> {
        running(&self.rows, f64::max)
    }

    pub fn running_min(&self) -> Vec<f64> {
        running(&self.rows, f64::min)
    }
}

fn running(rows: &[ScanRow], f: fn(f64, f64) -> f64) -> Vec<f64> {
    let mut acc: Option<f64> = None;
    rows.iter()
        .map(|r| {
            let v = acc.map_or(r.ratio, |a| f(a, r.ratio));
            acc = Some(v);
            v
        })
        .collect()
}

fn check_ns(ns: &[usize]) -> Result<()> {
    if ns.is_empty() {
        return Err(Error::InvalidArgument("empty list of N".into()));
    }
    if let Some(n) = ns.iter().find(|&&n| n < 2) {
        return Err(Error::InvalidArgument(format!("scan needs N >= 2 so that log N > 0, got {n}")));
    }
    Ok(())
}

/// Exact L2 (or diaphony) of every prefix up to `max(ns)`, reduced to the
/// requested `N` by `mode`.
///
/// With `weighted`, the envelope is taken of `n·value(n)` and divided by `N`
/// again, which is the meaningful envelope for decreasing quantities.
fn incremental_values(gen: &SequenceGen, kind: Kind, ns: &[usize], mode: ScanMode, weighted: bool) -> Result<Vec<f64>> {
    let top = *ns.iter().max().expect("nonempty");
    let mut inc = IncrementalL2::new(kind, gen.dim())?;
    let mut term = vec![0.0; gen.dim()];
    let mut values = Vec::with_capacity(top);
    let mut best = f64::NEG_INFINITY;
    for k in 0..top {
        gen.term_into(k as u64, &mut term);
        inc.push(&term)?;
        let v = inc.value()?;
        let w = if weighted { (k + 1) as f64 } else { 1.0 };
        best = best.max(v * w);
        values.push(match mode {
            ScanMode::Pointwise => v,
            ScanMode::Envelope => best / w,
        });
    }
    Ok(ns.iter().map(|&n| values[n - 1]).collect())
}

/// Values of `kind` at the given `N` against the rate `(ln N)^{d/2}`.
///
/// `p = 2` is exact for every kind. Otherwise one-dimensional star and
/// extreme values are integrated exactly and everything else is a Monte
/// Carlo estimate; envelope mode needs `p = 2`.
pub fn growth_scan(
    gen: &SequenceGen,
    kind: Kind,
    p: f64,
    ns: &[usize],
    mode: ScanMode,
    mc: McSettings,
) -> Result<GrowthScan> {
    check_ns(ns)?;
    let d = gen.dim();
    let values = if p == 2.0 {
        incremental_values(gen, kind, ns, mode, false)?
    } else {
        if mode == ScanMode::Envelope {
            return Err(Error::InvalidArgument("envelope scans need p = 2".into()));
        }
        if kind == Kind::Diaphony {
            return Err(Error::InvalidArgument("the diaphony is an L2 quantity; use p = 2".into()));
        }
        let top = *ns.iter().max().expect("nonempty");
        let all = crate::sequences::prefix(gen, top)?;
        ns.iter()
            .map(|&n| {
                let pts = all.prefix(n);
                if d == 1 && matches!(kind, Kind::Star | Kind::Extreme) {
                    exact_lp_1d(&pts, kind, p)
                } else {
                    Ok(mc_lp(&pts, &McConfig::new(kind, p, mc.samples, mc.seed)?)?.value)
                }
            })
            .collect::<Result<Vec<f64>>>()?
    };
    let rows = ns
        .iter()
        .zip(values)
        .map(|(&n, value)| {
            let rate = (n as f64).ln().powf(d as f64 / 2.0);
            ScanRow { n, value, rate, ratio: value / rate }
        })
        .collect();
    Ok(GrowthScan { label: gen.label(), kind, p, d, mode, rows })
}

/// Diaphony of prefixes against the rate `(ln N)^{d/2} / N`.
///
/// In envelope mode the value at `N` is `max_{n <= N} n F_n / N`.
pub fn diaphony_scan(gen: &SequenceGen, ns: &[usize], mode: ScanMode) -> Result<GrowthScan> {
    check_ns(ns)?;
    let d = gen.dim();
    let values = incremental_values(gen, Kind::Diaphony, ns, mode, true)?;
    let rows = ns
        .iter()
        .zip(values)
        .map(|(&n, value)| {
            let rate = (n as f64).ln().powf(d as f64 / 2.0) / n as f64;
            ScanRow { n, value, rate, ratio: value / rate }
        })
        .collect();
    Ok(GrowthScan { label: gen.label(), kind: Kind::Diaphony, p: 2.0, d, mode, rows })
}

/// Least-squares line `ln value = alpha ln ln N + intercept`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogFit {
    pub alpha: f64,
    pub intercept: f64,
    /// Root mean square of the residuals in `ln value`.
    pub residual: f64,
}

pub fn fit_log_exponent(rows: &[ScanRow]) -> Result<LogFit> {
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| {
            if r.n < 3 {
                return Err(Error::InvalidArgument(format!("fit needs N >= 3, got {}", r.n)));
            }
            if !(r.value > 0.0) || !r.value.is_finite() {
                return Err(Error::InvalidArgument(format!("fit needs positive values, got {} at N={}", r.value, r.n)));
            }
            Ok(((r.n as f64).ln().ln(), r.value.ln()))
        })
        .collect::<Result<_>>()?;
    fit_line(&pts)
}

/// Ordinary least squares `y = a x + b` with the RMS residual.
pub fn fit_line(pts: &[(f64, f64)]) -> Result<LogFit> {
    if pts.len() < 3 {
        return Err(Error::InvalidArgument(format!("fit needs at least 3 points, got {}", pts.len())));
    }
    let m = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if !(sxx > 1e-300) {
        return Err(Error::InvalidArgument("degenerate fit: all abscissae are equal".into()));
    }
    let alpha = sxy / sxx;
    let intercept = my - alpha * mx;
    let residual = (pts.iter().map(|p| (p.1 - alpha * p.0 - intercept).powi(2)).sum::<f64>() / m).sqrt();
    Ok(LogFit { alpha, intercept, residual })
}

#[derive(Debug, Clone, PartialEq)]
pub struct VdcStarConstant {
    pub max_n: usize,
    /// `sup_{2 <= N <= max_n} L2star(N) / ln N`.
    pub sup_ratio: f64,
    pub argmax: usize,
    /// `(2^k, sup over N <= 2^k)` for every power of two in range, and `max_n`.
    pub checkpoints: Vec<(usize, f64)>,
    /// Same sup restricted to `N >= 1024` (0 when `max_n < 1024`).
    pub tail_sup_ratio: f64,
    pub tail_argmax: usize,
    /// Least-squares slope of `L2star` against `ln N` over
    /// `N = (4^m - 1)/3 >= 21`, the subsequence of slowest convergence.
    pub subsequence_slope: Option<f64>,
}

/// Star L2 discrepancy of every base-2 van der Corput prefix `N <= max_n`.
pub fn vdc_star_constant(max_n: usize) -> Result<VdcStarConstant> {
    if max_n < 16 {
        return Err(Error::InvalidArgument(format!("max N must be at least 16, got {max_n}")));
    }
    let gen = SequenceGen::van_der_corput(2)?;
    let mut inc = IncrementalL2::new(Kind::Star, 1)?;
    let (mut sup, mut arg) = (f64::NEG_INFINITY, 0);
    let (mut tail, mut tail_arg) = (0.0, 0);
    let mut checkpoints = Vec::new();
    let mut sub = Vec::new();
    let mut next_sub = 21;
    for k in 0..max_n {
        inc.push(&gen.term(k as u64))?;
        let n = k + 1;
        if n < 2 {
            continue;
        }
        let l = inc.value()?;
        let ratio = l / (n as f64).ln();
        if ratio > sup {
            (sup, arg) = (ratio, n);
        }
        if n >= 1024 && ratio > tail {
            (tail, tail_arg) = (ratio, n);
        }
        if n.is_power_of_two() || n == max_n {
            checkpoints.push((n, sup));
        }
        if n == next_sub {
            sub.push(((n as f64).ln(), l));
            next_sub = 4 * next_sub + 1;
        }
    }
    let subsequence_slope = fit_line(&sub).ok().map(|f| f.alpha);
    Ok(VdcStarConstant {
        max_n,
        sup_ratio: sup,
        argmax: arg,
        checkpoints,
        tail_sup_ratio: tail,
        tail_argmax: tail_arg,
        subsequence_slope,
    })
}

impl VdcStarConstant {
    /// Sup over `N <= n` from the checkpoints.
    pub fn sup_up_to(&self, n: usize) -> Option<f64> {
        self.checkpoints.iter().find(|c| c.0 == n).map(|c| c.1)
    }

    /// Bracket `[lower, upper]` on the sup plus monotonicity of the running
    /// sup between `2^10` and `max_n`.
    pub fn verdict(&self, lower: f64, upper: f64) -> VerdictReport {
        let mut r = VerdictReport::new("vdc-constant");
        let n = self.max_n;
        r.cases.push(Case::new("sup ratio >= lower", self.sup_ratio, lower, 0.0).meta(2.0, 1, n, None));
        r.cases.push(Case::new("upper >= sup ratio", upper, self.sup_ratio, 0.0).meta(2.0, 1, n, None));
        if let Some(early) = self.sup_up_to(1024).filter(|_| n > 1024) {
            r.cases.push(Case::new("sup(N<=max) >= sup(N<=1024)", self.sup_ratio, early, 0.0).meta(2.0, 1, n, None));
        }
        r.summary.push(("sup_ratio".into(), self.sup_ratio));
        r.summary.push(("argmax_n".into(), self.argmax as f64));
        r.summary.push(("tail_sup_ratio".into(), self.tail_sup_ratio));
        r.summary.push(("tail_argmax_n".into(), self.tail_argmax as f64));
        if let Some(s) = self.subsequence_slope {
            r.summary.push(("subsequence_slope".into(), s));
        }
        r.summary.push(("limit".into(), vdc_star_limit()));
        r
    }
}

/// Geometric list `2^a, 2^{a+1}, …, 2^b`.
pub fn powers_of_two(a: u32, b: u32) -> Vec<usize> {
    (a..=b).map(|k| 1usize << k).collect()
}

/// Cases `lo <= alpha <= hi` for a fitted exponent.
pub fn bracket_cases(label: &str, alpha: f64, lo: f64, hi: f64, d: usize, n: usize) -> [Case; 2] {
    [
        Case::new(format!("{label} alpha >= {lo}"), alpha, lo, 0.0).meta(2.0, d, n, None),
        Case::new(format!("{hi} >= {label} alpha"), hi, alpha, 0.0).meta(2.0, d, n, None),
    ]
}

/// Envelope scans of the base-2 van der Corput sequence over `ns` with fitted
/// log-exponents for the extreme and star L2 discrepancies and for
/// `N F_N`, checked against brackets around `1/2`, `1` and `1/2`.
pub fn growth_suite(ns: &[usize]) -> Result<VerdictReport> {
    let gen = SequenceGen::van_der_corput(2)?;
    let top = *ns.iter().max().unwrap_or(&0);
    let mut report = VerdictReport::new("growth");
    let mc = McSettings::default();
    for (kind, lo, hi) in [(Kind::Extreme, 0.4, 0.6), (Kind::Star, 0.9, 1.1)] {
        let scan = growth_scan(&gen, kind, 2.0, ns, ScanMode::Envelope, mc)?;
        let fit = fit_log_exponent(&scan.rows)?;
        report.cases.extend(bracket_cases(kind.as_str(), fit.alpha, lo, hi, 1, top));
        report.summary.push((format!("{kind}_alpha"), fit.alpha));
        report.summary.push((format!("{kind}_residual"), fit.residual));
        if let Some((_, r)) = scan.max_ratio() {
            report.summary.push((format!("{kind}_max_ratio"), r));
        }
    }
    let dia = diaphony_scan(&gen, ns, ScanMode::Envelope)?;
    let scaled: Vec<ScanRow> = dia.rows.iter().map(|r| ScanRow { value: r.value * r.n as f64, ..*r }).collect();
    let fit = fit_log_exponent(&scaled)?;
    report.cases.extend(bracket_cases("N*diaphony", fit.alpha, 0.4, 0.6, 1, top));
    report.summary.push(("n_diaphony_alpha".into(), fit.alpha));
    report.summary.push(("n_diaphony_residual".into(), fit.residual));
    Ok(report)
}
