//! Discrepancy values tagged with how they were obtained.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Which family of test sets (or which Fourier measure) a value refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Star,
    Extreme,
    Periodic,
    Diaphony,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Star => "star",
            Kind::Extreme => "extreme",
            Kind::Periodic => "periodic",
            Kind::Diaphony => "diaphony",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "star" => Ok(Kind::Star),
            "extreme" | "extr" => Ok(Kind::Extreme),
            "periodic" | "per" => Ok(Kind::Periodic),
            "diaphony" => Ok(Kind::Diaphony),
            _ => Err(Error::InvalidArgument(format!("unknown kind {s:?} (expected star|extreme|periodic|diaphony)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ExactClosedForm,
    ExactPiecewise,
    MonteCarlo,
    GridEnum,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::ExactClosedForm => "exact-closed-form",
            Method::ExactPiecewise => "exact-piecewise",
            Method::MonteCarlo => "monte-carlo",
            Method::GridEnum => "grid-enum",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Sampling metadata, present exactly for Monte Carlo estimates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sampling {
    pub stderr: f64,
    pub samples: u64,
    pub seed: u64,
    pub rng: &'static str,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Estimate {
    pub kind: Kind,
    /// Norm exponent in `[1, ∞]`.
    pub p: f64,
    pub value: f64,
    pub method: Method,
    pub n: usize,
    pub d: usize,
    pub sampling: Option<Sampling>,
}

impl Estimate {
    pub fn exact(kind: Kind, p: f64, value: f64, method: Method, n: usize, d: usize) -> Self {
        debug_assert!(method != Method::MonteCarlo);
        Self { kind, p, value, method, n, d, sampling: None }
    }

    pub fn stderr(&self) -> Option<f64> {
        self.sampling.map(|s| s.stderr)
    }
}

/// Parses a norm exponent: a real `>= 1` or `inf`.
pub fn parse_p(s: &str) -> Result<f64, Error> {
    let p = match s.trim() {
        "inf" | "infinity" | "Inf" | "∞" => f64::INFINITY,
        t => t.parse::<f64>().map_err(|_| Error::InvalidArgument(format!("cannot parse p = {t:?}")))?,
    };
    if p.is_nan() || p < 1.0 {
        return Err(Error::InvalidArgument(format!("p must lie in [1, inf], got {s}")));
    }
    Ok(p)
}
