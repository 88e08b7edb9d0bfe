//! Van der Corput and Halton sequences, and the lifting of a sequence prefix
//! to a point set one dimension higher.

use crate::error::{Error, Result};
use crate::points::PointSet;

/// Largest admissible index: digits of `k` are extracted exactly below 2^53.
pub const MAX_INDEX: u64 = 1 << 53;

/// Radical inverse of `k` in base `b`: if `k = Σ a_i b^i` the result is
/// `Σ a_i b^{-i-1}`.
///
/// The digits are reversed into an integer and divided by `b^m` once, which
/// is correctly rounded (and exact for power-of-two bases). When `b^m`
/// would exceed 2^53 the sum is evaluated by Horner's rule instead.
///
/// # Panics
/// If `b < 2` or `k >= 2^53`.
pub fn radical_inverse(k: u64, b: u32) -> f64 {
    assert!(b >= 2, "radical inverse base must be at least 2");
    assert!(k < MAX_INDEX, "sequence index {k} exceeds 2^53");
    let base = b as u64;
    let mut rest = k;
    let mut reversed: u64 = 0;
    let mut scale: u64 = 1;
    while rest > 0 {
        let (next_rev, o1) = reversed.overflowing_mul(base);
        let (next_scale, o2) = scale.overflowing_mul(base);
        if o1 || o2 || next_scale > MAX_INDEX {
            return radical_inverse_horner(k, base);
        }
        reversed = next_rev + rest % base;
        scale = next_scale;
        rest /= base;
    }
    reversed as f64 / scale as f64
}

fn radical_inverse_horner(k: u64, base: u64) -> f64 {
    let mut digits = Vec::with_capacity(64);
    let mut rest = k;
    while rest > 0 {
        digits.push(rest % base);
        rest /= base;
    }
    let inv = 1.0 / base as f64;
    let x = digits.iter().rev().fold(0.0, |acc, &a| (acc + a as f64) * inv);
    // Rounding in the fold can only reach 1.0 for pathological bases.
    if x >= 1.0 {
        1.0 - f64::EPSILON / 2.0
    } else {
        x
    }
}

/// A deterministic infinite sequence in `[0,1)^d`, indexed from zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceGen {
    VanDerCorput {
        base: u32,
    },
    /// Componentwise radical inverses; the bases must be pairwise coprime.
    Halton {
        bases: Vec<u32>,
    },
}

impl SequenceGen {
    pub fn van_der_corput(base: u32) -> Result<Self> {
        if base < 2 {
            return Err(Error::InvalidArgument(format!("van der Corput base must be >= 2, got {base}")));
        }
        Ok(SequenceGen::VanDerCorput { base })
    }

    pub fn halton(bases: Vec<u32>) -> Result<Self> {
        if bases.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if let Some(&b) = bases.iter().find(|&&b| b < 2) {
            return Err(Error::InvalidArgument(format!("Halton base must be >= 2, got {b}")));
        }
        for (i, &a) in bases.iter().enumerate() {
            for &b in &bases[i + 1..] {
                if gcd(a, b) != 1 {
                    return Err(Error::InvalidArgument(format!(
                        "Halton bases must be pairwise coprime: gcd({a}, {b}) != 1"
                    )));
                }
            }
        }
        Ok(SequenceGen::Halton { bases })
    }

    pub fn dim(&self) -> usize {
        match self {
            SequenceGen::VanDerCorput { .. } => 1,
            SequenceGen::Halton { bases } => bases.len(),
        }
    }

    /// Writes term `k` into `out` (length `dim()`).
    pub fn term_into(&self, k: u64, out: &mut [f64]) {
        match self {
            SequenceGen::VanDerCorput { base } => out[0] = radical_inverse(k, *base),
            SequenceGen::Halton { bases } => {
                for (o, &b) in out.iter_mut().zip(bases) {
                    *o = radical_inverse(k, b);
                }
            }
        }
    }

    pub fn term(&self, k: u64) -> Vec<f64> {
        let mut out = vec![0.0; self.dim()];
        self.term_into(k, &mut out);
        out
    }

    /// Short label used in reports; Halton is marked as a generic stand-in.
    pub fn label(&self) -> String {
        match self {
            SequenceGen::VanDerCorput { base } => format!("vdc(base={base})"),
            SequenceGen::Halton { bases } => {
                let b: Vec<String> = bases.iter().map(|b| b.to_string()).collect();
                format!("halton({}) [generic]", b.join(","))
            }
        }
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The first `n` terms `y_0, …, y_{n-1}` of the sequence.
pub fn prefix(gen: &SequenceGen, n: usize) -> Result<PointSet> {
    if n == 0 {
        return Err(Error::InvalidArgument("prefix length must be at least 1".into()));
    }
    let d = gen.dim();
    let mut coords = vec![0.0; n * d];
    for (k, row) in coords.chunks_exact_mut(d).enumerate() {
        gen.term_into(k as u64, row);
    }
    PointSet::from_flat(d, coords)
}

/// Lifts the first `n` terms of a sequence to the points `(y_k, k/n)` in
/// dimension `d + 1`.
pub fn lift(gen: &SequenceGen, n: usize) -> Result<PointSet> {
    lift_points(&prefix(gen, n)?, n)
}

/// Lifting applied to an explicit prefix: uses its first `n` points.
pub fn lift_points(seq_prefix: &PointSet, n: usize) -> Result<PointSet> {
    if n == 0 {
        return Err(Error::InvalidArgument("lift length must be at least 1".into()));
    }
    if seq_prefix.len() < n {
        return Err(Error::InvalidArgument(format!(
            "lift of length {n} needs {n} sequence terms, only {} given",
            seq_prefix.len()
        )));
    }
    let d = seq_prefix.dim();
    let mut coords = Vec::with_capacity(n * (d + 1));
    for k in 0..n {
        coords.extend_from_slice(seq_prefix.point(k));
        coords.push(k as f64 / n as f64);
    }
    PointSet::from_flat(d + 1, coords)
}
