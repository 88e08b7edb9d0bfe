//! Reproducible uniform streams for Monte Carlo sampling.
//!
//! The generator is ChaCha with 8 rounds. The 256-bit key is the seed as a
//! little-endian `u64` followed by 24 zero bytes; batch `b` uses stream id
//! `b`. A uniform real is `(next_u64 >> 11) * 2^-53`, which lies in
//! `[0, 1)`. Any ChaCha8 implementation reproduces these streams exactly.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::points::PointSet;

pub const RNG_NAME: &str = "chacha8";

/// Uniform stream for one sampling batch.
pub struct UniformStream {
    inner: ChaCha8Rng,
}

impl UniformStream {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&seed.to_le_bytes());
        let mut inner = ChaCha8Rng::from_seed(key);
        inner.set_stream(stream);
        Self { inner }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    #[inline]
    pub fn uniform(&mut self) -> f64 {
        (self.inner.next_u64() >> 11) as f64 * (1.0 / 9_007_199_254_740_992.0)
    }

    pub fn fill_uniform(&mut self, out: &mut [f64]) {
        for o in out {
            *o = self.uniform();
        }
    }
}

/// `n` points uniform in `[0,1)^dim`, drawn row by row from one stream.
pub fn uniform_point_set(dim: usize, n: usize, seed: u64, stream: u64) -> Result<PointSet> {
    let mut rng = UniformStream::new(seed, stream);
    let mut coords = vec![0.0; dim * n];
    rng.fill_uniform(&mut coords);
    PointSet::from_flat(dim, coords)
}
