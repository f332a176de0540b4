//! The single random source threaded through every generator.
//!
//! ChaCha8 seeded from a `u64` is fully specified, so a `(config, seed)` pair
//! gives the same stream on every platform, including `wasm32`. Bounded draws
//! go through `u64` so they do not depend on the width of `usize`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type GenRng = ChaCha8Rng;

pub fn from_seed(seed: u64) -> GenRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform integer in `0..bound`. `bound` must be positive.
#[inline]
pub fn below<R: Rng + ?Sized>(rng: &mut R, bound: usize) -> usize {
    debug_assert!(bound > 0);
    rng.random_range(0..bound as u64) as usize
}

/// Uniform integer in `lo..hi`.
#[inline]
pub fn between<R: Rng + ?Sized>(rng: &mut R, lo: usize, hi: usize) -> usize {
    debug_assert!(lo < hi);
    lo + below(rng, hi - lo)
}

/// Uniform real in `[0, 1)`.
#[inline]
pub fn unit<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.random::<f64>()
}
