//! Deterministic random-stream derivation.
//!
//! Every stochastic component draws from its own `ChaCha8` stream derived
//! from `(seed, purpose, index)`. Streams are independent of execution order,
//! so parallel and sequential runs consume identical randomness and results
//! are bitwise reproducible for a fixed seed.

use rand_chacha::ChaCha8Rng;
use rand_chacha::rand_core::SeedableRng;

/// The RNG used everywhere in the crate.
pub type SimRng = ChaCha8Rng;

/// SplitMix64 finalizer; full-avalanche mixing of one word.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derive an independent random stream from a master seed.
///
/// `purpose` namespaces the consumer (weight init, minibatch data, test set,
/// ...); `index` enumerates draws within that namespace.
pub fn substream(seed: u64, purpose: u64, index: u64) -> SimRng {
    let h = mix(mix(mix(seed) ^ purpose) ^ index);
    SimRng::seed_from_u64(h)
}

/// Stream purposes used by the trainer and harness.
pub mod purpose {
    pub const MODEL_INIT: u64 = 1;
    pub const PILOT: u64 = 2;
    pub const TRAIN_REALIZATION: u64 = 3;
    pub const TRAIN_BATCH: u64 = 4;
    pub const VALIDATION_REALIZATION: u64 = 5;
    pub const VALIDATION_BATCH: u64 = 6;
    pub const TEST_REALIZATION: u64 = 7;
    pub const TEST_BATCH: u64 = 8;
    pub const ORACLE_BATCH: u64 = 9;
}
