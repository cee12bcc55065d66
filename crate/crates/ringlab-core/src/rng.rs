//! Small deterministic pseudo-random generator for randomized checks.
//!
//! Randomized searches in this crate must be reproducible, so they all
//! run off this fixed-algorithm generator (splitmix64) seeded
//! explicitly; nothing reads entropy from the environment.

/// Default seed for randomized verification passes.
pub const DEFAULT_SEED: u64 = 0x5EED_5EED_0451_0451;

/// splitmix64 generator. Passes through every `u64` exactly once over
/// its period and is plenty for test-case sampling.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-enough value in `[0, bound)`; `bound` must be nonzero.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        // Rejection sampling to avoid modulo bias on small bounds.
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }
}
