//! Seeded, splittable random streams for reproducible Monte Carlo.
//!
//! Each `(seed, stream)` pair names an independent ChaCha8 stream, so
//! parallel workers draw from disjoint substreams and results do not depend
//! on how work was scheduled. The Gaussian transform is a fixed Box–Muller
//! on 53-bit uniform doubles rather than a library sampler, so the exact
//! output sequence is part of this crate's contract.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

const U53: f64 = 1.0 / (1u64 << 53) as f64;

/// A deterministic random stream identified by `(seed, stream)`.
#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    stream: u64,
    rng: ChaCha8Rng,
    spare_gaussian: Option<f64>,
}

impl RngStream {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        RngStream {
            seed,
            stream,
            rng,
            spare_gaussian: None,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream(&self) -> u64 {
        self.stream
    }

    /// Uniform double in [0, 1) with 53 random bits.
    pub fn uniform(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * U53
    }

    /// Uniform double in (0, 1]; safe as a logarithm argument.
    fn uniform_open_zero(&mut self) -> f64 {
        ((self.rng.next_u64() >> 11) as f64 + 1.0) * U53
    }

    /// Standard normal draw via Box–Muller. Generates pairs; the second
    /// value of each pair is cached for the next call on this stream.
    pub fn gaussian(&mut self) -> f64 {
        if let Some(g) = self.spare_gaussian.take() {
            return g;
        }
        let r = (-2.0 * self.uniform_open_zero().ln()).sqrt();
        let (s, c) = (std::f64::consts::TAU * self.uniform()).sin_cos();
        self.spare_gaussian = Some(r * s);
        r * c
    }

    /// m i.i.d. standard normal draws.
    pub fn gaussian_vector(&mut self, m: usize) -> Vec<f64> {
        let mut out = vec![0.0; m];
        self.fill_gaussian(&mut out);
        out
    }

    pub fn fill_gaussian(&mut self, out: &mut [f64]) {
        for v in out {
            *v = self.gaussian();
        }
    }
}
