//! Seeded randomness. Every random fixture derives from one 64-bit seed
//! through ChaCha8, a counter-based generator, so reruns are bit-identical.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactlin::Field;

pub const DEFAULT_SEED: u64 = 0x5EED_2024;

/// Coefficients of random fixtures are integers in `[-BOUND, BOUND]`, so the
/// same seed produces the same integer data over every field.
pub const COEFF_BOUND: i64 = 97;

pub struct SeededRng {
    inner: ChaCha8Rng,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng {
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Independent stream for a labelled sub-task.
    pub fn derive(seed: u64, stream: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(stream);
        SeededRng { inner }
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.inner.random_range(lo..=hi)
    }

    pub fn coeff(&mut self) -> i64 {
        self.int(-COEFF_BOUND, COEFF_BOUND)
    }

    pub fn nonzero_coeff(&mut self) -> i64 {
        loop {
            let c = self.coeff();
            if c != 0 {
                return c;
            }
        }
    }

    pub fn elem<F: Field>(&mut self, field: &F) -> F::Elem {
        field.from_i64(self.coeff())
    }

    pub fn u64(&mut self) -> u64 {
        self.inner.random()
    }
}
