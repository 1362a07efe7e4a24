//! Seeded generation of test data.
//!
//! All pseudo-random rationals come from ChaCha8 seeded with a 64-bit value,
//! numerators uniform in `[−20, 20]` and denominators in `[1, 10]`, so a run is
//! reproducible from its seed alone.

use alloc::vec::Vec;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::ring::{all_distinct, Rational};

pub const NUMERATOR_RANGE: (i64, i64) = (-20, 20);
pub const DENOMINATOR_RANGE: (i64, i64) = (1, 10);

pub struct SeededRationals {
    rng: ChaCha8Rng,
}

impl SeededRationals {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn next_rational(&mut self) -> Rational {
        let p = self.rng.gen_range(NUMERATOR_RANGE.0..=NUMERATOR_RANGE.1);
        let q = self.rng.gen_range(DENOMINATOR_RANGE.0..=DENOMINATOR_RANGE.1);
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    pub fn rationals(&mut self, count: usize) -> Vec<Rational> {
        (0..count).map(|_| self.next_rational()).collect()
    }

    /// `count` pairwise distinct rationals (redraws on collision).
    pub fn distinct(&mut self, count: usize) -> Vec<Rational> {
        loop {
            let v = self.rationals(count);
            if all_distinct(&v) {
                return v;
            }
        }
    }

    /// A value not in `avoid`.
    pub fn avoiding(&mut self, avoid: &[Rational]) -> Rational {
        loop {
            let r = self.next_rational();
            if !avoid.contains(&r) {
                return r;
            }
        }
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }
}
