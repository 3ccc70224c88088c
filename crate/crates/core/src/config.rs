//! Exhaustive-versus-sampled checking.
//!
//! Every verifier that quantifies over tuples of group elements goes through
//! [`VerifyConfig::check_tuples`]. A domain with at most `exhaustive_limit`
//! tuples is scanned completely; larger domains are probed with `samples`
//! tuples drawn from a ChaCha generator seeded from `seed` and a per-check salt,
//! so repeated runs (and concurrent runs) report identical results.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub const DEFAULT_SEED: u64 = 0x5eed_2023;
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 1_000_000;
pub const DEFAULT_SAMPLES: usize = 100_000;
pub const DEFAULT_GROUP_CAP: usize = 1 << 21;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub exhaustive_limit: usize,
    pub samples: usize,
    pub seed: u64,
    pub group_cap: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            exhaustive_limit: DEFAULT_EXHAUSTIVE_LIMIT,
            samples: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
            group_cap: DEFAULT_GROUP_CAP,
        }
    }
}

/// How much of a domain a check actually covered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", content = "count", rename_all = "snake_case")]
pub enum Coverage {
    Exhaustive(u64),
    Sampled(u64),
}

impl Coverage {
    pub fn count(&self) -> u64 {
        match *self {
            Coverage::Exhaustive(c) | Coverage::Sampled(c) => c,
        }
    }

    pub fn is_exhaustive(&self) -> bool {
        matches!(self, Coverage::Exhaustive(_))
    }
}

impl VerifyConfig {
    pub fn with_seed(seed: u64) -> Self {
        VerifyConfig { seed, ..Default::default() }
    }

    pub fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    /// Runs `check` over the product domain `dims[0] × dims[1] × …`.
    ///
    /// Stops at the first tuple for which `check` returns `Some(witness)`.
    pub fn check_tuples<W>(
        &self,
        dims: &[usize],
        salt: u64,
        mut check: impl FnMut(&[usize]) -> Option<W>,
    ) -> (Coverage, Option<W>) {
        if dims.contains(&0) {
            return (Coverage::Exhaustive(0), None);
        }
        let total = dims
            .iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d))
            .unwrap_or(usize::MAX);
        let mut tuple = vec![0usize; dims.len()];
        if total <= self.exhaustive_limit {
            let mut done = 0u64;
            loop {
                done += 1;
                if let Some(w) = check(&tuple) {
                    return (Coverage::Exhaustive(done), Some(w));
                }
                // odometer increment, last coordinate fastest
                let mut k = dims.len();
                loop {
                    if k == 0 {
                        return (Coverage::Exhaustive(done), None);
                    }
                    k -= 1;
                    tuple[k] += 1;
                    if tuple[k] < dims[k] {
                        break;
                    }
                    tuple[k] = 0;
                }
            }
        }
        let mut rng = self.rng(salt);
        for done in 1..=self.samples as u64 {
            for (slot, &d) in tuple.iter_mut().zip(dims) {
                *slot = rng.gen_range(0..d);
            }
            if let Some(w) = check(&tuple) {
                return (Coverage::Sampled(done), Some(w));
            }
        }
        (Coverage::Sampled(self.samples as u64), None)
    }
}
