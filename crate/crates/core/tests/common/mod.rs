#![allow(dead_code)]

pub mod suites;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use signed_peaks::SignedPermutation;

#[derive(Debug, Deserialize)]
pub struct Manifest {
    pub rng: RngSection,
    pub proptest: ProptestSection,
}

#[derive(Debug, Deserialize)]
pub struct RngSection {
    pub seed: u64,
    pub samples: usize,
}

#[derive(Debug, Deserialize)]
pub struct ProptestSection {
    pub seed: u64,
    pub cases: u32,
}

pub fn manifest() -> Manifest {
    let text = include_str!("../manifest.toml");
    toml::from_str(text).expect("tests/manifest.toml is valid")
}

/// Deterministic generator for size `n`, derived from the manifest seed.
pub fn rng_for(n: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(manifest().rng.seed ^ ((n as u64) << 32))
}

pub fn random_perm<R: Rng>(rng: &mut R, n: usize) -> SignedPermutation {
    let mut w: Vec<i64> = (1..=n as i64).collect();
    w.shuffle(rng);
    for x in &mut w {
        if rng.random_bool(0.5) {
            *x = -*x;
        }
    }
    SignedPermutation::new(&w).unwrap()
}

pub fn long_run() -> bool {
    std::env::var("SIGNED_PEAKS_LONG_RUN").is_ok_and(|v| v == "1")
}
