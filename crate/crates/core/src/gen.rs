//! Seeded synthetic instances.
//!
//! Symbols are drawn uniformly with `ChaCha8Rng::seed_from_u64(seed)`; output
//! is reproducible for a given build and seed.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::text::Text;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceKind {
    Random,
    Planted,
}

impl std::str::FromStr for InstanceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random" => Ok(InstanceKind::Random),
            "planted" => Ok(InstanceKind::Planted),
            other => Err(Error::InvalidParameter(format!("unknown instance kind {other:?}"))),
        }
    }
}

/// Location of the embedded pair in a planted instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plant {
    pub start1: usize,
    pub start2: usize,
    pub len: usize,
    pub mismatches: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub s1: Vec<u32>,
    pub s2: Vec<u32>,
    pub plant: Option<Plant>,
}

impl Instance {
    pub fn text(&self) -> Text {
        Text::from_symbols(&self.s1, &self.s2)
    }
}

fn uniform(rng: &mut ChaCha8Rng, n: usize, sigma: u32) -> Vec<u32> {
    (0..n).map(|_| rng.gen_range(0..sigma)).collect()
}

/// Two independent uniform strings of length `n` over `[0, sigma)`.
pub fn random_instance(n: usize, sigma: u32, seed: u64) -> Result<Instance> {
    if sigma == 0 && n > 0 {
        return Err(Error::InvalidParameter("sigma must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s1 = uniform(&mut rng, n, sigma);
    let s2 = uniform(&mut rng, n, sigma);
    Ok(Instance { s1, s2, plant: None })
}

/// Two uniform strings of length `n`, then a copy of a random length-`len`
/// substring of `s1` written into `s2` with exactly `k` offsets changed.
pub fn planted_instance(n: usize, sigma: u32, k: usize, len: usize, seed: u64) -> Result<Instance> {
    if len > n {
        return Err(Error::InvalidParameter(format!("planted length {len} exceeds n = {n}")));
    }
    if k > len {
        return Err(Error::InvalidParameter(format!("cannot plant {k} mismatches in length {len}")));
    }
    if k > 0 && sigma < 2 {
        return Err(Error::InvalidParameter("planting mismatches needs sigma >= 2".into()));
    }
    if sigma == 0 && n > 0 {
        return Err(Error::InvalidParameter("sigma must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s1 = uniform(&mut rng, n, sigma);
    let mut s2 = uniform(&mut rng, n, sigma);
    let start1 = rng.gen_range(0..=n - len);
    let start2 = rng.gen_range(0..=n - len);
    s2[start2..start2 + len].copy_from_slice(&s1[start1..start1 + len]);
    let mut mismatches = sample(&mut rng, len, k).into_vec();
    mismatches.sort_unstable();
    for &t in &mismatches {
        let shift = rng.gen_range(1..sigma);
        s2[start2 + t] = (s1[start1 + t] + shift) % sigma;
    }
    Ok(Instance {
        s1,
        s2,
        plant: Some(Plant {
            start1,
            start2,
            len,
            mismatches,
        }),
    })
}

pub fn generate_instance(
    kind: InstanceKind,
    n: usize,
    sigma: u32,
    k: usize,
    len: usize,
    seed: u64,
) -> Result<Instance> {
    match kind {
        InstanceKind::Random => random_instance(n, sigma, seed),
        InstanceKind::Planted => planted_instance(n, sigma, k, len, seed),
    }
}
