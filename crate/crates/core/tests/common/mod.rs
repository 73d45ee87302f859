#![allow(dead_code)]

use lcf_core::bounds::Compositions;
use lcf_core::model::{binomial, CanonicalAssignment};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn type_count(m: u32, d: u32) -> u32 {
    binomial(u64::from(2 * m - d), u64::from(m)) as u32
}

/// Every canonical assignment with list size `m` and `n` y-vertices.
pub fn all_canonical(m: u32, n: u32) -> impl Iterator<Item = CanonicalAssignment> {
    (0..=m).rev().flat_map(move |d| {
        Compositions::new(n, type_count(m, d) as usize).map(move |z| CanonicalAssignment::new(m, n, d, z).unwrap())
    })
}

/// Uniformly chosen `d` and y-lists, each y-list drawn independently.
pub fn random_canonical(r: &mut impl Rng, m: u32, n: u32) -> CanonicalAssignment {
    let d = r.gen_range(0..=m);
    random_canonical_d(r, m, d, n)
}

pub fn random_canonical_d(r: &mut impl Rng, m: u32, d: u32, n: u32) -> CanonicalAssignment {
    let k = type_count(m, d) as usize;
    let mut z = vec![0u32; k];
    // Skew toward few distinct types half of the time so the extremes get hit.
    let pool = if r.gen_bool(0.5) { r.gen_range(1..=k.min(3)) } else { k };
    let picks: Vec<usize> = (0..pool).map(|_| r.gen_range(0..k)).collect();
    for _ in 0..n {
        z[picks[r.gen_range(0..pool)]] += 1;
    }
    CanonicalAssignment::new(m, n, d, z).unwrap()
}
