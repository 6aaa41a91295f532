#![allow(dead_code)]

use std::collections::BTreeSet;

use betpo_core::generators::random_poset;
use betpo_core::{poset_from_pairs, Poset};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Seeded random poset with vertices relabelled by a random permutation, so
/// that the natural order is not always a linear extension.
pub fn shuffled_random_poset(n: usize, prob: f64, seed: u64) -> Poset {
    let p = random_poset(n, prob, seed).unwrap();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15));
    poset_from_pairs(n, p.pairs().map(|(x, y)| (perm[x], perm[y]))).unwrap()
}

pub fn set(v: &[usize]) -> BTreeSet<usize> {
    v.iter().copied().collect()
}
