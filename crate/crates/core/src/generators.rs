//! Example families: B-cycles, fences, chains, two fixed six-element posets
//! and seeded random posets.
//!
//! B-cycle and fence vertices are numbered `a_i ↦ 2(i-1)`, `b_i ↦ 2(i-1)+1`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poset::{poset_from_pairs, Poset};
use crate::structure::TernaryStructure;

fn a(i: usize, k: usize) -> usize {
    2 * (i % k)
}

fn b(i: usize) -> usize {
    2 * i + 1
}

/// Triples `(a_i, b_i, a_{i+1})` cyclically, with their reverses.
pub fn b_cycle(k: usize) -> Result<TernaryStructure> {
    if k < 2 {
        return Err(Error::ParameterTooSmall { value: k, min: 2 });
    }
    let triples = (0..k).flat_map(|i| {
        let (x, y, z) = (a(i, k), b(i), a(i + 1, k));
        [[x, y, z], [z, y, x]]
    });
    TernaryStructure::new(2 * k, triples)
}

/// The zigzag `a_1 < b_1 < a_2 > b_2 > a_3 < ...  a_k > b_k > a_1`.
pub fn fence_poset(k: usize) -> Result<Poset> {
    if k < 2 {
        return Err(Error::ParameterTooSmall { value: k, min: 2 });
    }
    if k % 2 == 1 {
        return Err(Error::OddParameter { value: k });
    }
    let pairs = (0..k).flat_map(|i| {
        let (lo, mid, hi) = (a(i, k), b(i), a(i + 1, k));
        if i % 2 == 0 {
            [(lo, mid), (mid, hi)]
        } else {
            [(hi, mid), (mid, lo)]
        }
    });
    poset_from_pairs(2 * k, pairs)
}

/// `0 < 1 < ... < n-1`.
pub fn chain(n: usize) -> Poset {
    poset_from_pairs(n, (1..n).map(|i| (i - 1, i))).expect("a chain is acyclic")
}

/// `a<b<c<d, e<c, e<f, b<f` on `a..f = 0..5`.
pub fn example3() -> Poset {
    poset_from_pairs(6, [(0, 1), (1, 2), (2, 3), (4, 2), (4, 5), (1, 5)]).expect("acyclic")
}

/// `a<b<c, d<e<f, d<c` on `a..f = 0..5`.
pub fn example5() -> Poset {
    poset_from_pairs(6, [(0, 1), (1, 2), (3, 4), (4, 5), (3, 2)]).expect("acyclic")
}

/// Includes each forward pair `(i, j)`, `i < j`, independently with
/// probability `edge_probability`, then closes transitively.
pub fn random_poset(n: usize, edge_probability: f64, seed: u64) -> Result<Poset> {
    if !(0.0..=1.0).contains(&edge_probability) {
        return Err(Error::InvalidProbability(edge_probability));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(edge_probability) {
                pairs.push((i, j));
            }
        }
    }
    poset_from_pairs(n, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{check_axioms, Axiom};
    use crate::recognize::recognize;
    use crate::transform::{betweenness_of, minimize};

    #[test]
    fn b_cycle_2_triples() {
        let s = b_cycle(2).unwrap();
        assert_eq!(s.triples(), &[[0, 1, 2], [0, 3, 2], [2, 1, 0], [2, 3, 0]]);
        assert!(check_axioms(&s).all_hold(&[
            Axiom::B1,
            Axiom::B2,
            Axiom::B3,
            Axiom::B4,
            Axiom::B5
        ]));
    }

    #[test]
    fn b_cycle_3_shape() {
        let s = b_cycle(3).unwrap();
        assert_eq!((s.n(), s.len()), (6, 6));
        assert!(!recognize(&s).is_accepted());
        assert!(check_axioms(&s).all_hold(&[
            Axiom::B1,
            Axiom::B2,
            Axiom::B3,
            Axiom::B4,
            Axiom::B5
        ]));
        assert_eq!(
            b_cycle(1),
            Err(Error::ParameterTooSmall { value: 1, min: 2 })
        );
    }

    #[test]
    fn fence_2_pairs() {
        let p = fence_poset(2).unwrap();
        assert_eq!(
            p.pairs().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (3, 2)]
        );
        assert_eq!(fence_poset(3), Err(Error::OddParameter { value: 3 }));
    }

    #[test]
    fn fence_betweenness_is_even_b_cycle() {
        for k in [2, 4, 6, 8] {
            assert_eq!(
                betweenness_of(&fence_poset(k).unwrap()),
                b_cycle(k).unwrap(),
                "k={k}"
            );
        }
    }

    #[test]
    fn fixtures() {
        let p = example3();
        assert!(p.lt(4, 5));
        let m = minimize(&p);
        assert_eq!(p.pair_count() - m.pair_count(), 1);
        assert!(!m.lt(4, 5));
        assert_eq!(chain(1).pair_count(), 0);
        assert_eq!(chain(1).n(), 1);
    }

    #[test]
    fn random_extremes() {
        assert_eq!(random_poset(7, 0.0, 1).unwrap(), Poset::antichain(7));
        assert_eq!(random_poset(7, 1.0, 1).unwrap(), chain(7));
        assert!(random_poset(3, 1.5, 0).is_err());
    }

    #[test]
    fn random_is_pinned() {
        let p = random_poset(8, 0.3, 42).unwrap();
        assert_eq!(p, random_poset(8, 0.3, 42).unwrap());
        let pairs: Vec<_> = p.pairs().collect();
        assert_eq!(pairs, PINNED_8_03_42);
    }

    const PINNED_8_03_42: &[(usize, usize)] = &[
        (0, 5),
        (0, 6),
        (1, 4),
        (1, 6),
        (1, 7),
        (2, 5),
        (2, 6),
        (2, 7),
        (3, 5),
        (3, 6),
        (4, 6),
        (4, 7),
        (5, 6),
    ];
}
