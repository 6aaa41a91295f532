use std::fmt;

use crate::bits::BitMatrix;
use crate::error::{Error, Result};

/// A finite strict partial order on `0..n`.
///
/// The relation is stored transitively closed: it is irreflexive,
/// antisymmetric and transitive at all times. `x ≤ y` is derived as
/// `x < y` or `x == y`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poset {
    lt: BitMatrix,
}

/// Transitive closure of `pairs` on `0..n`. Reflexive pairs are ignored.
pub fn poset_from_pairs<I>(n: usize, pairs: I) -> Result<Poset>
where
    I: IntoIterator<Item = (usize, usize)>,
{
    let mut lt = BitMatrix::new(n);
    for (x, y) in pairs {
        for vertex in [x, y] {
            if vertex >= n {
                return Err(Error::VertexOutOfRange { vertex, n });
            }
        }
        if x != y {
            lt.set(x, y);
        }
    }
    lt.transitive_closure();
    if let Some(vertex) = (0..n).find(|&v| lt.get(v, v)) {
        return Err(Error::CycleDetected { vertex });
    }
    Ok(Poset { lt })
}

/// The reversal `(V, ≥)`.
pub fn reverse(p: &Poset) -> Poset {
    Poset {
        lt: p.lt.transpose(),
    }
}

impl Poset {
    pub fn antichain(n: usize) -> Self {
        Poset {
            lt: BitMatrix::new(n),
        }
    }

    /// Wraps a relation matrix that is already a strict order.
    pub(crate) fn from_closed(lt: BitMatrix) -> Self {
        debug_assert!(is_strict_order(&lt));
        Poset { lt }
    }

    /// Validates a raw relation as a strict partial order without closing it.
    pub fn from_strict_relation<I>(n: usize, pairs: I) -> Option<Poset>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut lt = BitMatrix::new(n);
        for (x, y) in pairs {
            if x >= n || y >= n {
                return None;
            }
            lt.set(x, y);
        }
        is_strict_order(&lt).then_some(Poset { lt })
    }

    pub(crate) fn matrix(&self) -> &BitMatrix {
        &self.lt
    }

    pub fn n(&self) -> usize {
        self.lt.n()
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.lt.get(x, y)
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        x == y || self.lt.get(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.lt.get(x, y) || self.lt.get(y, x)
    }

    /// Elements strictly above `x`, ascending.
    pub fn above(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.lt.row_iter(x)
    }

    /// Elements strictly below `y`, ascending.
    pub fn below(&self, y: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(move |&x| self.lt.get(x, y))
    }

    /// All pairs `(x, y)` with `x < y`, in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |x| self.lt.row_iter(x).map(move |y| (x, y)))
    }

    pub fn pair_count(&self) -> usize {
        (0..self.n()).map(|x| self.lt.row_count(x)).sum()
    }

    /// `self.lt ⊆ other.lt` as pair sets (same universe required).
    pub fn is_subrelation_of(&self, other: &Poset) -> bool {
        self.n() == other.n() && (0..self.n()).all(|x| self.lt.row_subset_of(other.matrix(), x))
    }

    pub fn is_linear(&self) -> bool {
        let n = self.n();
        (0..n).all(|x| (x + 1..n).all(|y| self.comparable(x, y)))
    }
}

impl BitMatrix {
    fn row_subset_of(&self, other: &BitMatrix, i: usize) -> bool {
        self.row(i)
            .iter()
            .zip(other.row(i))
            .all(|(a, b)| a & !b == 0)
    }
}

pub(crate) fn is_strict_order(lt: &BitMatrix) -> bool {
    let n = lt.n();
    (0..n).all(|x| !lt.get(x, x))
        && (0..n).all(|x| lt.row_iter(x).all(|y| !lt.get(y, x)))
        && lt.is_transitive()
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("n", &self.n())
            .field("lt", &self.pairs().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(p: &Poset) -> Vec<(usize, usize)> {
        p.pairs().collect()
    }

    #[test]
    fn chain_closure() {
        let p = poset_from_pairs(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(pairs(&p), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn example3_closure_adds_expected_pairs() {
        let p = poset_from_pairs(6, [(0, 1), (1, 2), (2, 3), (4, 2), (4, 5), (1, 5)]).unwrap();
        assert!(p.lt(4, 3));
        assert!(p.lt(0, 5));
    }

    #[test]
    fn two_cycle_is_rejected() {
        let err = poset_from_pairs(2, [(0, 1), (1, 0)]).unwrap_err();
        assert!(matches!(err, Error::CycleDetected { .. }));
    }

    #[test]
    fn reflexive_pairs_ignored() {
        let p = poset_from_pairs(2, [(1, 1), (0, 1)]).unwrap();
        assert_eq!(pairs(&p), vec![(0, 1)]);
    }

    #[test]
    fn out_of_range() {
        let err = poset_from_pairs(2, [(0, 2)]).unwrap_err();
        assert_eq!(err, Error::VertexOutOfRange { vertex: 2, n: 2 });
    }

    #[test]
    fn reverse_chain_and_antichain() {
        let p = poset_from_pairs(3, [(0, 1), (1, 2)]).unwrap();
        let r = reverse(&p);
        assert_eq!(pairs(&r), vec![(1, 0), (2, 0), (2, 1)]);
        assert_eq!(reverse(&r), p);
        let a = Poset::antichain(3);
        assert_eq!(reverse(&a), a);
    }

    #[test]
    fn strict_relation_validation() {
        assert!(Poset::from_strict_relation(3, [(0, 1), (1, 2)]).is_none());
        assert!(Poset::from_strict_relation(3, [(0, 1), (1, 2), (0, 2)]).is_some());
        assert!(Poset::from_strict_relation(2, [(0, 1), (1, 0)]).is_none());
        assert!(Poset::from_strict_relation(1, [(0, 0)]).is_none());
    }
}
