use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// An ordered vertex triple `(x, y, z)`, read as "y is between x and z".
pub type Triple = [usize; 3];

/// A finite ternary structure `(V, B)` with `V = 0..n`.
///
/// Triples are kept sorted and deduplicated, so two structures are equal
/// exactly when they have the same universe and the same triple set. No
/// axiom is enforced here; in particular the reverse of a triple is never
/// added implicitly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TernaryStructure {
    n: usize,
    triples: Vec<Triple>,
}

impl TernaryStructure {
    pub fn new<I>(n: usize, triples: I) -> Result<Self>
    where
        I: IntoIterator<Item = Triple>,
    {
        let mut triples: Vec<Triple> = triples.into_iter().collect();
        for t in &triples {
            if let Some(&vertex) = t.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex, n });
            }
        }
        triples.sort_unstable();
        triples.dedup();
        Ok(TernaryStructure { n, triples })
    }

    /// Builds a structure from triples already known to be in range.
    pub(crate) fn from_raw(n: usize, mut triples: Vec<Triple>) -> Self {
        debug_assert!(triples.iter().flatten().all(|&v| v < n));
        triples.sort_unstable();
        triples.dedup();
        TernaryStructure { n, triples }
    }

    pub fn empty(n: usize) -> Self {
        TernaryStructure {
            n,
            triples: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Triples in lexicographic order.
    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn contains(&self, x: usize, y: usize, z: usize) -> bool {
        self.triples.binary_search(&[x, y, z]).is_ok()
    }

    /// The induced substructure `S[X] = (X, B ∩ X³)`, reindexed so that the
    /// i-th smallest vertex of `vertices` becomes `i`. Returns the structure
    /// together with the local-to-global vertex map.
    pub fn restrict(&self, vertices: &BTreeSet<usize>) -> (TernaryStructure, Vec<usize>) {
        let map: Vec<usize> = vertices.iter().copied().collect();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let triples = self
            .triples
            .iter()
            .filter(|t| t.iter().all(|&v| v < self.n && local[v] != usize::MAX))
            .map(|t| [local[t[0]], local[t[1]], local[t[2]]])
            .collect();
        (TernaryStructure::from_raw(map.len(), triples), map)
    }

    /// Disjoint union: `other` is shifted past this structure's universe.
    pub fn disjoint_union(&self, other: &TernaryStructure) -> TernaryStructure {
        let shift = self.n;
        let triples = self
            .triples
            .iter()
            .copied()
            .chain(
                other
                    .triples
                    .iter()
                    .map(|t| [t[0] + shift, t[1] + shift, t[2] + shift]),
            )
            .collect();
        TernaryStructure::from_raw(self.n + other.n, triples)
    }
}

impl fmt::Display for TernaryStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} vertices; ", self.n)?;
        let mut first = true;
        for t in &self.triples {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "({},{},{})", t[0], t[1], t[2])?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range_vertex() {
        let err = TernaryStructure::new(3, [[0, 1, 3]]).unwrap_err();
        assert_eq!(err, Error::VertexOutOfRange { vertex: 3, n: 3 });
    }

    #[test]
    fn deduplicates_without_adding_reverse() {
        let s = TernaryStructure::new(3, [[0, 1, 2], [0, 1, 2]]).unwrap();
        assert_eq!(s.triples(), &[[0, 1, 2]]);
        assert!(!s.contains(2, 1, 0));
    }

    #[test]
    fn restrict_reindexes() {
        let s = TernaryStructure::new(6, [[3, 4, 5], [5, 4, 3], [0, 1, 2]]).unwrap();
        let set: BTreeSet<usize> = [3, 4, 5].into_iter().collect();
        let (r, map) = s.restrict(&set);
        assert_eq!(map, vec![3, 4, 5]);
        assert_eq!(r.triples(), &[[0, 1, 2], [2, 1, 0]]);
    }
}
