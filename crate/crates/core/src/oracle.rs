//! Exhaustive ground truth for small universes.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::recognize::recognize;
use crate::structure::TernaryStructure;
use crate::transform::betweenness_of;

pub const MAX_ENUMERATION: usize = 6;
pub const MAX_SCAN: usize = 4;

/// Every strict partial order on `0..n`, exactly once, in a fixed order.
///
/// Ordered pairs `(i, j)`, `i ≠ j`, are decided in lexicographic order,
/// excluded before included. A branch is cut as soon as a decided pair
/// breaks antisymmetry or a fully decided triangle breaks transitivity.
pub fn enumerate_posets(n: usize) -> Result<PosetStream> {
    if n > MAX_ENUMERATION {
        return Err(Error::UniverseTooLarge {
            n,
            max: MAX_ENUMERATION,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut index = vec![usize::MAX; n * n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        index[i * n + j] = k;
    }
    Ok(PosetStream {
        n,
        tried: vec![0; pairs.len()],
        pairs,
        index,
        rel: vec![false; n * n],
        depth: 0,
        done: false,
    })
}

pub struct PosetStream {
    n: usize,
    pairs: Vec<(usize, usize)>,
    index: Vec<usize>,
    rel: Vec<bool>,
    /// Choices already tried at each depth: 0 none, 1 excluded, 2 both.
    tried: Vec<u8>,
    depth: usize,
    done: bool,
}

impl PosetStream {
    fn r(&self, x: usize, y: usize) -> bool {
        self.rel[x * self.n + y]
    }

    fn decided(&self, x: usize, y: usize) -> bool {
        self.index[x * self.n + y] <= self.depth
    }

    /// Checks constraints whose last-decided pair is the one at `depth`.
    fn consistent(&self) -> bool {
        let (a, b) = self.pairs[self.depth];
        if self.r(a, b) && self.decided(b, a) && self.r(b, a) {
            return false;
        }
        (0..self.n).filter(|&c| c != a && c != b).all(|c| {
            let as_first = !(self.decided(b, c) && self.decided(a, c))
                || !(self.r(a, b) && self.r(b, c) && !self.r(a, c));
            let as_second = !(self.decided(c, a) && self.decided(c, b))
                || !(self.r(c, a) && self.r(a, b) && !self.r(c, b));
            let as_span = !(self.decided(a, c) && self.decided(c, b))
                || !(self.r(a, c) && self.r(c, b) && !self.r(a, b));
            as_first && as_second && as_span
        })
    }

    fn emit(&self) -> Poset {
        let pairs = self.pairs.iter().copied().filter(|&(x, y)| self.r(x, y));
        Poset::from_strict_relation(self.n, pairs).expect("enumerated relation is a strict order")
    }
}

impl Iterator for PosetStream {
    type Item = Poset;

    fn next(&mut self) -> Option<Poset> {
        if self.done {
            return None;
        }
        if self.pairs.is_empty() {
            self.done = true;
            return Some(self.emit());
        }
        loop {
            if self.depth == self.pairs.len() {
                let p = self.emit();
                self.depth -= 1;
                return Some(p);
            }
            let d = self.depth;
            let (a, b) = self.pairs[d];
            let value = match self.tried[d] {
                0 => false,
                1 => true,
                _ => {
                    self.tried[d] = 0;
                    self.rel[a * self.n + b] = false;
                    if d == 0 {
                        self.done = true;
                        return None;
                    }
                    self.depth -= 1;
                    continue;
                }
            };
            self.tried[d] += 1;
            self.rel[a * self.n + b] = value;
            if self.consistent() {
                self.depth += 1;
            }
        }
    }
}

/// All posets on `s`'s universe whose betweenness is `s`.
pub fn posets_with_betweenness(s: &TernaryStructure) -> Result<Vec<Poset>> {
    Ok(enumerate_posets(s.n())?
        .filter(|q| betweenness_of(q) == *s)
        .collect())
}

/// Outcome of comparing recognition against the oracle on every B2-closed
/// structure of a given size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub n: usize,
    pub scanned: usize,
    pub accepted: usize,
    pub rejected: usize,
    pub disagreements: usize,
    pub first_disagreement: Option<TernaryStructure>,
}

impl ScanReport {
    pub fn agreements(&self) -> usize {
        self.scanned - self.disagreements
    }
}

impl fmt::Display for ScanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "scanned: {}", self.scanned)?;
        writeln!(f, "accepted: {}", self.accepted)?;
        writeln!(f, "rejected: {}", self.rejected)?;
        writeln!(f, "agreements: {}", self.agreements())?;
        write!(f, "disagreements: {}", self.disagreements)?;
        if let Some(s) = &self.first_disagreement {
            write!(f, "\nfirst disagreement: {s}")?;
        }
        Ok(())
    }
}

/// Symmetric triple pairs `{(x,y,z), (z,y,x)}` with distinct entries, keyed
/// by the lexicographically smaller triple.
pub fn symmetric_triple_pairs(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for x in 0..n {
        for y in (0..n).filter(|&y| y != x) {
            for z in (x + 1..n).filter(|&z| z != y) {
                out.push([x, y, z]);
            }
        }
    }
    out
}

/// The B2-closed structure selecting the symmetric pairs set in `mask`.
pub fn structure_from_mask(n: usize, pairs: &[[usize; 3]], mask: u64) -> TernaryStructure {
    let triples = pairs
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .flat_map(|(_, &[x, y, z])| [[x, y, z], [z, y, x]]);
    TernaryStructure::new(n, triples).expect("indices in range")
}

/// Runs recognition on every B2-closed structure on `n ≤ 4` vertices and
/// compares with whether some poset has that betweenness.
pub fn exhaustive_structure_scan(n: usize) -> Result<ScanReport> {
    if n > MAX_SCAN {
        return Err(Error::UniverseTooLarge { n, max: MAX_SCAN });
    }
    let realizable: HashSet<TernaryStructure> =
        enumerate_posets(n)?.map(|q| betweenness_of(&q)).collect();
    let pairs = symmetric_triple_pairs(n);
    let mut report = ScanReport {
        n,
        scanned: 0,
        accepted: 0,
        rejected: 0,
        disagreements: 0,
        first_disagreement: None,
    };
    for mask in 0..1u64 << pairs.len() {
        let s = structure_from_mask(n, &pairs, mask);
        let accepted = recognize(&s).is_accepted();
        report.scanned += 1;
        if accepted {
            report.accepted += 1;
        } else {
            report.rejected += 1;
        }
        if accepted != realizable.contains(&s) {
            report.disagreements += 1;
            report.first_disagreement.get_or_insert(s);
        }
    }
    Ok(report)
}
