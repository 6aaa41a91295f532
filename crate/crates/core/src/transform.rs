//! Betweenness of a poset, extremal elements, the B-minimal reduction and
//! cuts.

use std::collections::BTreeSet;

use crate::bits::BitMatrix;
use crate::error::{Error, Result};
use crate::graphs::{comparability, extremal_set, gaifman};
use crate::poset::Poset;
use crate::structure::TernaryStructure;

/// Largest universe for which [`maximal_chains`] is attempted.
pub const MAX_CHAIN_ENUMERATION: usize = 12;

/// `B(x, y, z)` iff `x < y < z` or `z < y < x`.
pub fn betweenness_of(p: &Poset) -> TernaryStructure {
    let lt = p.matrix();
    let gt = lt.transpose();
    let mut triples = Vec::new();
    for y in 0..p.n() {
        for x in gt.row_iter(y) {
            for z in lt.row_iter(y) {
                triples.push([x, y, z]);
                triples.push([z, y, x]);
            }
        }
    }
    TernaryStructure::from_raw(p.n(), triples)
}

pub fn min_elements(p: &Poset) -> BTreeSet<usize> {
    let gt = p.matrix().transpose();
    (0..p.n()).filter(|&v| gt.row_is_empty(v)).collect()
}

pub fn max_elements(p: &Poset) -> BTreeSet<usize> {
    (0..p.n()).filter(|&v| p.matrix().row_is_empty(v)).collect()
}

/// Elements comparable to nothing: `Min(P) ∩ Max(P)`.
pub fn isolated_elements(p: &Poset) -> BTreeSet<usize> {
    min_elements(p)
        .intersection(&max_elements(p))
        .copied()
        .collect()
}

/// Vertices never in middle position of a triple.
pub fn extremal_elements(s: &TernaryStructure) -> BTreeSet<usize> {
    extremal_set(s)
}

/// Every comparable pair lies on a chain of size 3.
pub fn is_b_minimal(p: &Poset) -> bool {
    gaifman(&betweenness_of(p)).edges() == comparability(p).edges()
}

/// The least sub-order of `p` with the same betweenness: drops every pair
/// `x < y` with `x` minimal, `y` maximal and nothing strictly between.
pub fn minimize(p: &Poset) -> Poset {
    let lt = p.matrix();
    let gt = lt.transpose();
    let mins = min_elements(p);
    let maxs = max_elements(p);
    let mut out = lt.clone();
    for &x in &mins {
        for y in lt.row_iter(x) {
            if maxs.contains(&y) && !intersects(lt.row(x), gt.row(y)) {
                out.clear(x, y);
            }
        }
    }
    Poset::from_closed(out)
}

fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

/// A partition `(L, U)` of a poset's universe with `L` downwards closed, `U`
/// upwards closed, and every maximal chain meeting both blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    pub lower: BTreeSet<usize>,
    pub upper: BTreeSet<usize>,
}

/// Reason a candidate cut is not a cut of a given poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutViolation {
    NotPartition,
    EmptyBlock,
    LowerNotDownClosed { below: usize, member: usize },
    UpperNotUpClosed { member: usize, above: usize },
    ChainMissesBlock { chain: Vec<usize> },
}

impl Cut {
    /// Checks every defining clause against `p`, enumerating maximal chains.
    pub fn validate(&self, p: &Poset) -> Result<std::result::Result<(), CutViolation>> {
        let n = p.n();
        let covers_all = self.lower.len() + self.upper.len() == n
            && self.lower.is_disjoint(&self.upper)
            && self.lower.iter().chain(&self.upper).all(|&v| v < n);
        if !covers_all {
            return Ok(Err(CutViolation::NotPartition));
        }
        if self.lower.is_empty() || self.upper.is_empty() {
            return Ok(Err(CutViolation::EmptyBlock));
        }
        for &m in &self.lower {
            if let Some(b) = p.below(m).find(|b| !self.lower.contains(b)) {
                return Ok(Err(CutViolation::LowerNotDownClosed {
                    below: b,
                    member: m,
                }));
            }
        }
        for &m in &self.upper {
            if let Some(a) = p.above(m).find(|a| !self.upper.contains(a)) {
                return Ok(Err(CutViolation::UpperNotUpClosed {
                    member: m,
                    above: a,
                }));
            }
        }
        for chain in maximal_chains(p)? {
            let meets_lower = chain.iter().any(|v| self.lower.contains(v));
            let meets_upper = chain.iter().any(|v| self.upper.contains(v));
            if !(meets_lower && meets_upper) {
                return Ok(Err(CutViolation::ChainMissesBlock { chain }));
            }
        }
        Ok(Ok(()))
    }

    /// `(U, L)`, a cut of the reversed order.
    pub fn swapped(&self) -> Cut {
        Cut {
            lower: self.upper.clone(),
            upper: self.lower.clone(),
        }
    }
}

/// Greedy maximal antichain over the enumeration `0, 1, ..., n-1`.
pub fn greedy_maximal_antichain(p: &Poset) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    for v in 0..p.n() {
        if chosen.iter().all(|&a| !p.comparable(a, v)) {
            chosen.push(v);
        }
    }
    chosen
}

/// Builds a cut from a greedy maximal antichain `A`:
/// `U = {x ∉ Min(P) | a ≤ x for some a ∈ A}` and `L = V − U`.
pub fn cut_of(p: &Poset) -> Result<Cut> {
    if p.n() == 0 {
        return Err(Error::EmptyUniverse);
    }
    if let Some(&vertex) = isolated_elements(p).iter().next() {
        return Err(Error::HasIsolatedElement { vertex });
    }
    let antichain = greedy_maximal_antichain(p);
    let mins = min_elements(p);
    let (upper, lower): (BTreeSet<usize>, BTreeSet<usize>) =
        (0..p.n()).partition(|&x| !mins.contains(&x) && antichain.iter().any(|&a| p.le(a, x)));
    Ok(Cut { lower, upper })
}

/// The relation defined by a candidate lower block `L` (with `U = V − L`):
///
/// * `x ∈ L`, `y ∈ U` and `B(x,y,z) ∨ B(x,z,y) ∨ B(z,x,y)` for some `z`;
/// * `x, y ∈ L` and `B(x,y,w)` for some `w ∈ U`;
/// * `x, y ∈ U` and `B(w,x,y)` for some `w ∈ L`.
///
/// The result is returned raw; it is not closed or checked for order-hood.
pub fn order_from_cut(s: &TernaryStructure, lower: &BTreeSet<usize>) -> BTreeSet<(usize, usize)> {
    let mut in_lower = vec![false; s.n()];
    for &v in lower {
        if v < s.n() {
            in_lower[v] = true;
        }
    }
    let l = |v: usize| in_lower[v];
    let mut rel = BTreeSet::new();
    for &[a, b, c] in s.triples() {
        // clause (i): (a,b) via B(x,y,z), (a,c) via B(x,z,y), (b,c) via B(z,x,y)
        for (x, y) in [(a, b), (a, c), (b, c)] {
            if l(x) && !l(y) {
                rel.insert((x, y));
            }
        }
        if l(a) && l(b) && !l(c) {
            rel.insert((a, b));
        }
        if l(a) && !l(b) && !l(c) {
            rel.insert((b, c));
        }
    }
    rel
}

/// All maximal chains, each listed bottom-up, for posets with at most
/// [`MAX_CHAIN_ENUMERATION`] elements.
pub fn maximal_chains(p: &Poset) -> Result<Vec<Vec<usize>>> {
    let n = p.n();
    if n > MAX_CHAIN_ENUMERATION {
        return Err(Error::UniverseTooLarge {
            n,
            max: MAX_CHAIN_ENUMERATION,
        });
    }
    let lt = p.matrix();
    let mut covers = BitMatrix::new(n);
    for x in 0..n {
        for y in lt.row_iter(x) {
            if !lt.row_iter(x).any(|z| lt.get(z, y)) {
                covers.set(x, y);
            }
        }
    }
    let mut out = Vec::new();
    let mut path = Vec::new();
    for m in min_elements(p) {
        extend_chain(&covers, m, &mut path, &mut out);
    }
    Ok(out)
}

fn extend_chain(covers: &BitMatrix, v: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    path.push(v);
    if covers.row_is_empty(v) {
        out.push(path.clone());
    } else {
        for w in covers.row_iter(v) {
            extend_chain(covers, w, path, out);
        }
    }
    path.pop();
}
