//! Brute-force evaluation of the monadic second-order characterization of
//! betweenness structures.
//!
//! A component satisfies `θ = ∃L. ψ(B, L)` when some vertex set `L` defines,
//! through the cut formula of [`order_from_cut`], a B-minimal strict order
//! whose betweenness is exactly the component. Relativization to components
//! is done by restricting the structure, not by rewriting formulas.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::axioms::{find_violation, Axiom};
use crate::error::{Error, Result};
use crate::graphs::{connected_components, gaifman};
use crate::poset::Poset;
use crate::structure::TernaryStructure;
use crate::transform::{betweenness_of, is_b_minimal, order_from_cut};

pub const DEFAULT_MAX_COMPONENT: usize = 16;

/// Widest component the bitmask search can represent.
const MASK_WIDTH: usize = 63;

/// A satisfying `L` for one component, in global vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentWitness {
    pub component: Vec<usize>,
    pub lower: BTreeSet<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MsoVerdict {
    Satisfied { witnesses: Vec<ComponentWitness> },
    Unsatisfied { component: Vec<usize> },
}

impl MsoVerdict {
    pub fn is_satisfied(&self) -> bool {
        matches!(self, MsoVerdict::Satisfied { .. })
    }

    /// Stitches the per-component orders defined by the witness sets into
    /// one poset on `s`'s universe; isolated vertices stay incomparable.
    pub fn witness_poset(&self, s: &TernaryStructure) -> Option<Poset> {
        let MsoVerdict::Satisfied { witnesses } = self else {
            return None;
        };
        let mut pairs = Vec::new();
        for w in witnesses {
            let set: BTreeSet<usize> = w.component.iter().copied().collect();
            let (local, map) = s.restrict(&set);
            let lower = w
                .lower
                .iter()
                .map(|v| map.binary_search(v).expect("vertex in component"))
                .collect();
            pairs.extend(
                order_from_cut(&local, &lower)
                    .into_iter()
                    .map(|(x, y)| (map[x], map[y])),
            );
        }
        Poset::from_strict_relation(s.n(), pairs)
    }
}

/// `ψ(B, L)` on a structure taken as a whole (one component):
/// (a) B1-B3 hold and every vertex lies in a triple, (b) `L` and its
/// complement are nonempty, (c) the cut formula defines a B-minimal strict
/// order, (d) whose betweenness is `s`.
pub fn psi_check(s: &TernaryStructure, lower: &BTreeSet<usize>) -> bool {
    let n = s.n();
    if [Axiom::B1, Axiom::B2, Axiom::B3]
        .iter()
        .any(|&a| find_violation(s, a).is_some())
    {
        return false;
    }
    let mut covered = vec![false; n];
    for t in s.triples() {
        for &v in t {
            covered[v] = true;
        }
    }
    if !covered.iter().all(|&c| c) {
        return false;
    }
    let lower_size = lower.iter().filter(|&&v| v < n).count();
    if lower_size == 0 || lower_size == n {
        return false;
    }
    let Some(order) = Poset::from_strict_relation(n, order_from_cut(s, lower)) else {
        return false;
    };
    is_b_minimal(&order) && betweenness_of(&order) == *s
}

/// Searches all subsets `L` of a component's vertices in increasing bitmask
/// order and returns the first one satisfying `ψ`.
pub fn theta_check_component(
    s: &TernaryStructure,
    max_component: usize,
) -> Result<Option<BTreeSet<usize>>> {
    let n = s.n();
    let bound = max_component.min(MASK_WIDTH);
    if n > bound {
        return Err(Error::ComponentTooLarge { size: n, bound });
    }
    let eval = PsiEvaluator::new(s);
    if !eval.premise {
        return Ok(None);
    }
    let found = (0..1u64 << n)
        .into_par_iter()
        .find_first(|&mask| eval.holds(mask));
    Ok(found.map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect()))
}

/// Evaluates `θ` componentwise. Components consisting of one vertex and no
/// triple are isolated elements and are skipped.
pub fn theta_check(s: &TernaryStructure, max_component: usize) -> Result<MsoVerdict> {
    let mut witnesses = Vec::new();
    for comp in connected_components(&gaifman(s)) {
        let set: BTreeSet<usize> = comp.iter().copied().collect();
        let (local, map) = s.restrict(&set);
        if comp.len() == 1 && local.is_empty() {
            continue;
        }
        match theta_check_component(&local, max_component)? {
            Some(lower) => witnesses.push(ComponentWitness {
                component: comp,
                lower: lower.into_iter().map(|v| map[v]).collect(),
            }),
            None => return Ok(MsoVerdict::Unsatisfied { component: comp }),
        }
    }
    Ok(MsoVerdict::Satisfied { witnesses })
}

/// `ψ` specialised to bitmask sets over at most 63 vertices, with the
/// `L`-independent parts of the cut formula precomputed.
struct PsiEvaluator {
    n: usize,
    full: u64,
    /// Condition (a).
    premise: bool,
    triples: Vec<[usize; 3]>,
    /// `y` such that `B(x,y,z) ∨ B(x,z,y) ∨ B(z,x,y)` for some `z`, by `x`.
    chained: Vec<u64>,
    /// `w` with `B(x,y,w)`, indexed `x * n + y`.
    right: Vec<u64>,
    /// `w` with `B(w,x,y)`, indexed `x * n + y`.
    left: Vec<u64>,
}

impl PsiEvaluator {
    fn new(s: &TernaryStructure) -> Self {
        let n = s.n();
        assert!(n <= MASK_WIDTH);
        let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
        let axioms_ok = [Axiom::B1, Axiom::B2, Axiom::B3]
            .iter()
            .all(|&a| find_violation(s, a).is_none());
        let mut covered = 0u64;
        let mut chained = vec![0u64; n];
        let mut right = vec![0u64; n * n];
        let mut left = vec![0u64; n * n];
        for &[a, b, c] in s.triples() {
            covered |= 1 << a | 1 << b | 1 << c;
            chained[a] |= 1 << b | 1 << c;
            chained[b] |= 1 << c;
            right[a * n + b] |= 1 << c;
            left[b * n + c] |= 1 << a;
        }
        PsiEvaluator {
            n,
            full,
            premise: axioms_ok && covered == full,
            triples: s.triples().to_vec(),
            chained,
            right,
            left,
        }
    }

    fn holds(&self, lower: u64) -> bool {
        let n = self.n;
        if !self.premise || lower == 0 || lower == self.full {
            return false;
        }
        let upper = self.full & !lower;
        let bit = |m: u64, v: usize| m >> v & 1 == 1;

        let mut succ = vec![0u64; n];
        for (x, row) in succ.iter_mut().enumerate() {
            if bit(lower, x) {
                *row = self.chained[x] & upper;
                for y in (0..n).filter(|&y| bit(lower, y)) {
                    if self.right[x * n + y] & upper != 0 {
                        *row |= 1 << y;
                    }
                }
            } else {
                for y in (0..n).filter(|&y| bit(upper, y)) {
                    if self.left[x * n + y] & lower != 0 {
                        *row |= 1 << y;
                    }
                }
            }
        }

        let mut pred = vec![0u64; n];
        for x in 0..n {
            if bit(succ[x], x) {
                return false;
            }
            for y in (0..n).filter(|&y| bit(succ[x], y)) {
                if bit(succ[y], x) || succ[y] & !succ[x] != 0 {
                    return false;
                }
                pred[y] |= 1 << x;
            }
        }

        // B-minimal: each x < y extends below x, between, or above y.
        for x in 0..n {
            for y in (0..n).filter(|&y| bit(succ[x], y)) {
                if pred[x] == 0 && succ[x] & pred[y] == 0 && succ[y] == 0 {
                    return false;
                }
            }
        }

        // Every triple is a chain, and there are no other chains.
        let lt = |x: usize, y: usize| bit(succ[x], y);
        let all_chains = self
            .triples
            .iter()
            .all(|&[a, b, c]| (lt(a, b) && lt(b, c)) || (lt(c, b) && lt(b, a)));
        let chain_count: usize = (0..n)
            .map(|y| (pred[y].count_ones() * succ[y].count_ones()) as usize)
            .sum();
        all_chains && 2 * chain_count == self.triples.len()
    }
}
