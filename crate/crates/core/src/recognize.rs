//! Polynomial-time recognition of betweenness relations of posets.
//!
//! Per connected component of the Gaifman graph: check B1-B3, two-colour
//! the Ext graph, read off the order with one colour class as the maxima,
//! then verify the order reproduces the component's triples exactly.

use std::collections::BTreeSet;
use std::fmt;

use crate::bits::BitMatrix;
use crate::error::{Error, Result};
use crate::graphs::{
    comparability, connected_components, ext_graph, gaifman, is_connected, two_colour,
};
use crate::poset::{is_strict_order, reverse, Poset};
use crate::structure::TernaryStructure;
use crate::transform::{betweenness_of, is_b_minimal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RejectionReason {
    AxiomB1Fail,
    AxiomB2Fail,
    AxiomB3Fail,
    ExtNotBipartite,
    ExtDisconnected,
    RecoveredRelationNotOrder,
    BetweennessMismatch,
}

impl fmt::Display for RejectionReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Why and where recognition failed.
///
/// `witness` is a triple for axiom failures and mismatches, the offending
/// Ext edge for `ExtNotBipartite`, and a pair or triple of vertices breaking
/// antisymmetry or transitivity for `RecoveredRelationNotOrder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rejection {
    pub reason: RejectionReason,
    pub component: Vec<usize>,
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecognitionOutcome {
    Accepted(Poset),
    Rejected(Rejection),
}

impl RecognitionOutcome {
    pub fn is_accepted(&self) -> bool {
        matches!(self, RecognitionOutcome::Accepted(_))
    }

    pub fn witness(&self) -> Option<&Poset> {
        match self {
            RecognitionOutcome::Accepted(p) => Some(p),
            RecognitionOutcome::Rejected(_) => None,
        }
    }

    pub fn rejection(&self) -> Option<&Rejection> {
        match self {
            RecognitionOutcome::Accepted(_) => None,
            RecognitionOutcome::Rejected(r) => Some(r),
        }
    }
}

/// Order recovered on one non-singleton Gaifman component, in local indices.
#[derive(Debug, Clone)]
struct ComponentOrder {
    vertices: Vec<usize>,
    order: Poset,
}

/// Reads the order off a component given the intended maxima:
/// `x < y` iff `x ≠ y` and either `B(x,y,z)` for some `z ∈ maxima`, or
/// `y ∈ maxima` and `B(w,x,y) ∨ B(x,w,y)` for some `w ∉ maxima`.
pub fn recover_order_component(
    s: &TernaryStructure,
    maxima: &BTreeSet<usize>,
) -> BTreeSet<(usize, usize)> {
    let mut top = vec![false; s.n()];
    for &v in maxima {
        if v < s.n() {
            top[v] = true;
        }
    }
    let mut rel = BTreeSet::new();
    for &[a, b, c] in s.triples() {
        if !top[c] {
            continue;
        }
        rel.insert((a, b));
        if !top[a] {
            rel.insert((b, c));
        }
        if !top[b] {
            rel.insert((a, c));
        }
    }
    rel.retain(|&(x, y)| x != y);
    rel
}

/// Decides whether `s` is the betweenness of some poset; on success returns
/// a B-minimal witness, on failure the first failing step and component.
pub fn recognize(s: &TernaryStructure) -> RecognitionOutcome {
    match recognize_components(s) {
        Ok(parts) => RecognitionOutcome::Accepted(assemble(s.n(), &parts, 0)),
        Err(r) => RecognitionOutcome::Rejected(r),
    }
}

/// All B-minimal posets whose betweenness is `s`: each non-singleton
/// component is independently kept or reversed, giving `2^k` orders.
pub fn solutions_b_minimal(s: &TernaryStructure) -> Result<Vec<Poset>> {
    let parts = recognize_components(s).map_err(|_| Error::NotRecognized)?;
    let k = parts.len();
    assert!(k < usize::BITS as usize, "too many components to enumerate");
    Ok((0..1usize << k)
        .map(|mask| assemble(s.n(), &parts, mask))
        .collect())
}

/// Finite reconstructibility: B-minimal and connected.
pub fn is_b_reconstructible(p: &Poset) -> bool {
    is_b_minimal(p) && is_connected(&comparability(p))
}

fn assemble(n: usize, parts: &[ComponentOrder], reversed: usize) -> Poset {
    let mut lt = BitMatrix::new(n);
    for (i, part) in parts.iter().enumerate() {
        let order = if reversed >> i & 1 == 1 {
            reverse(&part.order)
        } else {
            part.order.clone()
        };
        for (x, y) in order.pairs() {
            lt.set(part.vertices[x], part.vertices[y]);
        }
    }
    Poset::from_closed(lt)
}

fn recognize_components(
    s: &TernaryStructure,
) -> std::result::Result<Vec<ComponentOrder>, Rejection> {
    let components = connected_components(&gaifman(s));
    let component_of = |v: usize| -> Vec<usize> {
        components
            .iter()
            .find(|c| c.binary_search(&v).is_ok())
            .cloned()
            .unwrap_or_default()
    };

    // Step 1: B1, B2, B3.
    type TripleTest = fn(&TernaryStructure, [usize; 3]) -> bool;
    let axiom_checks: [(RejectionReason, TripleTest); 3] = [
        (RejectionReason::AxiomB1Fail, |_, [x, y, z]| {
            x != y && y != z && x != z
        }),
        (RejectionReason::AxiomB2Fail, |s, [x, y, z]| {
            s.contains(z, y, x)
        }),
        (RejectionReason::AxiomB3Fail, |s, [x, y, z]| {
            !s.contains(x, z, y)
        }),
    ];
    for (reason, ok) in axiom_checks {
        if let Some(&t) = s.triples().iter().find(|&&t| !ok(s, t)) {
            return Err(Rejection {
                reason,
                component: component_of(t[0]),
                witness: Some(t.to_vec()),
            });
        }
    }

    let mut parts = Vec::new();
    for comp in components.into_iter().filter(|c| c.len() > 1) {
        let set: BTreeSet<usize> = comp.iter().copied().collect();
        let (local, map) = s.restrict(&set);
        let reject = |reason, witness: Option<Vec<usize>>| Rejection {
            reason,
            component: comp.clone(),
            witness: witness.map(|w| w.into_iter().map(|v| map[v]).collect()),
        };

        // Step 2: Ext graph and its bipartition.
        let ext = ext_graph(&local);
        let (maxima, _) = two_colour(&ext)
            .map_err(|(u, v)| reject(RejectionReason::ExtNotBipartite, Some(vec![u, v])))?;
        if connected_components(&ext).len() != 1 {
            return Err(reject(RejectionReason::ExtDisconnected, None));
        }

        // Step 3: candidate order with the first colour class as maxima.
        let rel = recover_order_component(&local, &maxima);
        let mut lt = BitMatrix::new(local.n());
        for &(x, y) in &rel {
            lt.set(x, y);
        }
        if !is_strict_order(&lt) {
            let witness = order_violation(&lt);
            return Err(reject(
                RejectionReason::RecoveredRelationNotOrder,
                Some(witness),
            ));
        }
        let order = Poset::from_strict_relation(local.n(), rel.iter().copied())
            .expect("validated as a strict order");

        // Step 4: the candidate must reproduce the component exactly.
        let bet = betweenness_of(&order);
        if bet != local {
            let witness = first_difference(bet.triples(), local.triples());
            return Err(reject(
                RejectionReason::BetweennessMismatch,
                Some(witness.to_vec()),
            ));
        }
        parts.push(ComponentOrder {
            vertices: map,
            order,
        });
    }
    Ok(parts)
}

fn order_violation(lt: &BitMatrix) -> Vec<usize> {
    let n = lt.n();
    for x in 0..n {
        for y in lt.row_iter(x) {
            if lt.get(y, x) {
                return vec![x, y];
            }
            if let Some(z) = lt.row_iter(y).find(|&z| !lt.get(x, z)) {
                return vec![x, y, z];
            }
        }
    }
    Vec::new()
}

/// Smallest triple present in exactly one of two sorted, distinct lists.
fn first_difference(a: &[[usize; 3]], b: &[[usize; 3]]) -> [usize; 3] {
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) if x == y => {
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) => return *x.min(y),
            (Some(x), None) | (None, Some(x)) => return *x,
            (None, None) => unreachable!("lists are equal"),
        }
    }
}
