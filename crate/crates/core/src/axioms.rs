//! First-order axioms of betweenness relations, checked by exhaustive search.
//!
//! B1-B6 axiomatize betweenness of linear orders; B1-B5 together with X and
//! F hold for betweenness of every partial order.

use std::collections::HashMap;
use std::fmt;

use crate::structure::{TernaryStructure, Triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    B1,
    B2,
    B3,
    B4,
    B5,
    B6,
    X,
    F,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::B1,
        Axiom::B2,
        Axiom::B3,
        Axiom::B4,
        Axiom::B5,
        Axiom::B6,
        Axiom::X,
        Axiom::F,
    ];

    /// Axioms satisfied by the betweenness of every partial order.
    pub const POSET: [Axiom; 7] = [
        Axiom::B1,
        Axiom::B2,
        Axiom::B3,
        Axiom::B4,
        Axiom::B5,
        Axiom::X,
        Axiom::F,
    ];

    /// Number of universally quantified variables, i.e. the witness length.
    pub fn arity(self) -> usize {
        match self {
            Axiom::B1 | Axiom::B2 | Axiom::B3 | Axiom::B6 => 3,
            Axiom::B4 | Axiom::B5 => 4,
            Axiom::X | Axiom::F => 5,
        }
    }

    /// True iff the assignment `witness` (in the axiom's variable order
    /// `x, y, z, u, v`) falsifies the axiom in `s`.
    pub fn violated_by(self, s: &TernaryStructure, witness: &[usize]) -> bool {
        if witness.len() != self.arity() || witness.iter().any(|&v| v >= s.n()) {
            return false;
        }
        let b = |x: usize, y: usize, z: usize| s.contains(x, y, z);
        let (x, y, z) = (witness[0], witness[1], witness[2]);
        match self {
            Axiom::B1 => b(x, y, z) && !distinct(x, y, z),
            Axiom::B2 => b(x, y, z) && !b(z, y, x),
            Axiom::B3 => b(x, y, z) && b(x, z, y),
            Axiom::B4 => {
                let u = witness[3];
                b(x, y, z) && b(y, z, u) && !(b(x, y, u) && b(x, z, u))
            }
            Axiom::B5 => {
                let u = witness[3];
                b(x, y, z) && b(x, u, y) && !(b(x, u, z) && b(u, y, z))
            }
            Axiom::B6 => distinct(x, y, z) && !(b(x, y, z) || b(x, z, y) || b(y, x, z)),
            Axiom::X => {
                let (u, v) = (witness[3], witness[4]);
                b(x, y, z) && b(u, y, v) && !(b(x, y, u) || b(x, y, v))
            }
            Axiom::F => {
                let (u, v) = (witness[3], witness[4]);
                b(x, y, z) && b(y, u, v) && !(b(x, y, u) || b(z, y, u))
            }
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn distinct(x: usize, y: usize, z: usize) -> bool {
    x != y && y != z && x != z
}

/// Verdict for every axiom, with one violating assignment per failing axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    witnesses: [Option<Vec<usize>>; 8],
}

impl AxiomReport {
    pub fn holds(&self, axiom: Axiom) -> bool {
        self.witnesses[axiom as usize].is_none()
    }

    pub fn witness(&self, axiom: Axiom) -> Option<&[usize]> {
        self.witnesses[axiom as usize].as_deref()
    }

    pub fn all_hold(&self, axioms: &[Axiom]) -> bool {
        axioms.iter().all(|&a| self.holds(a))
    }

    pub fn failing(&self) -> impl Iterator<Item = Axiom> + '_ {
        Axiom::ALL.into_iter().filter(|&a| !self.holds(a))
    }
}

/// Checks all of B1-B6, X and F.
pub fn check_axioms(s: &TernaryStructure) -> AxiomReport {
    AxiomReport {
        witnesses: Axiom::ALL.map(|a| find_violation(s, a)),
    }
}

/// Searches for an assignment violating `axiom`. Only assignments that
/// satisfy the axiom's premise are visited; premises are joins of triples,
/// so the search walks pairs of triples sharing the joined positions.
pub fn find_violation(s: &TernaryStructure, axiom: Axiom) -> Option<Vec<usize>> {
    let ts = s.triples();
    let hit = |w: Vec<usize>| axiom.violated_by(s, &w).then_some(w);
    match axiom {
        Axiom::B1 | Axiom::B2 | Axiom::B3 => ts.iter().find_map(|&[x, y, z]| hit(vec![x, y, z])),
        Axiom::B6 => {
            let n = s.n();
            (0..n).find_map(|x| (0..n).find_map(|y| (0..n).find_map(|z| hit(vec![x, y, z]))))
        }
        Axiom::B4 => ts.iter().find_map(|&[x, y, z]| {
            with_prefix(ts, y, Some(z))
                .iter()
                .find_map(|&[_, _, u]| hit(vec![x, y, z, u]))
        }),
        Axiom::F => ts.iter().find_map(|&[x, y, z]| {
            with_prefix(ts, y, None)
                .iter()
                .find_map(|&[_, u, v]| hit(vec![x, y, z, u, v]))
        }),
        Axiom::B5 => {
            let mut by_ends: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
            for &[a, b, c] in ts {
                by_ends.entry((a, c)).or_default().push(b);
            }
            ts.iter().find_map(|&[x, y, z]| {
                by_ends
                    .get(&(x, y))
                    .and_then(|us| us.iter().find_map(|&u| hit(vec![x, y, z, u])))
            })
        }
        Axiom::X => {
            let mut by_middle: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
            for &[a, b, c] in ts {
                by_middle.entry(b).or_default().push((a, c));
            }
            ts.iter().find_map(|&[x, y, z]| {
                by_middle[&y]
                    .iter()
                    .find_map(|&(u, v)| hit(vec![x, y, z, u, v]))
            })
        }
    }
}

/// Contiguous run of triples starting with `first` (and `second`, if given).
fn with_prefix(ts: &[Triple], first: usize, second: Option<usize>) -> &[Triple] {
    let (lo, hi) = match second {
        Some(s) => ([first, s, 0], [first, s, usize::MAX]),
        None => ([first, 0, 0], [first, usize::MAX, usize::MAX]),
    };
    let start = ts.partition_point(|t| *t < lo);
    let end = ts.partition_point(|t| *t <= hi);
    &ts[start..end]
}

/// `A(x, y, z)`: the three vertices lie on a common chain of size 3.
pub fn chain3_related(s: &TernaryStructure, x: usize, y: usize, z: usize) -> bool {
    s.contains(x, y, z) || s.contains(x, z, y) || s.contains(y, x, z)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain_bet(n: usize) -> TernaryStructure {
        let mut t = Vec::new();
        for x in 0..n {
            for y in x + 1..n {
                for z in y + 1..n {
                    t.push([x, y, z]);
                    t.push([z, y, x]);
                }
            }
        }
        TernaryStructure::new(n, t).unwrap()
    }

    #[test]
    fn linear_order_satisfies_everything() {
        let r = check_axioms(&chain_bet(4));
        assert!(
            r.all_hold(&Axiom::ALL),
            "failing: {:?}",
            r.failing().collect::<Vec<_>>()
        );
    }

    #[test]
    fn missing_reverse_fails_b2() {
        let s = TernaryStructure::new(3, [[0, 1, 2]]).unwrap();
        let r = check_axioms(&s);
        assert!(!r.holds(Axiom::B2));
        assert_eq!(r.witness(Axiom::B2), Some(&[0, 1, 2][..]));
        assert!(r.holds(Axiom::B1));
        assert!(r.holds(Axiom::B3));
    }

    #[test]
    fn repeated_vertex_fails_b1() {
        let s = TernaryStructure::new(2, [[0, 0, 1], [1, 0, 0]]).unwrap();
        let r = check_axioms(&s);
        let w = r.witness(Axiom::B1).unwrap();
        assert!(Axiom::B1.violated_by(&s, w));
    }

    #[test]
    fn both_orientations_fail_b3() {
        let s = TernaryStructure::new(3, [[0, 1, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0]]).unwrap();
        assert!(!check_axioms(&s).holds(Axiom::B3));
    }

    #[test]
    fn empty_structure_fails_only_b6() {
        let r = check_axioms(&TernaryStructure::empty(3));
        assert_eq!(r.failing().collect::<Vec<_>>(), vec![Axiom::B6]);
        let r = check_axioms(&TernaryStructure::empty(2));
        assert!(r.all_hold(&Axiom::ALL));
    }

    #[test]
    fn chain3() {
        let s = chain_bet(3);
        assert!(chain3_related(&s, 0, 2, 1));
        assert!(!chain3_related(&s, 0, 1, 1));
        let e = TernaryStructure::empty(3);
        assert!(!chain3_related(&e, 0, 1, 2));
    }
}
