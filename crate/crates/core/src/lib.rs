//! Betweenness relations of finite partial orders.
//!
//! `B(x, y, z)` holds in a poset when `x < y < z` or `z < y < x`. This crate
//! computes such relations, recognizes in polynomial time whether a ternary
//! structure is one (and produces a witnessing order), reduces posets to
//! their least sub-order with the same betweenness, decides which posets are
//! determined by their betweenness up to reversal, and cross-checks all of
//! it against a brute-force MSO evaluator and an exhaustive poset oracle.

mod bits;

pub mod axioms;
pub mod error;
pub mod generators;
pub mod graphs;
pub mod mso;
pub mod oracle;
pub mod poset;
pub mod recognize;
pub mod structure;
pub mod transform;

pub use axioms::{chain3_related, check_axioms, Axiom, AxiomReport};
pub use error::{Error, Result};
pub use graphs::{
    bipartition, comparability, connected_components, ext_graph, gaifman, SimpleGraph,
};
pub use mso::{psi_check, theta_check, theta_check_component, MsoVerdict, DEFAULT_MAX_COMPONENT};
pub use oracle::{
    enumerate_posets, exhaustive_structure_scan, posets_with_betweenness, ScanReport,
};
pub use poset::{poset_from_pairs, reverse, Poset};
pub use recognize::{
    is_b_reconstructible, recognize, recover_order_component, solutions_b_minimal,
    RecognitionOutcome, Rejection, RejectionReason,
};
pub use structure::{TernaryStructure, Triple};
pub use transform::{
    betweenness_of, cut_of, extremal_elements, is_b_minimal, isolated_elements, max_elements,
    min_elements, minimize, order_from_cut, Cut,
};
