use std::fmt::Write as _;

use betpo_core::SimpleGraph;

/// Undirected DOT rendering; isolated vertices of the graph's vertex set are
/// listed as bare nodes.
pub fn to_dot(g: &SimpleGraph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
