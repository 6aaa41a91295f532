//! Undirected graphs derived from ternary structures and posets.

use std::collections::{BTreeSet, VecDeque};

use crate::poset::Poset;
use crate::structure::TernaryStructure;

/// Simple undirected graph on `0..n`, optionally restricted to a tagged
/// vertex subset (the extremal vertices of an Ext graph). Components and
/// bipartitions only consider the tagged vertices when a tag is present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    tagged: Option<BTreeSet<usize>>,
}

impl SimpleGraph {
    /// Builds a graph from arbitrary edges; loops are dropped, duplicates and
    /// orientation collapsed.
    pub fn new<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut es: Vec<(usize, usize)> = edges
            .into_iter()
            .filter(|&(u, v)| u != v)
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        es.sort_unstable();
        es.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &es {
            assert!(v < n, "edge endpoint {v} out of range for {n} vertices");
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        SimpleGraph {
            n,
            edges: es,
            adj,
            tagged: None,
        }
    }

    fn from_matrix(n: usize, m: &[bool]) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| m[u * n + v]);
        SimpleGraph::new(n, edges)
    }

    pub fn with_tag(mut self, tagged: BTreeSet<usize>) -> Self {
        self.tagged = Some(tagged);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn tag(&self) -> Option<&BTreeSet<usize>> {
        self.tagged.as_ref()
    }

    /// The graph's vertex set: the tag if present, else `0..n`.
    pub fn vertices(&self) -> Vec<usize> {
        match &self.tagged {
            Some(t) => t.iter().copied().collect(),
            None => (0..self.n).collect(),
        }
    }

    pub fn is_subgraph_of(&self, other: &SimpleGraph) -> bool {
        self.edges.iter().all(|&(u, v)| other.has_edge(u, v))
    }
}

/// Gaifman graph: `u - v` iff `u != v` and both occur in one triple.
pub fn gaifman(s: &TernaryStructure) -> SimpleGraph {
    let n = s.n();
    let mut m = vec![false; n * n];
    for &[x, y, z] in s.triples() {
        for (a, b) in [(x, y), (y, z), (x, z)] {
            m[a * n + b] = true;
            m[b * n + a] = true;
        }
    }
    SimpleGraph::from_matrix(n, &m)
}

/// Comparability graph: `u - v` iff `u < v` or `v < u`.
pub fn comparability(p: &Poset) -> SimpleGraph {
    SimpleGraph::new(p.n(), p.pairs())
}

/// Connected components over the graph's vertex set, each sorted, ordered by
/// smallest vertex.
pub fn connected_components(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let vertices = g.vertices();
    let mut inside = vec![false; g.n];
    for &v in &vertices {
        inside[v] = true;
    }
    let mut seen = vec![false; g.n];
    let mut out = Vec::new();
    for &start in &vertices {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &g.adj[u] {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &SimpleGraph) -> bool {
    connected_components(g).len() <= 1
}

/// Vertices of the Ext graph: those never in middle position of a triple.
pub(crate) fn extremal_set(s: &TernaryStructure) -> BTreeSet<usize> {
    let mut middle = vec![false; s.n()];
    for t in s.triples() {
        middle[t[1]] = true;
    }
    (0..s.n()).filter(|&v| !middle[v]).collect()
}

/// Ext graph: extremal vertices, with `u - v` iff `B(u, w, v)` for some `w`.
/// Middle witnesses are not kept.
pub fn ext_graph(s: &TernaryStructure) -> SimpleGraph {
    let ext = extremal_set(s);
    let n = s.n();
    let mut is_ext = vec![false; n];
    for &v in &ext {
        is_ext[v] = true;
    }
    let edges = s
        .triples()
        .iter()
        .filter(|t| is_ext[t[0]] && is_ext[t[2]])
        .map(|t| (t[0], t[2]));
    SimpleGraph::new(n, edges).with_tag(ext)
}

/// Two-colouring of the graph's vertex set, or `None` if some component has
/// an odd cycle. Each component's smallest vertex goes to the first block.
pub fn bipartition(g: &SimpleGraph) -> Option<(BTreeSet<usize>, BTreeSet<usize>)> {
    two_colour(g).ok()
}

/// Like [`bipartition`], but on failure returns an edge whose endpoints
/// received the same colour.
pub fn two_colour(g: &SimpleGraph) -> Result<(BTreeSet<usize>, BTreeSet<usize>), (usize, usize)> {
    let mut colour: Vec<Option<bool>> = vec![None; g.n];
    let mut inside = vec![false; g.n];
    let vertices = g.vertices();
    for &v in &vertices {
        inside[v] = true;
    }
    for &start in &vertices {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let cu = colour[u].unwrap();
            for &w in &g.adj[u] {
                if !inside[w] {
                    continue;
                }
                match colour[w] {
                    None => {
                        colour[w] = Some(!cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return Err((u.min(w), u.max(w))),
                    Some(_) => {}
                }
            }
        }
    }
    let (mut first, mut second) = (BTreeSet::new(), BTreeSet::new());
    for v in vertices {
        if colour[v] == Some(false) {
            first.insert(v);
        } else {
            second.insert(v);
        }
    }
    Ok((first, second))
}
