//! Simple undirected graphs over dense vertex ids `0..n`.
//!
//! Host graphs are loop-free. Pattern graphs may carry loops, which are kept in
//! a separate set so that neighbor lists never contain their own vertex.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexSet = BTreeSet<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    loops: BTreeSet<usize>,
    matrix: Vec<bool>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            loops: BTreeSet::new(),
            matrix: vec![false; n * n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::InvalidParameter(format!(
                    "self-edge ({u}, {v}) must be given as a loop"
                )));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        Ok(())
    }

    /// Adds the edge `uv`; a no-op if it is already present.
    ///
    /// Panics if `u == v` or either endpoint is out of range.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "use add_loop for loops");
        let n = self.n();
        if self.matrix[u * n + v] {
            return;
        }
        self.matrix[u * n + v] = true;
        self.matrix[v * n + u] = true;
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
    }

    pub fn add_loop(&mut self, v: usize) {
        assert!(v < self.n());
        self.loops.insert(v);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order. Loops are not included.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    /// Adjacency test; `has_edge(v, v)` is true exactly when `v` carries a loop.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            self.loops.contains(&u)
        } else {
            self.matrix[u * self.n() + v]
        }
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.loops.contains(&v)
    }

    pub fn loops(&self) -> &BTreeSet<usize> {
        &self.loops
    }

    pub fn is_loopless(&self) -> bool {
        self.loops.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    /// Subgraph induced by `vertices`; new vertex `i` is `vertices[i]`. Loops are kept.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
            if self.has_loop(u) {
                g.add_loop(i);
            }
        }
        g
    }

    /// `G - set`, together with the new-to-old vertex map.
    pub fn remove_vertices(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = self.vertices().filter(|v| !set.contains(v)).collect();
        (self.induced(&keep), keep)
    }

    /// Loop-free complement.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut g = Graph::new(off + other.n());
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off);
        }
        for &l in &self.loops {
            g.add_loop(l);
        }
        for &l in &other.loops {
            g.add_loop(l + off);
        }
        g
    }

    pub fn closed_neighborhood<'a>(&self, set: impl IntoIterator<Item = &'a usize>) -> VertexSet {
        let mut out = VertexSet::new();
        for &u in set {
            out.insert(u);
            out.extend(self.adj[u].iter().copied());
        }
        out
    }

    /// `u` is adjacent to every vertex of `set` (vertices of `set` other than `u`).
    pub fn is_complete_to<'a>(&self, u: usize, set: impl IntoIterator<Item = &'a usize>) -> bool {
        set.into_iter().all(|&w| w == u || self.has_edge(u, w))
    }

    pub fn is_anticomplete_to<'a>(&self, u: usize, set: impl IntoIterator<Item = &'a usize>) -> bool {
        set.into_iter().all(|&w| w == u || !self.has_edge(u, w))
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Connected components of the subgraph induced by `within`, each sorted,
    /// ordered by their smallest vertex.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for &s in within {
            if !seen.insert(s) {
                continue;
            }
            let mut comp = VertexSet::from([s]);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if within.contains(&w) && seen.insert(w) {
                        comp.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertex_set())
    }

    /// True for graphs with exactly one component (the empty graph is not connected).
    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![None; self.n()];
        for s in self.vertices() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson::from(self)
    }
}

/// Largest vertex count accepted when deserializing.
pub const MAX_WIRE_VERTICES: usize = 1 << 20;

/// Wire form: `{"n": int, "edges": [[u,v],...], "loops": [v,...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    #[serde(default)]
    pub edges: Vec<[usize; 2]>,
    #[serde(default)]
    pub loops: Vec<usize>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            loops: g.loops.iter().copied().collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        if j.n > MAX_WIRE_VERTICES {
            return Err(Error::InvalidParameter(format!(
                "graph declares {} vertices, more than the {MAX_WIRE_VERTICES} accepted on input",
                j.n
            )));
        }
        let mut g = Graph::new(j.n);
        for [u, v] in j.edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::InvalidParameter(format!(
                    "edge [{u},{v}] is a loop; list it under \"loops\""
                )));
            }
            if g.has_edge(u, v) {
                return Err(Error::InvalidParameter(format!("duplicate edge [{u},{v}]")));
            }
            g.add_edge(u, v);
        }
        for l in j.loops {
            g.check_vertex(l)?;
            g.add_loop(l);
        }
        Ok(g)
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = GraphJson::deserialize(d)?;
        Graph::try_from(j).map_err(serde::de::Error::custom)
    }
}

/// Components of `g` as vertex sets.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    g.components()
}
