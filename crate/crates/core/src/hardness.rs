//! The looped 12-vertex pattern `H0` and the list-coloring reductions from 3-Coloring.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::model::{from_list_instance, Instance, PatternGraph};

/// Color ids of `H0`: `a_i = i`, `b_i = 3 + i`, `c_i = 6 + i`, `d_i = 9 + i` for `i` in `0..3`.
pub mod h0 {
    pub const A: [usize; 3] = [0, 1, 2];
    pub const B: [usize; 3] = [3, 4, 5];
    pub const C: [usize; 3] = [6, 7, 8];
    pub const D: [usize; 3] = [9, 10, 11];

    pub fn label(color: usize) -> String {
        let group = ["a", "b", "c", "d"][color / 3];
        format!("{group}{}", color % 3 + 1)
    }
}

/// Builds `H0`. `A ∪ B` and `C ∪ D` are reflexive cliques; across them,
/// `c_i` sees `a_i, b_i` and `d_i` sees `a_i` and `b_j` for `j != i`.
pub fn build_h0() -> PatternGraph {
    let mut g = Graph::new(12);
    for v in 0..12 {
        g.add_loop(v);
    }
    let halves: [Vec<usize>; 2] = [[h0::A, h0::B].concat(), [h0::C, h0::D].concat()];
    for half in &halves {
        for (i, &u) in half.iter().enumerate() {
            for &v in &half[i + 1..] {
                g.add_edge(u, v);
            }
        }
    }
    for i in 0..3 {
        g.add_edge(h0::C[i], h0::A[i]);
        g.add_edge(h0::C[i], h0::B[i]);
        g.add_edge(h0::D[i], h0::A[i]);
        for j in 0..3 {
            if j != i {
                g.add_edge(h0::D[i], h0::B[j]);
            }
        }
    }
    PatternGraph::new(g)
}

/// A host graph with one list of `H0` colors per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListInstance {
    pub graph: Graph,
    pub lists: Vec<Vec<usize>>,
}

impl ListInstance {
    /// Revenue encoding over `H0`: `+1` on listed colors, `-1` elsewhere.
    pub fn to_revenue_instance(&self) -> Result<Instance> {
        from_list_instance(&self.graph, &build_h0(), &self.lists)
    }

    pub fn is_satisfiable(&self) -> Result<bool> {
        crate::oracle::oracle_list_hcolor(&self.graph, &build_h0(), &self.lists)
    }
}

/// Vertex layout of a reduction output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionLayout {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub w: Vec<usize>,
    /// Edges `(i, j)`, `i < j`, of the source graph with their gadget vertex.
    pub z: Vec<((usize, usize), usize)>,
}

fn source_edges(g: &Graph) -> Result<Vec<(usize, usize)>> {
    if !g.is_loopless() {
        return Err(Error::InvalidParameter("3-Coloring input must be loopless".into()));
    }
    let mut edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
    edges.sort_unstable();
    Ok(edges)
}

/// Reduction to List `H0`-Coloring on a split graph: clique `X ∪ Y`,
/// independent `W ∪ Z` of degree-2 vertices.
pub fn reduce_3col_to_split(g: &Graph) -> Result<(ListInstance, ReductionLayout)> {
    let n = g.n();
    let edges = source_edges(g)?;
    let layout = ReductionLayout {
        x: (0..n).collect(),
        y: (n..2 * n).collect(),
        w: (2 * n..3 * n).collect(),
        z: edges.iter().enumerate().map(|(k, &e)| (e, 3 * n + k)).collect(),
    };
    let mut out = Graph::new(3 * n + edges.len());
    let clique: Vec<usize> = (0..2 * n).collect();
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            out.add_edge(u, v);
        }
    }
    for i in 0..n {
        out.add_edge(layout.w[i], layout.x[i]);
        out.add_edge(layout.w[i], layout.y[i]);
    }
    for &((i, j), z) in &layout.z {
        out.add_edge(z, layout.x[i]);
        out.add_edge(z, layout.y[j]);
    }
    let mut lists = vec![h0::A.to_vec(); n];
    lists.extend(vec![h0::B.to_vec(); n]);
    lists.extend(vec![h0::C.to_vec(); n]);
    lists.extend(vec![h0::D.to_vec(); edges.len()]);
    Ok((ListInstance { graph: out, lists }, layout))
}

/// The split reduction with `W ∪ Z` turned into a clique: two cliques cover the host.
pub fn reduce_3col_to_cobipartite(g: &Graph) -> Result<(ListInstance, ReductionLayout)> {
    let (mut li, layout) = reduce_3col_to_split(g)?;
    let side: Vec<usize> = layout.w.iter().copied().chain(layout.z.iter().map(|&(_, z)| z)).collect();
    for (i, &u) in side.iter().enumerate() {
        for &v in &side[i + 1..] {
            li.graph.add_edge(u, v);
        }
    }
    Ok((li, layout))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use crate::oracle::oracle_3coloring;

    #[test]
    fn h0_shape() {
        let h = build_h0();
        assert_eq!(h.k(), 12);
        assert!(h.is_reflexive());
        assert_eq!(h.graph().edge_count() + h.graph().loops().len(), 57);
        assert_eq!(h0::label(7), "c2");
    }

    #[test]
    fn forcing_devices() {
        let h = build_h0();
        let ab: Vec<usize> = [h0::A, h0::B].concat();
        for r in 0..3 {
            let c_sees: Vec<usize> = ab.iter().copied().filter(|&v| h.adjacent(h0::C[r], v)).collect();
            assert_eq!(c_sees, vec![h0::A[r], h0::B[r]]);
            let d_sees: Vec<usize> = ab.iter().copied().filter(|&v| h.adjacent(h0::D[r], v)).collect();
            let mut expected = vec![h0::A[r]];
            expected.extend((0..3).filter(|&j| j != r).map(|j| h0::B[j]));
            assert_eq!(d_sees, expected);
        }
    }

    #[test]
    fn triangle_and_k4() {
        let (li, _) = reduce_3col_to_split(&named::complete(3)).unwrap();
        assert_eq!(li.graph.n(), 12);
        assert!(li.is_satisfiable().unwrap());
        let (li, _) = reduce_3col_to_split(&named::complete(4)).unwrap();
        assert!(!li.is_satisfiable().unwrap());
        assert!(!oracle_3coloring(&named::complete(4)).unwrap());
    }

    #[test]
    fn single_vertex() {
        let (li, _) = reduce_3col_to_split(&Graph::new(1)).unwrap();
        assert_eq!(li.graph.n(), 3);
        assert!(li.is_satisfiable().unwrap());
    }

    #[test]
    fn cobipartite_variant() {
        let g = named::cycle(5).unwrap();
        let (li, layout) = reduce_3col_to_cobipartite(&g).unwrap();
        assert!(li.graph.complement().is_bipartite());
        assert_eq!(layout.z.len(), 5);
        assert!(li.is_satisfiable().unwrap());
    }

    #[test]
    fn revenue_export() {
        let (li, _) = reduce_3col_to_split(&named::path(2)).unwrap();
        let inst = li.to_revenue_instance().unwrap();
        assert_eq!(inst.k(), 12);
        assert_eq!(inst.rev.get(0, 0), 1.0);
        assert_eq!(inst.rev.get(0, 3), -1.0);
    }
}
