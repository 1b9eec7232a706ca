use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// How the children of an inner node relate to each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QuotientKind {
    Edgeless,
    Complete,
    Prime,
}

/// Modular decomposition tree. Every node is a strong module; inner nodes carry
/// the maximal proper strong modules of their vertex set as children.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModularDecompositionTree {
    /// Sorted vertex ids of the module.
    pub vertices: Vec<usize>,
    /// `None` exactly for leaves.
    pub kind: Option<QuotientKind>,
    pub children: Vec<ModularDecompositionTree>,
}

impl ModularDecompositionTree {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(|c| c.node_count()).sum::<usize>()
    }

    pub fn height(&self) -> usize {
        1 + self.children.iter().map(|c| c.height()).max().unwrap_or(0)
    }

    /// All nodes in preorder.
    pub fn nodes(&self) -> Vec<&ModularDecompositionTree> {
        let mut out = vec![self];
        for c in &self.children {
            out.extend(c.nodes());
        }
        out
    }

    /// One vertex (the smallest) of every child, in child order.
    pub fn representatives(&self) -> Vec<usize> {
        self.children.iter().map(|c| c.vertices[0]).collect()
    }

    /// The quotient graph on the children, vertex `i` standing for child `i`.
    pub fn quotient(&self, g: &Graph) -> Graph {
        g.induced(&self.representatives())
    }

    /// Indented text rendering, one node per line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(0, &mut out);
        out
    }

    fn render_into(&self, indent: usize, out: &mut String) {
        let label = match self.kind {
            None => "leaf".to_string(),
            Some(k) => format!("{k:?}").to_lowercase(),
        };
        out.push_str(&format!("{}{} {:?}\n", "  ".repeat(indent), label, self.vertices));
        for c in &self.children {
            c.render_into(indent + 1, out);
        }
    }
}

/// Whether every vertex outside `set` sees all of it or none of it.
pub fn is_module(g: &Graph, set: &[usize]) -> bool {
    let mut inside = vec![false; g.n()];
    for &u in set {
        inside[u] = true;
    }
    g.vertices().filter(|&w| !inside[w]).all(|w| {
        let hits = set.iter().filter(|&&u| g.has_edge(u, w)).count();
        hits == 0 || hits == set.len()
    })
}

/// Smallest module of `g` containing both `a` and `b`.
fn module_closure(g: &Graph, a: usize, b: usize) -> Vec<bool> {
    let n = g.n();
    let mut inside = vec![false; n];
    inside[a] = true;
    inside[b] = true;
    let mut members = vec![a, b];
    let mut changed = true;
    while changed {
        changed = false;
        for w in 0..n {
            if inside[w] {
                continue;
            }
            let hits = members.iter().filter(|&&u| g.has_edge(u, w)).count();
            if hits != 0 && hits != members.len() {
                inside[w] = true;
                members.push(w);
                changed = true;
            }
        }
    }
    inside
}

/// No module `B` with `2 <= |B| < n`. Graphs on at most two vertices are prime.
pub fn is_prime(g: &Graph) -> bool {
    let n = g.n();
    if n <= 2 {
        return true;
    }
    (0..n).all(|a| (a + 1..n).all(|b| module_closure(g, a, b).iter().all(|&x| x)))
}

/// Builds the decomposition tree; `None` for the empty graph.
pub fn modular_decomposition(g: &Graph) -> Option<ModularDecompositionTree> {
    if g.n() == 0 {
        return None;
    }
    let all: Vec<usize> = g.vertices().collect();
    Some(decompose(g, all))
}

fn decompose(g: &Graph, vs: Vec<usize>) -> ModularDecompositionTree {
    if vs.len() == 1 {
        return ModularDecompositionTree { vertices: vs, kind: None, children: Vec::new() };
    }
    let sub = g.induced(&vs);
    let (kind, parts) = modular_partition(&sub);
    let children = parts
        .into_iter()
        .map(|p| decompose(g, p.into_iter().map(|i| vs[i]).collect()))
        .collect();
    ModularDecompositionTree { vertices: vs, kind: Some(kind), children }
}

/// Maximal proper strong modules of a graph with at least two vertices.
fn modular_partition(g: &Graph) -> (QuotientKind, Vec<Vec<usize>>) {
    let to_vecs = |sets: Vec<crate::graph::VertexSet>| sets.into_iter().map(|s| s.into_iter().collect()).collect();
    let comps = g.components();
    if comps.len() > 1 {
        return (QuotientKind::Edgeless, to_vecs(comps));
    }
    let co = g.complement().components();
    if co.len() > 1 {
        return (QuotientKind::Complete, to_vecs(co));
    }
    let n = g.n();
    let mut owner = vec![usize::MAX; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if owner[v] != usize::MAX {
            continue;
        }
        let mut member = vec![false; n];
        member[v] = true;
        for u in 0..n {
            if u == v {
                continue;
            }
            let closure = module_closure(g, v, u);
            if closure.iter().any(|&x| !x) {
                for (w, &x) in closure.iter().enumerate() {
                    member[w] |= x;
                }
            }
        }
        let id = parts.len();
        let part: Vec<usize> = (0..n).filter(|&w| member[w]).collect();
        for &w in &part {
            owner[w] = id;
        }
        parts.push(part);
    }
    (QuotientKind::Prime, parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn p4_is_prime_root() {
        let t = modular_decomposition(&named::path(4)).unwrap();
        assert_eq!(t.kind, Some(QuotientKind::Prime));
        assert_eq!(t.children.len(), 4);
        assert!(t.children.iter().all(|c| c.is_leaf()));
    }

    #[test]
    fn triangle_is_complete() {
        let t = modular_decomposition(&named::complete(3)).unwrap();
        assert_eq!(t.kind, Some(QuotientKind::Complete));
        assert_eq!(t.children.len(), 3);
    }

    #[test]
    fn c4_children() {
        let t = modular_decomposition(&named::cycle(4).unwrap()).unwrap();
        assert_eq!(t.kind, Some(QuotientKind::Complete));
        let kids: Vec<Vec<usize>> = t.children.iter().map(|c| c.vertices.clone()).collect();
        assert_eq!(kids, vec![vec![0, 2], vec![1, 3]]);
        assert!(t.children.iter().all(|c| c.kind == Some(QuotientKind::Edgeless)));
    }

    #[test]
    fn primality() {
        assert!(is_prime(&named::path(4)));
        assert!(is_prime(&named::cycle(5).unwrap()));
        assert!(is_prime(&named::bull()));
        assert!(!is_prime(&named::cycle(4).unwrap()));
        assert!(!is_prime(&named::path(3)));
        assert!(is_prime(&named::path(2)));
    }

    #[test]
    fn prime_quotient_with_modules() {
        // P4 with its second vertex blown up into an independent pair
        let g = Graph::from_edges(5, &[(0, 1), (0, 4), (1, 2), (4, 2), (2, 3)]).unwrap();
        let t = modular_decomposition(&g).unwrap();
        assert_eq!(t.kind, Some(QuotientKind::Prime));
        let kids: Vec<Vec<usize>> = t.children.iter().map(|c| c.vertices.clone()).collect();
        assert_eq!(kids, vec![vec![0], vec![1, 4], vec![2], vec![3]]);
        assert!(is_prime(&t.quotient(&g)));
        assert!(is_module(&g, &[1, 4]));
        assert!(!is_module(&g, &[0, 1]));
    }
}
