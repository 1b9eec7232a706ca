//! Induced-subgraph search, isomorphism of small graphs, and cliques.

use crate::graph::Graph;

/// Finds `A` with `g[A]` isomorphic to `f`.
///
/// The witness is returned as an embedding: entry `i` is the image of vertex `i`
/// of `f`. Loops on `f` are ignored.
pub fn contains_induced(g: &Graph, f: &Graph) -> Option<Vec<usize>> {
    if f.n() > g.n() {
        return None;
    }
    if f.n() == 0 {
        return Some(Vec::new());
    }
    let order = search_order(f);
    let mut image = vec![usize::MAX; f.n()];
    let mut used = vec![false; g.n()];
    if extend(g, f, &order, 0, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

/// Pattern vertices in BFS order per component, each entry carrying an earlier
/// neighbor (if any) whose image constrains the candidates.
fn search_order(f: &Graph) -> Vec<(usize, Option<usize>)> {
    let mut order = Vec::with_capacity(f.n());
    let mut placed = vec![false; f.n()];
    // high-degree vertices first
    let mut starts: Vec<usize> = f.vertices().collect();
    starts.sort_by_key(|&v| std::cmp::Reverse(f.degree(v)));
    for s in starts {
        if placed[s] {
            continue;
        }
        placed[s] = true;
        order.push((s, None));
        let mut head = order.len() - 1;
        while head < order.len() {
            let (u, _) = order[head];
            head += 1;
            for &w in f.neighbors(u) {
                if !placed[w] {
                    placed[w] = true;
                    order.push((w, Some(u)));
                }
            }
        }
    }
    order
}

fn extend(
    g: &Graph,
    f: &Graph,
    order: &[(usize, Option<usize>)],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let (p, anchor) = order[depth];
    let candidates: Vec<usize> = match anchor {
        Some(a) => g.neighbors(image[a]).to_vec(),
        None => g.vertices().collect(),
    };
    for c in candidates {
        if used[c] || g.degree(c) < f.degree(p) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&(q, _)| f.has_edge(p, q) == g.has_edge(c, image[q]));
        if !consistent {
            continue;
        }
        image[p] = c;
        used[c] = true;
        if extend(g, f, order, depth + 1, image, used) {
            return true;
        }
        used[c] = false;
    }
    image[p] = usize::MAX;
    false
}

/// Brute-force isomorphism test for small loop-free graphs.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = a.vertices().map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = b.vertices().map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    da == db && contains_induced(a, b).is_some()
}

/// All maximal cliques (Bron–Kerbosch with pivoting), each sorted.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut r = Vec::new();
    bron_kerbosch(g, &mut r, g.vertices().collect(), Vec::new(), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    p: Vec<usize>,
    mut x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() && !r.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&v| g.has_edge(u, v)).count())
        .unwrap();
    let mut p = p;
    let branch: Vec<usize> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
    for v in branch {
        let np = p.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        let nx = x.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        r.push(v);
        bron_kerbosch(g, r, np, nx, out);
        r.pop();
        p.retain(|&w| w != v);
        x.push(v);
    }
}

/// A maximum clique, sorted; empty for the empty graph.
pub fn maximum_clique(g: &Graph) -> Vec<usize> {
    let mut best = Vec::new();
    let mut current = Vec::new();
    grow_clique(g, &mut current, g.vertices().collect(), &mut best);
    best.sort_unstable();
    best
}

fn grow_clique(g: &Graph, current: &mut Vec<usize>, cand: Vec<usize>, best: &mut Vec<usize>) {
    if current.len() > best.len() {
        *best = current.clone();
    }
    for (i, &v) in cand.iter().enumerate() {
        if current.len() + cand.len() - i <= best.len() {
            return;
        }
        let next: Vec<usize> = cand[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        current.push(v);
        grow_clique(g, current, next, best);
        current.pop();
    }
}

/// Clique number `ω(g)`; 0 for the empty graph.
pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).len()
}

/// Some clique on exactly `size` vertices, if one exists.
pub fn find_clique(g: &Graph, size: usize) -> Option<Vec<usize>> {
    let best = maximum_clique(g);
    (best.len() >= size).then(|| best[..size].to_vec())
}
