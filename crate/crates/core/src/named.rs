//! Constructors for the small named graphs used as forbidden patterns.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Path on `t` vertices `0 - 1 - ... - (t-1)`.
pub fn path(t: usize) -> Graph {
    let mut g = Graph::new(t);
    for i in 1..t {
        g.add_edge(i - 1, i);
    }
    g
}

/// Cycle on `t >= 3` vertices.
pub fn cycle(t: usize) -> Result<Graph> {
    if t < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs t >= 3, got {t}")));
    }
    let mut g = path(t);
    g.add_edge(t - 1, 0);
    Ok(g)
}

pub fn complete(t: usize) -> Graph {
    Graph::complete(t)
}

pub fn edgeless(t: usize) -> Graph {
    Graph::new(t)
}

/// `S_t`: the star `K_{1,t}` with every edge subdivided once.
///
/// Vertex 0 is the center, `1..=t` the subdivision vertices and `t+1..=2t` the leaves.
pub fn star_subdivision(t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::InvalidParameter("S_t needs t >= 1".into()));
    }
    let mut g = Graph::new(2 * t + 1);
    for i in 1..=t {
        g.add_edge(0, i);
        g.add_edge(i, i + t);
    }
    Ok(g)
}

/// `L_t`: `S_t` with its leaves made pairwise adjacent (`L_1 = P_3`).
pub fn l_graph(t: usize) -> Result<Graph> {
    let mut g = star_subdivision(t)?;
    for i in t + 1..=2 * t {
        for j in i + 1..=2 * t {
            g.add_edge(i, j);
        }
    }
    Ok(g)
}

/// The half-graph `Q_k`: independent `a_1..a_k` (ids `0..k`), clique `b_1..b_k`
/// (ids `k..2k`), with `a_i b_j` an edge iff `i <= j`.
pub fn half_graph(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameter("Q_k needs k >= 1".into()));
    }
    let mut g = Graph::new(2 * k);
    for i in 0..k {
        for j in 0..k {
            if i <= j {
                g.add_edge(i, k + j);
            }
            if i < j {
                g.add_edge(k + i, k + j);
            }
        }
    }
    Ok(g)
}

/// `F` plus a universal vertex (the new vertex is last).
pub fn univ(f: &Graph) -> Graph {
    let n = f.n();
    let mut g = f.disjoint_union(&Graph::new(1));
    for u in 0..n {
        g.add_edge(u, n);
    }
    g
}

/// `F` plus an isolated vertex `x = n`, then a universal vertex `y = n + 1`.
pub fn ante(f: &Graph) -> Graph {
    let with_isolated = f.disjoint_union(&Graph::new(1));
    univ(&with_isolated)
}

/// Triangle `0,1,2` with pendant vertices `3` (at 0) and `4` (at 1).
pub fn bull() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]).unwrap()
}

/// Two disjoint edges.
pub fn two_k2() -> Graph {
    Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges).unwrap()
}

/// `k + 1` disjoint cliques of size `k`; the first vertex of clique `i >= 1` is
/// joined to vertex `i - 1` of clique 0. Clique `i` occupies ids `i*k .. (i+1)*k`.
pub fn p7_counterexample(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameter("counterexample needs k >= 1".into()));
    }
    let mut g = Graph::new(k * (k + 1));
    for c in 0..=k {
        for a in 0..k {
            for b in a + 1..k {
                g.add_edge(c * k + a, c * k + b);
            }
        }
    }
    for i in 1..=k {
        g.add_edge(i * k, i - 1);
    }
    Ok(g)
}

/// Selector for [`make_named`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedKind {
    Path,
    Cycle,
    Complete,
    Edgeless,
    StarSubdivision,
    LGraph,
    HalfGraph,
    Bull,
    TwoK2,
    Petersen,
    P7Counterexample,
}

impl FromStr for NamedKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "path" | "p" | "pt" => NamedKind::Path,
            "cycle" | "c" | "ct" => NamedKind::Cycle,
            "complete" | "k" | "kt" => NamedKind::Complete,
            "edgeless" | "e" => NamedKind::Edgeless,
            "star-subdivision" | "s" | "st" => NamedKind::StarSubdivision,
            "l" | "lt" => NamedKind::LGraph,
            "q" | "qk" | "half-graph" => NamedKind::HalfGraph,
            "bull" => NamedKind::Bull,
            "2k2" | "2p2" => NamedKind::TwoK2,
            "petersen" => NamedKind::Petersen,
            "p7-counterexample" | "p7cex" => NamedKind::P7Counterexample,
            other => return Err(Error::InvalidParameter(format!("unknown graph kind {other:?}"))),
        })
    }
}

impl fmt::Display for NamedKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NamedKind::Path => "path",
            NamedKind::Cycle => "cycle",
            NamedKind::Complete => "complete",
            NamedKind::Edgeless => "edgeless",
            NamedKind::StarSubdivision => "star-subdivision",
            NamedKind::LGraph => "l",
            NamedKind::HalfGraph => "qk",
            NamedKind::Bull => "bull",
            NamedKind::TwoK2 => "2k2",
            NamedKind::Petersen => "petersen",
            NamedKind::P7Counterexample => "p7-counterexample",
        };
        f.write_str(s)
    }
}

/// Builds a named graph; `param` is `t` or `k` where the kind takes one.
pub fn make_named(kind: NamedKind, param: usize) -> Result<Graph> {
    let need_positive = |p: usize| {
        if p == 0 {
            Err(Error::InvalidParameter(format!("{kind} needs a positive parameter")))
        } else {
            Ok(p)
        }
    };
    match kind {
        NamedKind::Path => Ok(path(need_positive(param)?)),
        NamedKind::Cycle => cycle(param),
        NamedKind::Complete => Ok(complete(need_positive(param)?)),
        NamedKind::Edgeless => Ok(edgeless(need_positive(param)?)),
        NamedKind::StarSubdivision => star_subdivision(param),
        NamedKind::LGraph => l_graph(param),
        NamedKind::HalfGraph => half_graph(param),
        NamedKind::Bull => Ok(bull()),
        NamedKind::TwoK2 => Ok(two_k2()),
        NamedKind::Petersen => Ok(petersen()),
        NamedKind::P7Counterexample => p7_counterexample(param),
    }
}
