//! Hereditary class recognition and seeded sampling of class members.
//!
//! All sampling randomness comes from `ChaCha8Rng::seed_from_u64(seed)`.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::induced::contains_induced;
use crate::modular::is_prime;
use crate::named;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphClass {
    /// No induced `P_t`.
    PathFree(usize),
    BullFree,
    /// No induced `S_t`.
    StarSubdivisionFree(usize),
    /// No induced `L_t`.
    LFree(usize),
    C5Free,
    /// No induced `Q_k`.
    HalfGraphFree(usize),
    Threshold,
    /// Vertex set splits into a clique and an independent set.
    Split,
    Cograph,
    Cobipartite,
    Prime,
}

impl GraphClass {
    /// The forbidden induced subgraphs whose absence defines the class, when it
    /// is recognized that way.
    pub fn forbidden(&self) -> Option<Vec<Graph>> {
        let one = |g: Result<Graph>| g.map(|g| vec![g]).ok();
        match *self {
            GraphClass::PathFree(t) => Some(vec![named::path(t)]),
            GraphClass::BullFree => Some(vec![named::bull()]),
            GraphClass::StarSubdivisionFree(t) => one(named::star_subdivision(t)),
            GraphClass::LFree(t) => one(named::l_graph(t)),
            GraphClass::C5Free => one(named::cycle(5)),
            GraphClass::HalfGraphFree(k) => one(named::half_graph(k)),
            GraphClass::Threshold => Some(vec![
                named::two_k2(),
                named::cycle(4).unwrap(),
                named::path(4),
            ]),
            GraphClass::Cograph => Some(vec![named::path(4)]),
            GraphClass::Split | GraphClass::Cobipartite | GraphClass::Prime => None,
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            GraphClass::PathFree(0)
            | GraphClass::StarSubdivisionFree(0)
            | GraphClass::LFree(0)
            | GraphClass::HalfGraphFree(0) => {
                Err(Error::InvalidParameter(format!("class {self} needs a positive parameter")))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphClass::PathFree(t) => write!(f, "p{t}-free"),
            GraphClass::BullFree => f.write_str("bull-free"),
            GraphClass::StarSubdivisionFree(t) => write!(f, "s{t}-free"),
            GraphClass::LFree(t) => write!(f, "l{t}-free"),
            GraphClass::C5Free => f.write_str("c5-free"),
            GraphClass::HalfGraphFree(k) => write!(f, "q{k}-free"),
            GraphClass::Threshold => f.write_str("threshold"),
            GraphClass::Split => f.write_str("split"),
            GraphClass::Cograph => f.write_str("cograph"),
            GraphClass::Cobipartite => f.write_str("cobipartite"),
            GraphClass::Prime => f.write_str("prime"),
        }
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    /// Accepts e.g. `p5-free`, `P5free`, `bull-free`, `s3-free`, `q2-free`, `threshold`.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let bad = || Error::InvalidParameter(format!("unknown graph class {s:?}"));
        let body = lower
            .strip_suffix("-free")
            .or_else(|| lower.strip_suffix("free"))
            .map(|b| b.trim_end_matches('-'));
        let class = match body {
            Some("bull") => GraphClass::BullFree,
            Some("c5") => GraphClass::C5Free,
            Some(b) => {
                let (head, digits) = b.split_at(1);
                let t: usize = digits.parse().map_err(|_| bad())?;
                match head {
                    "p" => GraphClass::PathFree(t),
                    "s" => GraphClass::StarSubdivisionFree(t),
                    "l" => GraphClass::LFree(t),
                    "q" => GraphClass::HalfGraphFree(t),
                    _ => return Err(bad()),
                }
            }
            None => match lower.as_str() {
                "threshold" => GraphClass::Threshold,
                "split" => GraphClass::Split,
                "cograph" | "cographs" => GraphClass::Cograph,
                "cobipartite" => GraphClass::Cobipartite,
                "prime" => GraphClass::Prime,
                _ => return Err(bad()),
            },
        };
        class.validate()?;
        Ok(class)
    }
}

/// Parses a comma- or `+`-separated intersection of classes, e.g. `p5-free,bull-free`.
pub fn parse_classes(s: &str) -> Result<Vec<GraphClass>> {
    s.split([',', '+']).filter(|p| !p.trim().is_empty()).map(str::parse).collect()
}

/// Membership test; also returns a forbidden-subgraph witness when one is found.
pub fn recognize_with_witness(g: &Graph, class: GraphClass) -> Result<(bool, Option<Vec<usize>>)> {
    class.validate()?;
    match class {
        GraphClass::Split => Ok((is_split(g), None)),
        GraphClass::Cobipartite => Ok((g.complement().is_bipartite(), None)),
        GraphClass::Prime => Ok((is_prime(g), None)),
        _ => {
            for f in class.forbidden().expect("forbidden list") {
                if let Some(w) = contains_induced(g, &f) {
                    return Ok((false, Some(w)));
                }
            }
            Ok((true, None))
        }
    }
}

pub fn recognize(g: &Graph, class: GraphClass) -> bool {
    recognize_with_witness(g, class).map(|(b, _)| b).unwrap_or(false)
}

pub fn recognize_all(g: &Graph, classes: &[GraphClass]) -> bool {
    classes.iter().all(|&c| recognize(g, c))
}

/// Split recognition from the degree sequence: with degrees sorted decreasingly
/// and `m = max { i : d_i >= i - 1 }`, the graph is split iff
/// `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`.
pub fn is_split(g: &Graph) -> bool {
    let mut d: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let m = d
        .iter()
        .enumerate()
        .filter(|&(i, &di)| di >= i)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(0);
    let head: usize = d[..m].iter().sum();
    let tail: usize = d[m..].iter().sum();
    head == m * m.saturating_sub(1) + tail
}

#[derive(Clone, Copy, Debug)]
pub struct SampleOptions {
    /// Require the sample to be connected.
    pub connected: bool,
    /// Maximum rejection-sampling attempts.
    pub budget: usize,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions { connected: false, budget: 200_000 }
    }
}

/// A random `n`-vertex graph in the intersection of `classes`.
///
/// Single-class requests for cographs, split and threshold graphs are built
/// directly (random cotree, random partition, random creation sequence); anything
/// else is rejection-sampled from `G(n, density)`.
pub fn sample_in_class(
    classes: &[GraphClass],
    n: usize,
    density: f64,
    seed: u64,
    opts: SampleOptions,
) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_with_rng(classes, n, density, &mut rng, opts)
}

pub fn sample_with_rng<R: Rng>(
    classes: &[GraphClass],
    n: usize,
    density: f64,
    rng: &mut R,
    opts: SampleOptions,
) -> Result<Graph> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::InvalidParameter(format!("density {density} not in [0, 1]")));
    }
    for c in classes {
        c.validate()?;
    }
    for _ in 0..opts.budget.max(1) {
        let g = match classes {
            [GraphClass::Cograph] => random_cograph(n, density, opts.connected, rng),
            [GraphClass::Split] => random_split(n, density, rng),
            [GraphClass::Threshold] => random_threshold(n, density, rng),
            _ => random_gnp(n, density, rng),
        };
        if opts.connected && n > 0 && !g.is_connected() {
            continue;
        }
        if recognize_all(&g, classes) {
            return Ok(g);
        }
    }
    Err(Error::SamplingBudget(opts.budget))
}

pub fn random_gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random cotree: each internal node is a join with probability `join_p`,
/// otherwise a disjoint union. A connected request forces a join at the root.
pub fn random_cograph<R: Rng>(n: usize, join_p: f64, connected: bool, rng: &mut R) -> Graph {
    fn build<R: Rng>(vs: &[usize], join_p: f64, force_join: bool, g: &mut Graph, rng: &mut R) {
        if vs.len() <= 1 {
            return;
        }
        let cut = rng.gen_range(1..vs.len());
        let (left, right) = vs.split_at(cut);
        if force_join || rng.gen_bool(join_p) {
            for &u in left {
                for &v in right {
                    g.add_edge(u, v);
                }
            }
        }
        build(left, join_p, false, g, rng);
        build(right, join_p, false, g, rng);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut g = Graph::new(n);
    build(&order, join_p, connected, &mut g, rng);
    g
}

/// Random split graph: each vertex joins the clique side with probability 1/2;
/// clique-to-independent edges appear with probability `p`.
pub fn random_split<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            let edge = match (side[u], side[v]) {
                (true, true) => true,
                (false, false) => false,
                _ => rng.gen_bool(p),
            };
            if edge {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random threshold graph: vertices arrive in a random order, each one isolated
/// or dominating (probability `p`).
pub fn random_threshold<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut g = Graph::new(n);
    for i in 1..n {
        if rng.gen_bool(p) {
            for &u in &order[..i] {
                g.add_edge(order[i], u);
            }
        }
    }
    g
}
