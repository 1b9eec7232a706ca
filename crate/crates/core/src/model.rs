//! Instances of Max Partial H-Coloring and its multicoloring generalization.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest pattern for which dense subset-indexed tables are built.
pub const MAX_SUBSET_COLORS: usize = 20;

/// A pattern graph `H`. Colors are its vertices `0..k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PatternGraph {
    graph: Graph,
}

impl PatternGraph {
    /// Wraps a graph as a pattern; loops are allowed and make it reflexive.
    pub fn new(graph: Graph) -> Self {
        PatternGraph { graph }
    }

    pub fn irreflexive(graph: Graph) -> Result<Self> {
        if !graph.is_loopless() {
            return Err(Error::ReflexivePattern);
        }
        Ok(PatternGraph { graph })
    }

    pub fn complete(k: usize) -> Self {
        PatternGraph { graph: Graph::complete(k) }
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.graph.n()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn is_reflexive(&self) -> bool {
        !self.graph.is_loopless()
    }

    #[inline]
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.graph.has_edge(a, b)
    }

    /// Subpattern induced by `colors`; new color `i` is `colors[i]`.
    pub fn induced(&self, colors: &[usize]) -> PatternGraph {
        PatternGraph { graph: self.graph.induced(colors) }
    }

    /// `H - y` with the new-to-old color map.
    pub fn without(&self, y: usize) -> (PatternGraph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.k()).filter(|&c| c != y).collect();
        (self.induced(&keep), keep)
    }

    /// Bitmask of the neighbors of color `c`.
    pub fn neighbor_mask(&self, c: usize) -> u64 {
        self.graph.neighbors(c).iter().fold(0, |m, &d| m | 1 << d)
            | if self.graph.has_loop(c) { 1 << c } else { 0 }
    }

    /// Whether color sets `a` and `b` (bitmasks) are disjoint and complete to each other.
    pub fn masks_compatible(&self, a: u64, b: u64) -> bool {
        a & b == 0 && bits(a).all(|c| b & !self.neighbor_mask(c) == 0)
    }
}

/// Iterates the set bits of a mask in increasing order.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

/// Dense table of revenues `rev(u, v)`, one row of `k` values per host vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct RevenueTable {
    n: usize,
    k: usize,
    values: Vec<f64>,
}

impl RevenueTable {
    pub fn filled(n: usize, k: usize, value: f64) -> Self {
        RevenueTable { n, k, values: vec![value; n * k] }
    }

    pub fn from_fn(n: usize, k: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut values = Vec::with_capacity(n * k);
        for u in 0..n {
            for v in 0..k {
                values.push(f(u, v));
            }
        }
        RevenueTable { n, k, values }
    }

    pub fn from_rows(rows: &[Vec<f64>], k: usize) -> Result<Self> {
        let mut values = Vec::with_capacity(rows.len() * k);
        for (u, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(Error::InvalidInstance(format!(
                    "revenue row {u} has {} entries, pattern has {k} colors",
                    row.len()
                )));
            }
            if let Some(x) = row.iter().find(|x| !x.is_finite()) {
                return Err(Error::InvalidInstance(format!("revenue row {u} has non-finite value {x}")));
            }
            values.extend_from_slice(row);
        }
        Ok(RevenueTable { n: rows.len(), k, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> f64 {
        self.values[u * self.k + v]
    }

    #[inline]
    pub fn set(&mut self, u: usize, v: usize, x: f64) {
        self.values[u * self.k + v] = x;
    }

    pub fn row(&self, u: usize) -> &[f64] {
        &self.values[u * self.k..(u + 1) * self.k]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|u| self.row(u).to_vec()).collect()
    }

    pub fn has_positive(&self) -> bool {
        self.values.iter().any(|&x| x > 0.0)
    }

    /// Best strictly positive color for `u` (lowest color on ties).
    pub fn best_positive(&self, u: usize) -> Option<(usize, f64)> {
        let mut best: Option<(usize, f64)> = None;
        for (v, &x) in self.row(u).iter().enumerate() {
            if x > 0.0 && best.is_none_or(|(_, b)| x > b) {
                best = Some((v, x));
            }
        }
        best
    }

    /// Restriction to the given host vertices and colors (new ids are positions).
    pub fn restrict(&self, vertices: &[usize], colors: &[usize]) -> RevenueTable {
        RevenueTable::from_fn(vertices.len(), colors.len(), |u, v| self.get(vertices[u], colors[v]))
    }

    /// Bit patterns of the rows of `vertices`, usable as an exact hash key.
    pub fn key_bits(&self, vertices: impl IntoIterator<Item = usize>) -> Vec<u64> {
        let mut out = Vec::new();
        for u in vertices {
            out.extend(self.row(u).iter().map(|x| x.to_bits()));
        }
        out
    }
}

/// A host graph, an irreflexive (or, for the oracles only, reflexive) pattern,
/// and a revenue table over `V(G) × V(H)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub host: Graph,
    pub pattern: PatternGraph,
    pub rev: RevenueTable,
}

impl Instance {
    pub fn new(host: Graph, pattern: PatternGraph, rev: RevenueTable) -> Result<Self> {
        if !host.is_loopless() {
            return Err(Error::InvalidInstance("host graph has loops".into()));
        }
        if rev.n() != host.n() || rev.k() != pattern.k() {
            return Err(Error::InvalidInstance(format!(
                "revenue table is {}x{}, expected {}x{}",
                rev.n(),
                rev.k(),
                host.n(),
                pattern.k()
            )));
        }
        if let Some(x) = rev.values.iter().find(|x| !x.is_finite()) {
            return Err(Error::InvalidInstance(format!("non-finite revenue {x}")));
        }
        Ok(Instance { host, pattern, rev })
    }

    /// Instance with every revenue equal to `value`.
    pub fn uniform(host: Graph, pattern: PatternGraph, value: f64) -> Self {
        let rev = RevenueTable::filled(host.n(), pattern.k(), value);
        Instance { host, pattern, rev }
    }

    pub fn n(&self) -> usize {
        self.host.n()
    }

    pub fn k(&self) -> usize {
        self.pattern.k()
    }

    pub fn require_irreflexive(&self) -> Result<()> {
        if self.pattern.is_reflexive() {
            Err(Error::ReflexivePattern)
        } else {
            Ok(())
        }
    }

    pub fn with_revenue(&self, rev: RevenueTable) -> Instance {
        debug_assert!(rev.n() == self.n() && rev.k() == self.k());
        Instance { host: self.host.clone(), pattern: self.pattern.clone(), rev }
    }

    /// Induced sub-instance on `vertices`, keeping all colors.
    pub fn restrict(&self, vertices: &[usize]) -> SubInstance {
        let colors: Vec<usize> = (0..self.k()).collect();
        self.restrict_with_colors(vertices, &colors)
    }

    /// Induced sub-instance on `vertices` over the subpattern on `colors`.
    pub fn restrict_with_colors(&self, vertices: &[usize], colors: &[usize]) -> SubInstance {
        SubInstance {
            inst: Instance {
                host: self.host.induced(vertices),
                pattern: self.pattern.induced(colors),
                rev: self.rev.restrict(vertices, colors),
            },
            vertex_map: vertices.to_vec(),
            color_map: colors.to_vec(),
        }
    }
}

/// An instance carved out of a parent, with the maps needed to lift solutions.
#[derive(Clone, Debug, PartialEq)]
pub struct SubInstance {
    pub inst: Instance,
    /// New vertex id to parent vertex id.
    pub vertex_map: Vec<usize>,
    /// New color id to parent color id.
    pub color_map: Vec<usize>,
}

impl SubInstance {
    pub fn lift(&self, phi: &PartialColoring) -> PartialColoring {
        phi.iter().map(|(u, v)| (self.vertex_map[u], self.color_map[v])).collect()
    }
}

/// A partial map from host vertices to colors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartialColoring {
    map: BTreeMap<usize, usize>,
}

impl PartialColoring {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn assign(&mut self, u: usize, v: usize) {
        self.map.insert(u, v);
    }

    pub fn unassign(&mut self, u: usize) {
        self.map.remove(&u);
    }

    pub fn get(&self, u: usize) -> Option<usize> {
        self.map.get(&u).copied()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// `(vertex, color)` pairs in vertex order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.map.iter().map(|(&u, &v)| (u, v))
    }

    pub fn pairs(&self) -> Vec<[usize; 2]> {
        self.iter().map(|(u, v)| [u, v]).collect()
    }

    /// Union with a coloring on a disjoint domain.
    pub fn absorb(&mut self, other: PartialColoring) {
        for (u, v) in other.map {
            let prev = self.map.insert(u, v);
            debug_assert!(prev.is_none(), "domains overlap at {u}");
        }
    }
}

impl FromIterator<(usize, usize)> for PartialColoring {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        PartialColoring { map: iter.into_iter().collect() }
    }
}

/// An optimum value with a coloring attaining it.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Solution {
    pub value: f64,
    pub coloring: PartialColoring,
}

impl Solution {
    pub fn empty() -> Self {
        Self::default()
    }
}

fn check_coloring(inst: &Instance, phi: &PartialColoring) -> Result<()> {
    for (u, v) in phi.iter() {
        if u >= inst.n() {
            return Err(Error::VertexOutOfRange { vertex: u, n: inst.n() });
        }
        if v >= inst.k() {
            return Err(Error::ColorOutOfRange { color: v, k: inst.k() });
        }
    }
    Ok(())
}

/// `rev(φ) = Σ_{u ∈ dom φ} rev(u, φ(u))`.
pub fn revenue(inst: &Instance, phi: &PartialColoring) -> Result<f64> {
    check_coloring(inst, phi)?;
    Ok(phi.iter().map(|(u, v)| inst.rev.get(u, v)).sum())
}

/// Whether `φ` is a homomorphism from `G[dom φ]` to `H`.
pub fn is_valid(inst: &Instance, phi: &PartialColoring) -> bool {
    if check_coloring(inst, phi).is_err() {
        return false;
    }
    phi.iter().all(|(u, v)| {
        inst.host
            .neighbors(u)
            .iter()
            .filter(|&&w| w > u)
            .all(|&w| phi.get(w).is_none_or(|c| inst.pattern.adjacent(v, c)))
    })
}

/// Drops every assignment with negative revenue.
pub fn strip_negative(inst: &Instance, phi: &PartialColoring) -> PartialColoring {
    phi.iter().filter(|&(u, v)| inst.rev.get(u, v) >= 0.0).collect()
}

/// List instance as revenues: `+1` for listed colors, `-1` otherwise.
///
/// The result has optimum `n` exactly when `g` has a list homomorphism to `h`.
pub fn from_list_instance(g: &Graph, h: &PatternGraph, lists: &[Vec<usize>]) -> Result<Instance> {
    if lists.len() != g.n() {
        return Err(Error::InvalidInstance(format!(
            "{} lists for {} vertices",
            lists.len(),
            g.n()
        )));
    }
    let mut rev = RevenueTable::filled(g.n(), h.k(), -1.0);
    for (u, list) in lists.iter().enumerate() {
        for &c in list {
            if c >= h.k() {
                return Err(Error::ColorOutOfRange { color: c, k: h.k() });
            }
            rev.set(u, c, 1.0);
        }
    }
    Instance::new(g.clone(), h.clone(), rev)
}

/// Exact solution on an edgeless host: every vertex independently takes its best
/// positive color.
pub fn solve_edgeless(inst: &Instance) -> Result<Solution> {
    if let Some(&(u, v)) = inst.host.edges().first() {
        return Err(Error::HostHasEdge(u, v));
    }
    let mut sol = Solution::empty();
    for u in inst.host.vertices() {
        if let Some((v, x)) = inst.rev.best_positive(u) {
            sol.coloring.assign(u, v);
            sol.value += x;
        }
    }
    Ok(sol)
}

/// The power pattern `Ĥ`: one color per nonempty subset of `V(H)`, two subsets
/// adjacent iff disjoint and complete to each other in `H`.
///
/// Color `i` of the result is the subset with bitmask `i + 1`.
pub fn hat(h: &PatternGraph) -> Result<PatternGraph> {
    if h.is_reflexive() {
        return Err(Error::ReflexivePattern);
    }
    if h.k() > MAX_SUBSET_COLORS {
        return Err(Error::CapExceeded { what: "pattern colors", actual: h.k(), cap: MAX_SUBSET_COLORS });
    }
    let size = (1usize << h.k()) - 1;
    let mut g = Graph::new(size);
    for a in 1..=size as u64 {
        for b in a + 1..=size as u64 {
            if h.masks_compatible(a, b) {
                g.add_edge(a as usize - 1, b as usize - 1);
            }
        }
    }
    Ok(PatternGraph { graph: g })
}

/// Revenues over `V(G) × Pow*(H)`, indexed by subset bitmask.
#[derive(Clone, Debug, PartialEq)]
pub struct MulticolorInstance {
    pub host: Graph,
    pub pattern: PatternGraph,
    subsets: usize,
    values: Vec<f64>,
}

impl MulticolorInstance {
    pub fn from_fn(host: Graph, pattern: PatternGraph, mut f: impl FnMut(usize, u64) -> f64) -> Result<Self> {
        if pattern.is_reflexive() {
            return Err(Error::ReflexivePattern);
        }
        if pattern.k() > MAX_SUBSET_COLORS {
            return Err(Error::CapExceeded {
                what: "pattern colors",
                actual: pattern.k(),
                cap: MAX_SUBSET_COLORS,
            });
        }
        let subsets = (1usize << pattern.k()) - 1;
        let mut values = Vec::with_capacity(host.n() * subsets);
        for u in host.vertices() {
            for z in 1..=subsets as u64 {
                values.push(f(u, z));
            }
        }
        Ok(MulticolorInstance { host, pattern, subsets, values })
    }

    pub fn n(&self) -> usize {
        self.host.n()
    }

    pub fn k(&self) -> usize {
        self.pattern.k()
    }

    /// Mask of all colors.
    pub fn full_mask(&self) -> u64 {
        self.subsets as u64
    }

    /// `rev(u, Z)` for a nonempty subset mask `Z`.
    #[inline]
    pub fn get(&self, u: usize, z: u64) -> f64 {
        debug_assert!(z != 0 && z as usize <= self.subsets);
        self.values[u * self.subsets + z as usize - 1]
    }

    /// Sub-instance induced on `vertices` with the same pattern.
    pub fn restrict(&self, vertices: &[usize]) -> MulticolorInstance {
        let host = self.host.induced(vertices);
        MulticolorInstance::from_fn(host, self.pattern.clone(), |u, z| self.get(vertices[u], z))
            .expect("pattern already validated")
    }

    /// Reads the instance as Max Partial `Ĥ`-Coloring (color `i` = subset `i + 1`).
    pub fn as_hat_instance(&self) -> Result<Instance> {
        let hp = hat(&self.pattern)?;
        let rev = RevenueTable::from_fn(self.n(), self.subsets, |u, c| self.get(u, c as u64 + 1));
        Instance::new(self.host.clone(), hp, rev)
    }
}

/// A partial map from host vertices to nonempty color subsets (bitmasks).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Multicoloring {
    map: BTreeMap<usize, u64>,
}

impl Multicoloring {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn assign(&mut self, u: usize, z: u64) {
        debug_assert!(z != 0);
        self.map.insert(u, z);
    }

    pub fn get(&self, u: usize) -> Option<u64> {
        self.map.get(&u).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.map.iter().map(|(&u, &z)| (u, z))
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn absorb(&mut self, other: Multicoloring) {
        self.map.extend(other.map);
    }

    /// Reads a hat-pattern coloring (color `i` = subset `i + 1`) as a multicoloring.
    pub fn from_hat_coloring(phi: &PartialColoring) -> Self {
        Multicoloring { map: phi.iter().map(|(u, c)| (u, c as u64 + 1)).collect() }
    }
}

impl FromIterator<(usize, u64)> for Multicoloring {
    fn from_iter<I: IntoIterator<Item = (usize, u64)>>(iter: I) -> Self {
        Multicoloring { map: iter.into_iter().collect() }
    }
}

pub fn multicolor_revenue(minst: &MulticolorInstance, phi: &Multicoloring) -> f64 {
    phi.iter().map(|(u, z)| minst.get(u, z)).sum()
}

/// Adjacent colored vertices must get disjoint subsets, complete to each other in `H`.
pub fn is_valid_multicoloring(minst: &MulticolorInstance, phi: &Multicoloring) -> bool {
    let full = minst.full_mask();
    phi.iter().all(|(u, z)| {
        u < minst.n()
            && z != 0
            && z & !full == 0
            && minst.host.neighbors(u).iter().all(|&w| {
                phi.get(w).is_none_or(|zw| minst.pattern.masks_compatible(z, zw))
            })
    })
}

/// Multicoloring form of a coloring instance: singletons keep their revenue,
/// every larger subset gets `-1`.
pub fn to_multicolor(inst: &Instance) -> Result<MulticolorInstance> {
    inst.require_irreflexive()?;
    MulticolorInstance::from_fn(inst.host.clone(), inst.pattern.clone(), |u, z| {
        if z.is_power_of_two() {
            inst.rev.get(u, z.trailing_zeros() as usize)
        } else {
            -1.0
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::induced::is_isomorphic;
    use crate::named;

    fn k2_pattern() -> PatternGraph {
        PatternGraph::complete(2)
    }

    #[test]
    fn revenue_examples() {
        let inst = Instance::uniform(named::path(3), k2_pattern(), 1.0);
        assert_eq!(revenue(&inst, &PartialColoring::new()).unwrap(), 0.0);
        let one: PartialColoring = [(1, 0)].into_iter().collect();
        assert_eq!(revenue(&inst, &one).unwrap(), 1.0);
        let three: PartialColoring = [(0, 0), (1, 1), (2, 0)].into_iter().collect();
        assert_eq!(revenue(&inst, &three).unwrap(), 3.0);
        let bad: PartialColoring = [(5, 0)].into_iter().collect();
        assert!(revenue(&inst, &bad).is_err());
    }

    #[test]
    fn validity_examples() {
        let inst = Instance::uniform(named::complete(2), PatternGraph::complete(1), 1.0);
        assert!(is_valid(&inst, &PartialColoring::new()));
        let both: PartialColoring = [(0, 0), (1, 0)].into_iter().collect();
        assert!(!is_valid(&inst, &both));

        let c4 = Instance::uniform(named::cycle(4).unwrap(), k2_pattern(), 1.0);
        let proper: PartialColoring = [(0, 0), (1, 1), (2, 0), (3, 1)].into_iter().collect();
        assert!(is_valid(&c4, &proper));
    }

    #[test]
    fn strip_negative_examples() {
        let rev = RevenueTable::from_rows(&[vec![2.0, -1.0], vec![-1.0, 1.0], vec![3.0, -2.0]], 2).unwrap();
        let inst = Instance::new(Graph::new(3), k2_pattern(), rev).unwrap();
        let pos: PartialColoring = [(0, 0), (1, 1)].into_iter().collect();
        assert_eq!(strip_negative(&inst, &pos), pos);
        let neg: PartialColoring = [(0, 1)].into_iter().collect();
        assert!(strip_negative(&inst, &neg).is_empty());
        let mixed: PartialColoring = [(0, 0), (1, 0), (2, 1)].into_iter().collect();
        let stripped = strip_negative(&inst, &mixed);
        assert_eq!(revenue(&inst, &mixed).unwrap(), -1.0);
        assert_eq!(revenue(&inst, &stripped).unwrap(), 2.0);
    }

    #[test]
    fn edgeless_solver() {
        let inst = Instance::uniform(Graph::new(3), k2_pattern(), 1.0);
        assert_eq!(solve_edgeless(&inst).unwrap().value, 3.0);
        let neg = Instance::uniform(Graph::new(3), k2_pattern(), -1.0);
        let s = solve_edgeless(&neg).unwrap();
        assert_eq!(s.value, 0.0);
        assert!(s.coloring.is_empty());
        let e = Instance::uniform(named::path(2), k2_pattern(), 1.0);
        assert_eq!(solve_edgeless(&e), Err(Error::HostHasEdge(0, 1)));
    }

    #[test]
    fn hat_examples() {
        let k1 = hat(&PatternGraph::complete(1)).unwrap();
        assert_eq!(k1.k(), 1);
        assert_eq!(k1.graph().edge_count(), 0);
        // subsets {a}=0, {b}=1, {a,b}=2
        let k2 = hat(&k2_pattern()).unwrap();
        assert_eq!(k2.graph().edges(), vec![(0, 1)]);
        for k in 0..=4 {
            assert_eq!(hat(&PatternGraph::complete(k)).unwrap().k(), (1 << k) - 1);
        }
        assert!(hat(&PatternGraph::new(named::complete(1).disjoint_union(&Graph::new(0)))).is_ok());
    }

    #[test]
    fn hat_of_subpattern_is_induced() {
        let h = PatternGraph::irreflexive(named::path(3)).unwrap();
        let full = hat(&h).unwrap();
        for y in 0..3 {
            let (smaller, keep) = h.without(y);
            // subsets of V(H) avoiding y, as colors of `full`
            let avoiding: Vec<usize> = (1u64..8).filter(|z| z >> y & 1 == 0).map(|z| z as usize - 1).collect();
            assert!(is_isomorphic(hat(&smaller).unwrap().graph(), &full.graph().induced(&avoiding)));
            assert_eq!(keep.len(), 2);
        }
    }

    #[test]
    fn to_multicolor_revenues() {
        let rev = RevenueTable::from_rows(&[vec![2.0, 3.0]], 2).unwrap();
        let inst = Instance::new(Graph::new(1), k2_pattern(), rev).unwrap();
        let m = to_multicolor(&inst).unwrap();
        assert_eq!(m.get(0, 0b01), 2.0);
        assert_eq!(m.get(0, 0b10), 3.0);
        assert_eq!(m.get(0, 0b11), -1.0);
    }

    #[test]
    fn multicolor_validity() {
        let m = MulticolorInstance::from_fn(named::path(2), PatternGraph::complete(3), |_, _| 1.0).unwrap();
        let ok: Multicoloring = [(0, 0b011), (1, 0b100)].into_iter().collect();
        assert!(is_valid_multicoloring(&m, &ok));
        let overlap: Multicoloring = [(0, 0b011), (1, 0b110)].into_iter().collect();
        assert!(!is_valid_multicoloring(&m, &overlap));
    }

    #[test]
    fn list_instance_rows() {
        let inst = from_list_instance(&named::path(2), &k2_pattern(), &[vec![0], vec![]]).unwrap();
        assert_eq!(inst.rev.row(0), &[1.0, -1.0]);
        assert_eq!(inst.rev.row(1), &[-1.0, -1.0]);
        assert!(from_list_instance(&named::path(2), &k2_pattern(), &[vec![2], vec![]]).is_err());
    }
}
