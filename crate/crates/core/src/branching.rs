//! Branching around a monitor base: guesses, disallowed pairs and the two
//! branching procedures (anchored "full" and unanchored "simplified").

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::induced::contains_induced;
use crate::model::{Instance, PatternGraph, RevenueTable, SubInstance};
use crate::monitor::{find_monitor_base_padded, MonitorBase};
use crate::named;

/// `binom(s + t - 2, s - 1)`.
pub fn ramsey_bound(s: usize, t: usize) -> Result<usize> {
    if s == 0 || t == 0 {
        return Err(Error::InvalidParameter(format!("Ramsey bound needs s, t >= 1, got ({s}, {t})")));
    }
    let n = (s + t - 2) as u128;
    let k = (s - 1).min(t - 1) as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
        if acc > usize::MAX as u128 {
            return Err(Error::InvalidParameter(format!("Ramsey bound for ({s}, {t}) overflows")));
        }
    }
    Ok(acc as usize)
}

/// The base `X` together with the parts `A1..A4` of `V(G) - X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarPartition {
    pub x: Vec<usize>,
    parts: [VertexSet; 4],
    /// 0 for vertices of `X`, `i` for vertices of `A_i`.
    part_of: Vec<usize>,
}

impl StarPartition {
    /// `A_i` for `i` in `1..=4`.
    pub fn part(&self, i: usize) -> &VertexSet {
        &self.parts[i - 1]
    }

    /// 0 for `X`, otherwise the index of the part containing `u`.
    #[inline]
    pub fn part_of(&self, u: usize) -> usize {
        self.part_of[u]
    }

    pub fn in_x(&self, u: usize) -> bool {
        self.part_of[u] == 0
    }

    /// `N[X]` in increasing order.
    pub fn closed_neighborhood(&self) -> Vec<usize> {
        (0..self.part_of.len()).filter(|&u| self.part_of[u] <= 3).collect()
    }

    pub fn sizes(&self) -> [usize; 4] {
        [self.parts[0].len(), self.parts[1].len(), self.parts[2].len(), self.parts[3].len()]
    }
}

/// Splits `V(G) - X` into `A1 = N(x1) - X`, `A2 = N(x2) - (X ∪ A1)`,
/// `A3 = N(x3) - (X ∪ A1 ∪ A2)` and `A4 = V - N[X]`.
///
/// `x` must list distinct vertices, each after the first having an earlier neighbor.
pub fn partition_around(g: &Graph, x: &[usize]) -> Result<StarPartition> {
    if x.is_empty() || x.len() > 3 {
        return Err(Error::InvalidParameter(format!("base must have 1 to 3 vertices, got {}", x.len())));
    }
    for (i, &xi) in x.iter().enumerate() {
        if xi >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: xi, n: g.n() });
        }
        if x[..i].contains(&xi) {
            return Err(Error::InvalidParameter(format!("base repeats vertex {xi}")));
        }
        if i > 0 && !x[..i].iter().any(|&w| g.has_edge(w, xi)) {
            return Err(Error::InvalidParameter(format!("base vertex {xi} has no earlier neighbor")));
        }
    }
    let mut part_of = vec![4; g.n()];
    for &xi in x {
        part_of[xi] = 0;
    }
    for (i, &xi) in x.iter().enumerate() {
        for &u in g.neighbors(xi) {
            if part_of[u] == 4 {
                part_of[u] = i + 1;
            }
        }
    }
    let mut parts: [VertexSet; 4] = Default::default();
    for (u, &p) in part_of.iter().enumerate() {
        if p > 0 {
            parts[p - 1].insert(u);
        }
    }
    Ok(StarPartition { x: x.to_vec(), parts, part_of })
}

/// `G'`: keeps exactly the edges with both ends in the same part `A_i`.
pub fn strip_cross_edges(g: &Graph, sp: &StarPartition) -> Graph {
    let mut out = Graph::new(g.n());
    for (u, v) in g.edges() {
        let p = sp.part_of(u);
        if p != 0 && p == sp.part_of(v) {
            out.add_edge(u, v);
        }
    }
    out
}

/// A guess: disjoint color classes `R(v)` inside `N[X]`, stored as an owner per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Guess {
    owner: Vec<Option<usize>>,
    k: usize,
}

impl Guess {
    pub fn empty(n: usize, k: usize) -> Self {
        Guess { owner: vec![None; n], k }
    }

    pub fn from_classes(n: usize, k: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut g = Guess::empty(n, k);
        for (v, class) in classes.iter().enumerate() {
            for &u in class {
                if g.owner[u].replace(v).is_some() {
                    return Err(Error::InvalidParameter(format!("vertex {u} in two classes")));
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn owner(&self, u: usize) -> Option<usize> {
        self.owner[u]
    }

    pub fn class(&self, v: usize) -> Vec<usize> {
        (0..self.owner.len()).filter(|&u| self.owner[u] == Some(v)).collect()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of guessed assignments.
    pub fn len(&self) -> usize {
        self.owner.iter().flatten().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Which guesses to stream.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GuessFilter {
    /// Every guess.
    All,
    /// Only guesses that can be compatible with a positive-revenue solution
    /// built from minimal witness sets: `R(v)` uses only positive pairs, `R`
    /// is itself a partial `H`-coloring, and each `u ∈ R(v) ∩ A_i` has a
    /// neighbor in `A_{>i}` seeing no other vertex of `R(v) ∩ A_i`.
    Compatible,
}

/// Lazy stream of guesses, in lexicographic order of the owner vector.
pub struct GuessStream<'a> {
    g: &'a Graph,
    sp: &'a StarPartition,
    pattern: &'a PatternGraph,
    rev: Option<&'a RevenueTable>,
    bound: usize,
    order: Vec<usize>,
    owner: Vec<Option<usize>>,
    counts: Vec<[usize; 3]>,
    next: Vec<usize>,
    depth: usize,
    done: bool,
}

/// Streams the guesses for `sp` with per-part bound `Ramsey(s, t) - 1`.
///
/// With `anchor = Some((x, y))`, only guesses with `x ∈ R(y)` are produced.
/// `rev` is needed for [`GuessFilter::Compatible`].
#[allow(clippy::too_many_arguments)]
pub fn enumerate_guesses<'a>(
    g: &'a Graph,
    sp: &'a StarPartition,
    pattern: &'a PatternGraph,
    s: usize,
    t: usize,
    anchor: Option<(usize, usize)>,
    filter: GuessFilter,
    rev: Option<&'a RevenueTable>,
) -> Result<GuessStream<'a>> {
    let bound = ramsey_bound(s, t)? - 1;
    let k = pattern.k();
    let mut owner = vec![None; g.n()];
    let mut order = sp.closed_neighborhood();
    let rev = match filter {
        GuessFilter::All => None,
        GuessFilter::Compatible => {
            Some(rev.ok_or_else(|| Error::InvalidParameter("compatible guesses need revenues".into()))?)
        }
    };
    let mut done = false;
    if let Some((x, y)) = anchor {
        if !sp.x.first().is_some_and(|&x1| x1 == x) {
            return Err(Error::InvalidParameter(format!("anchor {x} is not the first base vertex")));
        }
        if y >= k {
            return Err(Error::ColorOutOfRange { color: y, k });
        }
        owner[x] = Some(y);
        order.retain(|&u| u != x);
        if let Some(r) = rev {
            done = r.get(x, y) <= 0.0;
        }
    }
    Ok(GuessStream {
        g,
        sp,
        pattern,
        rev,
        bound,
        next: vec![0; order.len()],
        order,
        owner,
        counts: vec![[0; 3]; k],
        depth: 0,
        done,
    })
}

impl GuessStream<'_> {
    fn feasible(&self, u: usize, v: usize) -> bool {
        let p = self.sp.part_of(u);
        if (1..=3).contains(&p) && self.counts[v][p - 1] >= self.bound {
            return false;
        }
        let Some(rev) = self.rev else {
            return true;
        };
        if rev.get(u, v) <= 0.0 {
            return false;
        }
        if (1..=3).contains(&p) && !self.g.neighbors(u).iter().any(|&w| self.sp.part_of(w) > p) {
            return false;
        }
        self.g
            .neighbors(u)
            .iter()
            .all(|&w| self.owner[w].is_none_or(|c| self.pattern.adjacent(v, c)))
    }

    fn set(&mut self, u: usize, v: Option<usize>) {
        let p = self.sp.part_of(u);
        if let Some(old) = self.owner[u] {
            if (1..=3).contains(&p) {
                self.counts[old][p - 1] -= 1;
            }
        }
        if let Some(new) = v {
            if (1..=3).contains(&p) {
                self.counts[new][p - 1] += 1;
            }
        }
        self.owner[u] = v;
    }

    fn irredundant(&self) -> bool {
        self.rev.is_none() || is_irredundant(self.g, self.sp, &self.owner)
    }
}

/// Every `u ∈ R(v) ∩ A_i` (`i ≤ 3`) has a private neighbor in `A_{>i}`.
fn is_irredundant(g: &Graph, sp: &StarPartition, owner: &[Option<usize>]) -> bool {
    (0..owner.len()).all(|u| {
        let (p, Some(v)) = (sp.part_of(u), owner[u]) else {
            return true;
        };
        if !(1..=3).contains(&p) {
            return true;
        }
        g.neighbors(u).iter().any(|&w| {
            sp.part_of(w) > p
                && g.neighbors(w)
                    .iter()
                    .all(|&z| z == u || sp.part_of(z) != p || owner[z] != Some(v))
        })
    })
}

impl Iterator for GuessStream<'_> {
    type Item = Guess;

    fn next(&mut self) -> Option<Guess> {
        let k = self.pattern.k();
        loop {
            if self.done {
                return None;
            }
            if self.depth == self.order.len() {
                let out = self.irredundant().then(|| Guess { owner: self.owner.clone(), k });
                if self.depth == 0 {
                    self.done = true;
                } else {
                    self.depth -= 1;
                    self.set(self.order[self.depth], None);
                }
                if out.is_some() {
                    return out;
                }
                continue;
            }
            let u = self.order[self.depth];
            let option = self.next[self.depth];
            if option > k {
                self.next[self.depth] = 0;
                if self.depth == 0 {
                    self.done = true;
                } else {
                    self.depth -= 1;
                    self.set(self.order[self.depth], None);
                }
                continue;
            }
            self.next[self.depth] += 1;
            if option == 0 {
                self.depth += 1;
            } else if self.feasible(u, option - 1) {
                self.set(u, Some(option - 1));
                self.depth += 1;
            }
        }
    }
}

/// A dense set of `(vertex, color)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSet {
    k: usize,
    bits: Vec<bool>,
}

impl PairSet {
    pub fn new(n: usize, k: usize) -> Self {
        PairSet { k, bits: vec![false; n * k] }
    }

    #[inline]
    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.k + v]
    }

    #[inline]
    pub fn insert(&mut self, u: usize, v: usize) {
        self.bits[u * self.k + v] = true;
    }

    pub fn len(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.k;
        self.bits.iter().enumerate().filter(|&(_, &b)| b).map(move |(i, _)| (i / k, i % k))
    }
}

/// The pairs ruled out by a guess: vertices of `X` outside their class, vertices
/// guessed for another color, vertices next to a guessed vertex of a
/// non-adjacent color, and vertices of `A_i` with an edge to some vertex of
/// `A_{>i}` that sees nothing of `R(v) ∩ A_i`.
pub fn disallowed_pairs(g: &Graph, sp: &StarPartition, pattern: &PatternGraph, guess: &Guess) -> PairSet {
    let (n, k) = (g.n(), pattern.k());
    let mut out = PairSet::new(n, k);
    for u in 0..n {
        let own = guess.owner(u);
        for v in 0..k {
            if (sp.in_x(u) && own != Some(v)) || own.is_some_and(|c| c != v) {
                out.insert(u, v);
            }
        }
        for &w in g.neighbors(u) {
            if let Some(c) = guess.owner(w) {
                for v in 0..k {
                    if !pattern.adjacent(v, c) {
                        out.insert(u, v);
                    }
                }
            }
        }
    }
    for i in 1..=3 {
        for v in 0..k {
            // vertices of A_{>i} with no neighbor in R(v) ∩ A_i
            let blind: Vec<bool> = (0..n)
                .map(|w| {
                    sp.part_of(w) > i
                        && !g.neighbors(w).iter().any(|&z| sp.part_of(z) == i && guess.owner(z) == Some(v))
                })
                .collect();
            for &u in sp.part(i) {
                if guess.owner(u) != Some(v) && g.neighbors(u).iter().any(|&w| blind[w]) {
                    out.insert(u, v);
                }
            }
        }
    }
    out
}

/// `rev` with every disallowed pair set to `-1`.
pub fn derived_revenue(rev: &RevenueTable, disallowed: &PairSet) -> RevenueTable {
    let mut out = rev.clone();
    for (u, v) in disallowed.iter() {
        out.set(u, v, -1.0);
    }
    out
}

/// Knobs shared by both branching procedures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BranchOptions {
    pub filter: GuessFilter,
    /// Verify `{P6, L_s, S_t}`-freeness up front.
    pub check_class: bool,
}

impl Default for BranchOptions {
    fn default() -> Self {
        BranchOptions { filter: GuessFilter::Compatible, check_class: false }
    }
}

/// Fails with a class violation if `g` contains `P6`, `L_s` or `S_t`.
pub fn check_branching_class(g: &Graph, s: usize, t: usize) -> Result<()> {
    let forbidden = [
        ("P6", named::path(6)),
        ("L_s", named::l_graph(s)?),
        ("S_t", named::star_subdivision(t)?),
    ];
    for (name, f) in forbidden {
        if let Some(w) = contains_induced(g, &f) {
            return Err(Error::ClassViolation(format!("host contains an induced {name} on {w:?}")));
        }
    }
    Ok(())
}

fn branching_preconditions(inst: &Instance, opts: &BranchOptions, s: usize, t: usize) -> Result<()> {
    inst.require_irreflexive()?;
    ramsey_bound(s, t)?;
    if !inst.host.is_connected() {
        return Err(Error::Disconnected);
    }
    if inst.n() < 3 {
        return Err(Error::InvalidParameter(format!("branching needs at least 3 vertices, got {}", inst.n())));
    }
    if opts.check_class {
        check_branching_class(&inst.host, s, t)?;
    }
    Ok(())
}

/// Unanchored branching: one base, one stripped graph, one revenue table per guess.
pub struct SimplifiedBranching<'a> {
    inst: &'a Instance,
    pub base: MonitorBase,
    pub partition: StarPartition,
    pub stripped: Graph,
    s: usize,
    t: usize,
    filter: GuessFilter,
}

pub fn prepare_simplified<'a>(
    inst: &'a Instance,
    s: usize,
    t: usize,
    opts: &BranchOptions,
) -> Result<SimplifiedBranching<'a>> {
    branching_preconditions(inst, opts, s, t)?;
    let base = find_monitor_base_padded(&inst.host, None)?;
    let partition = partition_around(&inst.host, &base.x)?;
    let stripped = strip_cross_edges(&inst.host, &partition);
    Ok(SimplifiedBranching { inst, base, partition, stripped, s, t, filter: opts.filter })
}

impl SimplifiedBranching<'_> {
    pub fn guesses(&self) -> GuessStream<'_> {
        enumerate_guesses(
            &self.inst.host,
            &self.partition,
            &self.inst.pattern,
            self.s,
            self.t,
            None,
            self.filter,
            Some(&self.inst.rev),
        )
        .expect("parameters validated")
    }

    /// The derived revenue tables, one per guess.
    pub fn revenues(&self) -> impl Iterator<Item = RevenueTable> + '_ {
        self.guesses().map(move |r| self.revenue_for(&r))
    }

    pub fn revenue_for(&self, guess: &Guess) -> RevenueTable {
        let b = disallowed_pairs(&self.inst.host, &self.partition, &self.inst.pattern, guess);
        derived_revenue(&self.inst.rev, &b)
    }
}

/// Collects the simplified branching: `G'` and the family of revenue tables.
pub fn branch_simplified(
    inst: &Instance,
    s: usize,
    t: usize,
    opts: &BranchOptions,
) -> Result<(Graph, Vec<RevenueTable>)> {
    let b = prepare_simplified(inst, s, t, opts)?;
    let revs = b.revenues().collect();
    Ok((b.stripped.clone(), revs))
}

/// One element of the full branching: an instance on `A1` over `H - y` and an
/// instance on the rest over `H`, with no edges between them after stripping.
#[derive(Clone, Debug)]
pub struct BranchPair {
    pub anchor: (usize, usize),
    pub guess: Guess,
    pub first: SubInstance,
    pub second: SubInstance,
}

/// Per-anchor data of the full branching.
#[derive(Clone, Debug)]
pub struct AnchorFrame {
    pub anchor: (usize, usize),
    pub base: MonitorBase,
    pub partition: StarPartition,
    pub stripped: Graph,
    first_vertices: Vec<usize>,
    second_vertices: Vec<usize>,
    first_colors: Vec<usize>,
}

/// Anchored branching over all positive pairs `(x, y)`, in increasing order.
pub struct FullBranching<'a> {
    inst: &'a Instance,
    pub frames: Vec<AnchorFrame>,
    s: usize,
    t: usize,
    filter: GuessFilter,
}

pub fn prepare_full<'a>(inst: &'a Instance, s: usize, t: usize, opts: &BranchOptions) -> Result<FullBranching<'a>> {
    branching_preconditions(inst, opts, s, t)?;
    if !inst.rev.has_positive() {
        return Err(Error::NoPositiveRevenue);
    }
    let mut frames = Vec::new();
    for x in inst.host.vertices() {
        for y in 0..inst.k() {
            if inst.rev.get(x, y) <= 0.0 {
                continue;
            }
            let base = find_monitor_base_padded(&inst.host, Some(x))?;
            let partition = partition_around(&inst.host, &base.x)?;
            let stripped = strip_cross_edges(&inst.host, &partition);
            let first_vertices: Vec<usize> = partition.part(1).iter().copied().collect();
            let second_vertices: Vec<usize> = inst.host.vertices().filter(|&u| partition.part_of(u) != 1).collect();
            let first_colors: Vec<usize> = (0..inst.k()).filter(|&c| c != y).collect();
            frames.push(AnchorFrame {
                anchor: (x, y),
                base,
                partition,
                stripped,
                first_vertices,
                second_vertices,
                first_colors,
            });
        }
    }
    Ok(FullBranching { inst, frames, s, t, filter: opts.filter })
}

impl<'a> FullBranching<'a> {
    pub fn guesses<'b>(&'b self, frame: &'b AnchorFrame) -> GuessStream<'b> {
        enumerate_guesses(
            &self.inst.host,
            &frame.partition,
            &self.inst.pattern,
            self.s,
            self.t,
            Some(frame.anchor),
            self.filter,
            Some(&self.inst.rev),
        )
        .expect("parameters validated")
    }

    /// Builds the pair of sub-instances for one guess.
    pub fn pair_for(&self, frame: &AnchorFrame, guess: Guess) -> BranchPair {
        let b = disallowed_pairs(&self.inst.host, &frame.partition, &self.inst.pattern, &guess);
        let derived = Instance {
            host: frame.stripped.clone(),
            pattern: self.inst.pattern.clone(),
            rev: derived_revenue(&self.inst.rev, &b),
        };
        let all_colors: Vec<usize> = (0..self.inst.k()).collect();
        BranchPair {
            anchor: frame.anchor,
            guess,
            first: derived.restrict_with_colors(&frame.first_vertices, &frame.first_colors),
            second: derived.restrict_with_colors(&frame.second_vertices, &all_colors),
        }
    }

    pub fn pairs(&self) -> impl Iterator<Item = BranchPair> + '_ {
        self.frames
            .iter()
            .flat_map(move |f| self.guesses(f).map(move |r| self.pair_for(f, r)))
    }
}

/// Collects the full branching.
pub fn branch_full(inst: &Instance, s: usize, t: usize, opts: &BranchOptions) -> Result<Vec<BranchPair>> {
    let b = prepare_full(inst, s, t, opts)?;
    let pairs = b.pairs().collect();
    Ok(pairs)
}
