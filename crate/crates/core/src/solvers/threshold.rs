use std::collections::HashMap;

use super::{cograph::solve_cograph_solution, lift, SolveReport, SolveStats, SolverConfig};
use crate::branching::{check_branching_class, prepare_full};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::induced::contains_induced;
use crate::model::{solve_edgeless, Instance, Solution};
use crate::named;
use crate::oracle::oracle_solve_limited;

/// Base class of the exclusion chain `F_0, F_1 = ante(F_0), ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExclusionBase {
    /// `F_j = Q_j`; level 1 means edgeless hosts.
    HalfGraph,
    /// `F_j = ante^j(P4)`; level 0 means cographs.
    Cograph,
}

impl ExclusionBase {
    fn base_level(self) -> usize {
        match self {
            ExclusionBase::HalfGraph => 1,
            ExclusionBase::Cograph => 0,
        }
    }

    /// The graph excluded at `level`.
    pub fn excluded(self, level: usize) -> Result<Graph> {
        match self {
            ExclusionBase::HalfGraph => named::half_graph(level),
            ExclusionBase::Cograph => {
                let mut g = named::path(4);
                for _ in 0..level {
                    g = named::ante(&g);
                }
                Ok(g)
            }
        }
    }
}

/// Exact solver for `{P6, L_s, S_t, Q_k}`-free hosts.
///
/// Full branching splits each instance into one over `A1` with a smaller
/// pattern (same `k`) and one over the rest that is `Q_{k-1}`-free. At `k = 1`
/// the host is edgeless.
pub fn solve_threshold_excluded(inst: &Instance, cfg: &SolverConfig, k: usize) -> Result<SolveReport> {
    solve_ante_excluded(inst, cfg, k, ExclusionBase::HalfGraph)
}

/// The same induction for an arbitrary base of the exclusion chain.
pub fn solve_ante_excluded(inst: &Instance, cfg: &SolverConfig, level: usize, base: ExclusionBase) -> Result<SolveReport> {
    cfg.validate()?;
    inst.require_irreflexive()?;
    if level < base.base_level() {
        return Err(Error::InvalidParameter(format!("level {level} is below the base level")));
    }
    if cfg.check_class {
        check_branching_class(&inst.host, cfg.s, cfg.t)?;
        let f = base.excluded(level)?;
        if let Some(w) = contains_induced(&inst.host, &f) {
            return Err(Error::ClassViolation(format!("host contains the excluded graph on {w:?}")));
        }
    }
    let mut ctx = Exclusion { cfg, base, memo: HashMap::new(), stats: SolveStats::default() };
    let ids: Vec<usize> = inst.host.vertices().collect();
    let colors: Vec<usize> = (0..inst.k()).collect();
    let (sol, depth) = ctx.solve(inst, &ids, &colors, level)?;
    let mut stats = ctx.stats;
    stats.depth = depth;
    Ok(SolveReport::from_solution(sol, stats))
}

type MemoKey = (Vec<usize>, Vec<usize>, Vec<u64>, usize);

struct Exclusion<'a> {
    cfg: &'a SolverConfig,
    base: ExclusionBase,
    memo: HashMap<MemoKey, (Solution, usize)>,
    stats: SolveStats,
}

impl Exclusion<'_> {
    /// `ids` and `colors` name the vertices and colors of `inst` in the root instance.
    fn solve(&mut self, inst: &Instance, ids: &[usize], colors: &[usize], level: usize) -> Result<(Solution, usize)> {
        if inst.k() == 0 || inst.n() == 0 {
            return Ok((Solution::empty(), 1));
        }
        if level == self.base.base_level() {
            let sol = match self.base {
                ExclusionBase::HalfGraph => solve_edgeless(inst).map_err(|e| match e {
                    Error::HostHasEdge(u, v) => {
                        Error::ClassViolation(format!("host at the base level has the edge ({}, {})", ids[u], ids[v]))
                    }
                    other => other,
                })?,
                ExclusionBase::Cograph => solve_cograph_solution(inst)?,
            };
            return Ok((sol, 1));
        }
        if !inst.host.is_connected() {
            let mut out = Solution::empty();
            let mut depth = 0;
            for comp in inst.host.components() {
                let vs: Vec<usize> = comp.into_iter().collect();
                let sub = inst.restrict(&vs);
                let sub_ids: Vec<usize> = vs.iter().map(|&u| ids[u]).collect();
                let (sol, d) = self.solve(&sub.inst, &sub_ids, colors, level)?;
                depth = depth.max(d);
                let lifted = lift(&sol, &vs, None);
                out.value += lifted.value;
                out.coloring.absorb(lifted.coloring);
            }
            return Ok((out, depth + 1));
        }
        let key = (ids.to_vec(), colors.to_vec(), inst.rev.key_bits(0..inst.n()), level);
        if let Some((sol, d)) = self.memo.get(&key) {
            self.stats.memo_hits += 1;
            return Ok((sol.clone(), *d));
        }
        let result = self.solve_connected(inst, ids, colors, level)?;
        self.memo.insert(key, result.clone());
        Ok(result)
    }

    fn solve_connected(
        &mut self,
        inst: &Instance,
        ids: &[usize],
        colors: &[usize],
        level: usize,
    ) -> Result<(Solution, usize)> {
        if !inst.rev.has_positive() {
            return Ok((Solution::empty(), 1));
        }
        if inst.n() <= self.cfg.fallback {
            self.stats.oracle_fallbacks += 1;
            return Ok((oracle_solve_limited(inst, &self.cfg.oracle_limits())?, 1));
        }
        let branching = prepare_full(inst, self.cfg.s, self.cfg.t, &self.cfg.branch_options())?;
        self.stats.branch_nodes += 1;
        let lower = if self.cfg.check_invariants { Some(self.base.excluded(level - 1)?) } else { None };
        let mut best = Solution::empty();
        let mut depth = 0;
        for frame in &branching.frames {
            let mut count = 0usize;
            let mut checked = lower.is_none();
            for guess in branching.guesses(frame) {
                count += 1;
                if let Some(cap) = self.cfg.guess_cap {
                    if count > cap {
                        return Err(Error::CapExceeded { what: "guesses at one branching node", actual: count, cap });
                    }
                }
                let pair = branching.pair_for(frame, guess);
                if !checked {
                    checked = true;
                    let f = lower.as_ref().expect("checked only with a target");
                    if let Some(w) = contains_induced(&pair.second.inst.host, f) {
                        self.stats.structure_violations += 1;
                        let witness = w.iter().map(|&u| ids[pair.second.vertex_map[u]]).collect();
                        return Err(Error::StructureViolation {
                            what: format!("second branch host still contains the level-{} excluded graph", level - 1),
                            witness,
                        });
                    }
                }
                let first_ids: Vec<usize> = pair.first.vertex_map.iter().map(|&u| ids[u]).collect();
                let first_colors: Vec<usize> = pair.first.color_map.iter().map(|&c| colors[c]).collect();
                let (s1, d1) = self.solve(&pair.first.inst, &first_ids, &first_colors, level)?;
                let second_ids: Vec<usize> = pair.second.vertex_map.iter().map(|&u| ids[u]).collect();
                let (s2, d2) = self.solve(&pair.second.inst, &second_ids, colors, level - 1)?;
                depth = depth.max(d1).max(d2);
                let value = s1.value + s2.value;
                if value > best.value {
                    let mut coloring = pair.first.lift(&s1.coloring);
                    coloring.absorb(pair.second.lift(&s2.coloring));
                    best = Solution { value, coloring };
                }
            }
            self.stats.guesses += count;
        }
        debug_assert!(crate::model::is_valid(inst, &best.coloring));
        Ok((best, depth + 1))
    }
}
