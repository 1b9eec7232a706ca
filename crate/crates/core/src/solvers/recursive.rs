use std::collections::HashMap;

use super::{lift, SolveReport, SolveStats, SolverConfig};
use crate::branching::{check_branching_class, prepare_simplified};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::induced::clique_number;
use crate::model::{Instance, PatternGraph, RevenueTable, Solution};
use crate::oracle::oracle_solve_limited;

/// Exact solver for `{P6, L_s, S_t}`-free hosts by repeated simplified branching.
///
/// Connected subproblems are memoized on their vertex set and revenue rows.
pub fn solve_recursive(inst: &Instance, cfg: &SolverConfig) -> Result<SolveReport> {
    cfg.validate()?;
    inst.require_irreflexive()?;
    if cfg.check_class {
        check_branching_class(&inst.host, cfg.s, cfg.t)?;
    }
    let mut ctx = Recursion { pattern: &inst.pattern, cfg, memo: HashMap::new(), stats: SolveStats::default() };
    let ids: Vec<usize> = inst.host.vertices().collect();
    let (sol, height) = ctx.solve(&inst.host, &inst.rev, &ids)?;
    let mut stats = ctx.stats;
    stats.depth = height;
    Ok(SolveReport::from_solution(sol, stats))
}

type MemoKey = (Vec<usize>, Vec<u64>);

struct Recursion<'a> {
    pattern: &'a PatternGraph,
    cfg: &'a SolverConfig,
    memo: HashMap<MemoKey, (Solution, usize)>,
    stats: SolveStats,
}

impl Recursion<'_> {
    /// Solves `(host, rev)`; `ids` names the vertices in the root instance.
    /// Returns the solution and the height of the call tree below.
    fn solve(&mut self, host: &Graph, rev: &RevenueTable, ids: &[usize]) -> Result<(Solution, usize)> {
        let n = host.n();
        if n == 0 {
            return Ok((Solution::empty(), 0));
        }
        if !host.is_connected() {
            let mut out = Solution::empty();
            let mut height = 0;
            let all_colors: Vec<usize> = (0..self.pattern.k()).collect();
            for comp in host.components() {
                let vs: Vec<usize> = comp.into_iter().collect();
                let sub_ids: Vec<usize> = vs.iter().map(|&u| ids[u]).collect();
                let (sol, h) = self.solve(&host.induced(&vs), &rev.restrict(&vs, &all_colors), &sub_ids)?;
                height = height.max(h);
                let lifted = lift(&sol, &vs, None);
                out.value += lifted.value;
                out.coloring.absorb(lifted.coloring);
            }
            return Ok((out, height + 1));
        }
        let key = (ids.to_vec(), rev.key_bits(0..n));
        if let Some((sol, h)) = self.memo.get(&key) {
            self.stats.memo_hits += 1;
            return Ok((sol.clone(), *h));
        }
        let result = self.solve_connected(host, rev, ids)?;
        self.memo.insert(key, result.clone());
        Ok(result)
    }

    fn solve_connected(&mut self, host: &Graph, rev: &RevenueTable, ids: &[usize]) -> Result<(Solution, usize)> {
        let n = host.n();
        if !rev.has_positive() {
            return Ok((Solution::empty(), 1));
        }
        if n == 1 {
            let mut sol = Solution::empty();
            if let Some((v, x)) = rev.best_positive(0) {
                sol.coloring.assign(0, v);
                sol.value = x;
            }
            return Ok((sol, 1));
        }
        let inst = Instance { host: host.clone(), pattern: self.pattern.clone(), rev: rev.clone() };
        if n <= self.cfg.fallback {
            self.stats.oracle_fallbacks += 1;
            return Ok((oracle_solve_limited(&inst, &self.cfg.oracle_limits())?, 1));
        }
        let branching = prepare_simplified(&inst, self.cfg.s, self.cfg.t, &self.cfg.branch_options())?;
        self.stats.branch_nodes += 1;
        if self.cfg.check_invariants && host.edge_count() > 0 {
            let before = clique_number(host);
            let after = clique_number(&branching.stripped);
            if after >= before {
                self.stats.omega_violations += 1;
            }
        }
        let mut best = Solution::empty();
        let mut height = 0;
        let mut count = 0usize;
        for rev_prime in branching.revenues() {
            count += 1;
            if let Some(cap) = self.cfg.guess_cap {
                if count > cap {
                    return Err(Error::CapExceeded { what: "guesses at one branching node", actual: count, cap });
                }
            }
            let (sol, h) = self.solve(&branching.stripped, &rev_prime, ids)?;
            height = height.max(h);
            if sol.value > best.value {
                best = sol;
            }
        }
        self.stats.guesses += count;
        debug_assert!(crate::model::is_valid(&inst, &best.coloring));
        Ok((best, height + 1))
    }
}
