use std::collections::HashMap;

use super::decomposition::is_prime;
use super::dp::solve_via_prime_reduction;
use crate::branching::{check_branching_class, prepare_full};
use crate::error::{Error, Result};
use crate::induced::contains_induced;
use crate::model::{Instance, Solution, MAX_SUBSET_COLORS};
use crate::named;
use crate::oracle::oracle_solve_limited;
use crate::solvers::{cograph::solve_cograph_solution, SolveReport, SolveStats, SolverConfig};

/// Which class the current host is promised to lie in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Layer {
    /// `{P6, S_t, bull}`-free.
    BullFree,
    /// `{P6, C5, S_t, bull}`-free.
    C5Free,
}

/// Exact solver for `{P6, S_t, bull}`-free hosts (`t` from the config).
///
/// Reduces to prime quotients; a prime quotient is branched with `s = 3`, the
/// first part recursing here with a smaller pattern and the second part
/// checked `C5`-free and handed to the `C5`-free pipeline.
pub fn solve_bullfree(inst: &Instance, cfg: &SolverConfig) -> Result<SolveReport> {
    entry_checks(inst, cfg, Layer::BullFree)?;
    let mut p = Pipeline::new(cfg);
    let sol = p.general(inst, Layer::BullFree)?;
    Ok(p.finish(sol))
}

/// Exact solver for prime `{P6, C5, S_t, bull}`-free hosts: one full branching
/// step whose second parts must be cographs.
pub fn solve_bullfree_c5free_prime(inst: &Instance, cfg: &SolverConfig) -> Result<SolveReport> {
    entry_checks(inst, cfg, Layer::C5Free)?;
    if cfg.check_class && !is_prime(&inst.host) {
        return Err(Error::ClassViolation("host is not prime".into()));
    }
    let mut p = Pipeline::new(cfg);
    let sol = if inst.n() == 0 || !inst.rev.has_positive() {
        Solution::empty()
    } else {
        p.prime(inst, Layer::C5Free)?
    };
    Ok(p.finish(sol))
}

fn entry_checks(inst: &Instance, cfg: &SolverConfig, layer: Layer) -> Result<()> {
    cfg.validate()?;
    inst.require_irreflexive()?;
    if cfg.check_class {
        check_branching_class(&inst.host, 3, cfg.t)?;
        let mut forbidden = vec![("bull", named::bull())];
        if layer == Layer::C5Free {
            forbidden.push(("C5", named::cycle(5)?));
        }
        for (name, f) in forbidden {
            if let Some(w) = contains_induced(&inst.host, &f) {
                return Err(Error::ClassViolation(format!("host contains an induced {name} on {w:?}")));
            }
        }
    }
    Ok(())
}

type CacheKey = (usize, Vec<(usize, usize)>, usize, Vec<(usize, usize)>, Vec<u64>, Layer);

struct Pipeline<'a> {
    cfg: &'a SolverConfig,
    cache: HashMap<CacheKey, Solution>,
    stats: SolveStats,
    level: usize,
}

impl<'a> Pipeline<'a> {
    fn new(cfg: &'a SolverConfig) -> Self {
        Pipeline { cfg, cache: HashMap::new(), stats: SolveStats::default(), level: 0 }
    }

    fn finish(mut self, sol: Solution) -> SolveReport {
        self.stats.depth = self.stats.depth.max(1);
        SolveReport::from_solution(sol, self.stats)
    }

    fn key(inst: &Instance, layer: Layer) -> CacheKey {
        (
            inst.n(),
            inst.host.edges(),
            inst.k(),
            inst.pattern.graph().edges(),
            inst.rev.key_bits(0..inst.n()),
            layer,
        )
    }

    /// Any host of the layer's class: modular reduction to prime quotients.
    fn general(&mut self, inst: &Instance, layer: Layer) -> Result<Solution> {
        if inst.n() == 0 || inst.k() == 0 || !inst.rev.has_positive() {
            return Ok(Solution::empty());
        }
        let cap = self.cfg.pattern_cap.min(MAX_SUBSET_COLORS);
        if inst.k() > cap {
            return Err(Error::CapExceeded { what: "pattern colors", actual: inst.k(), cap });
        }
        let key = Self::key(inst, layer);
        if let Some(sol) = self.cache.get(&key) {
            self.stats.memo_hits += 1;
            return Ok(sol.clone());
        }
        self.level += 1;
        self.stats.depth = self.stats.depth.max(self.level);
        let pattern_cap = self.cfg.pattern_cap;
        let result = solve_via_prime_reduction(inst, pattern_cap, &mut |q: &Instance| self.prime(q, layer));
        self.level -= 1;
        let report = result?;
        let sol = Solution { value: report.opt, coloring: report.solution };
        self.cache.insert(key, sol.clone());
        Ok(sol)
    }

    /// Prime host of the layer's class.
    fn prime(&mut self, inst: &Instance, layer: Layer) -> Result<Solution> {
        self.stats.prime_calls += 1;
        if !inst.rev.has_positive() {
            return Ok(Solution::empty());
        }
        if inst.n() <= self.cfg.fallback {
            self.stats.oracle_fallbacks += 1;
            return oracle_solve_limited(inst, &self.cfg.oracle_limits());
        }
        let branching = prepare_full(inst, 3, self.cfg.t, &self.cfg.branch_options())?;
        self.stats.branch_nodes += 1;
        let c5 = named::cycle(5)?;
        let mut best = Solution::empty();
        for frame in &branching.frames {
            let mut count = 0usize;
            let mut checked = false;
            for guess in branching.guesses(frame) {
                count += 1;
                if let Some(cap) = self.cfg.guess_cap {
                    if count > cap {
                        return Err(Error::CapExceeded { what: "guesses at one branching node", actual: count, cap });
                    }
                }
                let pair = branching.pair_for(frame, guess);
                if !checked && layer == Layer::BullFree {
                    checked = true;
                    if let Some(w) = contains_induced(&pair.second.inst.host, &c5) {
                        self.stats.structure_violations += 1;
                        return Err(Error::StructureViolation {
                            what: "second branch host of a prime bull-free graph contains C5".into(),
                            witness: w.iter().map(|&u| pair.second.vertex_map[u]).collect(),
                        });
                    }
                }
                let s1 = self.general(&pair.first.inst, layer)?;
                let s2 = match layer {
                    Layer::BullFree => self.general(&pair.second.inst, Layer::C5Free)?,
                    Layer::C5Free => solve_cograph_solution(&pair.second.inst).map_err(|e| match e {
                        Error::NotCograph(w) => {
                            self.stats.structure_violations += 1;
                            Error::StructureViolation {
                                what: "second branch host of a prime {bull, C5}-free graph contains P4".into(),
                                witness: w.iter().map(|&u| pair.second.vertex_map[u]).collect(),
                            }
                        }
                        other => other,
                    })?,
                };
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
        Ok(best)
    }
}
