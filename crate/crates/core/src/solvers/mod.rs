//! Exact solvers built on the branching procedures.

pub(crate) mod cograph;
mod recursive;
mod subexp;
mod threshold;

pub use cograph::{cotree, solve_cograph, Cotree};
pub use recursive::solve_recursive;
pub use subexp::{solve_subexponential, subexp_threshold};
pub use threshold::{solve_ante_excluded, solve_threshold_excluded, ExclusionBase};

use serde::{Deserialize, Serialize};

use crate::branching::{BranchOptions, GuessFilter};
use crate::error::{Error, Result};
use crate::model::{is_valid, revenue, Instance, PartialColoring, Solution};
use crate::oracle::OracleLimits;

/// Parameters shared by all solvers.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// The host is assumed `{P6, L_s, S_t}`-free.
    pub s: usize,
    pub t: usize,
    /// Connected hosts with at most this many vertices go to the oracle.
    pub fallback: usize,
    /// Maximum number of guesses at a single branching node.
    pub guess_cap: Option<usize>,
    /// Maximum pattern size in the bull-free pipelines.
    pub pattern_cap: usize,
    /// Worker threads for callers that fan out independent instances.
    pub threads: usize,
    /// Stream every guess instead of the compatible ones only.
    pub all_guesses: bool,
    /// Verify the class promise at the entry point.
    pub check_class: bool,
    /// Count clique-number and structure violations while solving.
    pub check_invariants: bool,
    pub oracle_max_vertices: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            s: 3,
            t: 2,
            fallback: 4,
            guess_cap: None,
            pattern_cap: 64,
            threads: 1,
            all_guesses: false,
            check_class: cfg!(debug_assertions),
            check_invariants: cfg!(debug_assertions),
            oracle_max_vertices: OracleLimits::default().max_vertices,
        }
    }
}

impl SolverConfig {
    pub fn with_st(s: usize, t: usize) -> Self {
        SolverConfig { s, t, ..Default::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.s == 0 || self.t == 0 {
            return Err(Error::InvalidParameter(format!("s and t must be positive, got ({}, {})", self.s, self.t)));
        }
        if self.fallback < 2 {
            return Err(Error::InvalidParameter(format!("fallback must be at least 2, got {}", self.fallback)));
        }
        if self.fallback > self.oracle_max_vertices {
            return Err(Error::InvalidParameter(format!(
                "fallback {} exceeds the oracle cap {}",
                self.fallback, self.oracle_max_vertices
            )));
        }
        if self.threads == 0 || self.pattern_cap == 0 {
            return Err(Error::InvalidParameter("threads and pattern cap must be positive".into()));
        }
        Ok(())
    }

    pub fn branch_options(&self) -> BranchOptions {
        BranchOptions {
            filter: if self.all_guesses { GuessFilter::All } else { GuessFilter::Compatible },
            check_class: false,
        }
    }

    pub fn oracle_limits(&self) -> OracleLimits {
        OracleLimits { max_vertices: self.oracle_max_vertices, ..Default::default() }
    }
}

/// Counters collected while solving.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    /// Longest chain of nested calls, the outermost call counting as 1.
    pub depth: usize,
    pub branch_nodes: usize,
    pub guesses: usize,
    pub oracle_fallbacks: usize,
    pub memo_hits: usize,
    pub inner_calls: usize,
    pub prime_calls: usize,
    pub omega_violations: usize,
    pub structure_violations: usize,
}

impl SolveStats {
    pub fn absorb(&mut self, other: &SolveStats) {
        self.depth = self.depth.max(other.depth);
        self.branch_nodes += other.branch_nodes;
        self.guesses += other.guesses;
        self.oracle_fallbacks += other.oracle_fallbacks;
        self.memo_hits += other.memo_hits;
        self.inner_calls += other.inner_calls;
        self.prime_calls += other.prime_calls;
        self.omega_violations += other.omega_violations;
        self.structure_violations += other.structure_violations;
    }
}

/// Optimum value, an optimum coloring, and counters.
#[derive(Clone, Debug, PartialEq)]
pub struct SolveReport {
    pub opt: f64,
    pub solution: PartialColoring,
    pub stats: SolveStats,
}

impl SolveReport {
    pub fn from_solution(sol: Solution, stats: SolveStats) -> Self {
        SolveReport { opt: sol.value, solution: sol.coloring, stats }
    }

    /// Whether the solution is a valid coloring attaining `opt` on `inst`.
    pub fn certify(&self, inst: &Instance) -> bool {
        is_valid(inst, &self.solution) && revenue(inst, &self.solution).is_ok_and(|r| r == self.opt)
    }
}

/// Which algorithm the CLI and the Python bindings dispatch to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Oracle,
    Recursive,
    Subexp,
    Threshold,
    Cograph,
    Bullfree,
}

impl std::str::FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "oracle" => Strategy::Oracle,
            "recursive" => Strategy::Recursive,
            "subexp" => Strategy::Subexp,
            "threshold" => Strategy::Threshold,
            "cograph" => Strategy::Cograph,
            "bullfree" | "bull-free" => Strategy::Bullfree,
            other => return Err(Error::InvalidParameter(format!("unknown strategy {other:?}"))),
        })
    }
}

impl std::fmt::Display for Strategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Strategy::Oracle => "oracle",
            Strategy::Recursive => "recursive",
            Strategy::Subexp => "subexp",
            Strategy::Threshold => "threshold",
            Strategy::Cograph => "cograph",
            Strategy::Bullfree => "bullfree",
        };
        f.write_str(s)
    }
}

/// Extra parameters for [`solve_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StrategyParams {
    /// Exponent for the subexponential wrapper.
    pub alpha: u32,
    /// Excluded half-graph index for the threshold solver.
    pub k: usize,
}

impl Default for StrategyParams {
    fn default() -> Self {
        StrategyParams { alpha: 1, k: 2 }
    }
}

/// Runs one strategy on an instance.
pub fn solve_with(strategy: Strategy, inst: &Instance, cfg: &SolverConfig, params: StrategyParams) -> Result<SolveReport> {
    match strategy {
        Strategy::Oracle => {
            inst.require_irreflexive()?;
            let sol = crate::oracle::oracle_solve_limited(inst, &cfg.oracle_limits())?;
            Ok(SolveReport::from_solution(sol, SolveStats { depth: 1, oracle_fallbacks: 1, ..Default::default() }))
        }
        Strategy::Recursive => solve_recursive(inst, cfg),
        Strategy::Subexp => solve_subexponential(inst, cfg, params.alpha),
        Strategy::Threshold => solve_threshold_excluded(inst, cfg, params.k),
        Strategy::Cograph => solve_cograph(inst),
        Strategy::Bullfree => crate::modular::solve_bullfree(inst, cfg),
    }
}

/// Component-wise lifting helper: solution on `G[vertices]` to the parent ids.
pub(crate) fn lift(sol: &Solution, vertex_map: &[usize], color_map: Option<&[usize]>) -> Solution {
    let coloring = sol
        .coloring
        .iter()
        .map(|(u, v)| (vertex_map[u], color_map.map_or(v, |m| m[v])))
        .collect();
    Solution { value: sol.value, coloring }
}
