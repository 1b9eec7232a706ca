use super::{lift, solve_recursive, SolveReport, SolveStats, SolverConfig};
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::induced::find_clique;
use crate::model::{Instance, Solution};

/// `⌊n^(1/(α+1))⌋`, computed exactly in integers.
pub fn subexp_threshold(n: usize, alpha: u32) -> usize {
    let e = alpha + 1;
    let fits = |tau: usize| (tau as u128).checked_pow(e).is_some_and(|p| p <= n as u128);
    let mut tau = (n as f64).powf(1.0 / e as f64).floor() as usize;
    while tau > 0 && !fits(tau) {
        tau -= 1;
    }
    while fits(tau + 1) {
        tau += 1;
    }
    tau
}

/// Wraps [`solve_recursive`]: while the host has a clique on `τ` vertices, branch
/// on which at most `|H|` of its vertices may stay. Small thresholds and
/// clique-free hosts go straight to the inner solver.
pub fn solve_subexponential(inst: &Instance, cfg: &SolverConfig, alpha: u32) -> Result<SolveReport> {
    cfg.validate()?;
    inst.require_irreflexive()?;
    if alpha == 0 {
        return Err(Error::InvalidParameter("alpha must be at least 1".into()));
    }
    let mut stats = SolveStats::default();
    let (sol, depth) = wrap(inst, cfg, alpha, &mut stats)?;
    stats.depth = depth;
    Ok(SolveReport::from_solution(sol, stats))
}

fn inner(inst: &Instance, cfg: &SolverConfig, stats: &mut SolveStats) -> Result<(Solution, usize)> {
    stats.inner_calls += 1;
    let r = solve_recursive(inst, cfg)?;
    let depth = r.stats.depth;
    stats.absorb(&r.stats);
    Ok((Solution { value: r.opt, coloring: r.solution }, depth))
}

fn wrap(inst: &Instance, cfg: &SolverConfig, alpha: u32, stats: &mut SolveStats) -> Result<(Solution, usize)> {
    let tau = subexp_threshold(inst.n(), alpha);
    if tau <= inst.k() {
        return inner(inst, cfg, stats);
    }
    let Some(clique) = find_clique(&inst.host, tau) else {
        return inner(inst, cfg, stats);
    };
    stats.branch_nodes += 1;
    let mut best = Solution::empty();
    let mut depth = 0;
    for keep in subsets_up_to(&clique, inst.k()) {
        let drop: VertexSet = clique.iter().copied().filter(|v| !keep.contains(v)).collect();
        let vs: Vec<usize> = inst.host.vertices().filter(|v| !drop.contains(v)).collect();
        let sub = inst.restrict(&vs);
        let (sol, d) = wrap(&sub.inst, cfg, alpha, stats)?;
        depth = depth.max(d);
        if sol.value > best.value {
            best = lift(&sol, &vs, None);
        }
    }
    Ok((best, depth + 1))
}

/// Subsets of `items` with at most `k` elements, smallest first.
fn subsets_up_to(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![(Vec::new(), 0usize)];
    for _ in 0..k.min(items.len()) {
        let mut next = Vec::new();
        for (set, from) in frontier {
            for i in from..items.len() {
                let mut s: Vec<usize> = set.clone();
                s.push(items[i]);
                out.push(s.clone());
                next.push((s, i + 1));
            }
        }
        frontier = next;
    }
    out
}
