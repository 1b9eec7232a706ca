//! Brute-force reference solvers.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::model::{bits, Instance, MulticolorInstance, Multicoloring, PartialColoring, PatternGraph, Solution};

/// Size limits for the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_vertices: usize,
    pub multicolor_vertices: usize,
    pub multicolor_colors: usize,
    pub list_vertices: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_vertices: 12, multicolor_vertices: 10, multicolor_colors: 3, list_vertices: 64 }
    }
}

fn check_cap(what: &'static str, actual: usize, cap: usize) -> Result<()> {
    if actual > cap {
        Err(Error::CapExceeded { what, actual, cap })
    } else {
        Ok(())
    }
}

/// Exact optimum by enumerating partial maps, vertices in increasing order with
/// "uncolored" tried first. Assignments with non-positive revenue are never
/// made, which cannot lower the optimum. Of several optima the first one met is
/// returned.
pub fn oracle_solve(inst: &Instance) -> Result<Solution> {
    oracle_solve_limited(inst, &OracleLimits::default())
}

pub fn oracle_solve_limited(inst: &Instance, limits: &OracleLimits) -> Result<Solution> {
    check_cap("oracle host vertices", inst.n(), limits.max_vertices)?;
    let n = inst.n();
    let mut suffix = vec![0.0; n + 1];
    for u in (0..n).rev() {
        suffix[u] = suffix[u + 1] + inst.rev.best_positive(u).map_or(0.0, |(_, x)| x);
    }
    let mut search = Search {
        inst,
        suffix,
        current: vec![None; n],
        best_value: 0.0,
        best: vec![None; n],
    };
    search.run(0, 0.0);
    let coloring = search.best.iter().enumerate().filter_map(|(u, c)| c.map(|v| (u, v))).collect();
    Ok(Solution { value: search.best_value, coloring })
}

struct Search<'a> {
    inst: &'a Instance,
    suffix: Vec<f64>,
    current: Vec<Option<usize>>,
    best_value: f64,
    best: Vec<Option<usize>>,
}

impl Search<'_> {
    fn run(&mut self, u: usize, value: f64) {
        if value + self.suffix[u] <= self.best_value {
            return;
        }
        if u == self.current.len() {
            self.best_value = value;
            self.best.clone_from(&self.current);
            return;
        }
        self.run(u + 1, value);
        for v in 0..self.inst.k() {
            let x = self.inst.rev.get(u, v);
            if x <= 0.0 {
                continue;
            }
            let fits = self.inst.host.neighbors(u).iter().take_while(|&&w| w < u).all(|&w| {
                self.current[w].is_none_or(|c| self.inst.pattern.adjacent(v, c))
            });
            if fits {
                self.current[u] = Some(v);
                self.run(u + 1, value + x);
                self.current[u] = None;
            }
        }
    }
}

/// Exact multicoloring optimum by exhaustive search over subset assignments.
pub fn oracle_solve_multicolor(minst: &MulticolorInstance) -> Result<(f64, Multicoloring)> {
    oracle_solve_multicolor_limited(minst, &OracleLimits::default())
}

pub fn oracle_solve_multicolor_limited(
    minst: &MulticolorInstance,
    limits: &OracleLimits,
) -> Result<(f64, Multicoloring)> {
    check_cap("multicolor oracle host vertices", minst.n(), limits.multicolor_vertices)?;
    check_cap("multicolor oracle colors", minst.k(), limits.multicolor_colors)?;
    let n = minst.n();
    let full = minst.full_mask();
    let best_row = |u: usize| (1..=full).map(|z| minst.get(u, z)).fold(0.0, f64::max);
    let mut suffix = vec![0.0; n + 1];
    for u in (0..n).rev() {
        suffix[u] = suffix[u + 1] + best_row(u);
    }
    let mut current = vec![0u64; n];
    let mut best = vec![0u64; n];
    let mut best_value = 0.0;
    multicolor_dfs(minst, &suffix, 0, 0.0, &mut current, &mut best_value, &mut best);
    let phi = best.iter().enumerate().filter(|&(_, &z)| z != 0).map(|(u, &z)| (u, z)).collect();
    Ok((best_value, phi))
}

fn multicolor_dfs(
    minst: &MulticolorInstance,
    suffix: &[f64],
    u: usize,
    value: f64,
    current: &mut [u64],
    best_value: &mut f64,
    best: &mut [u64],
) {
    if value + suffix[u] <= *best_value {
        return;
    }
    if u == current.len() {
        *best_value = value;
        best.copy_from_slice(current);
        return;
    }
    multicolor_dfs(minst, suffix, u + 1, value, current, best_value, best);
    for z in 1..=minst.full_mask() {
        let x = minst.get(u, z);
        if x <= 0.0 {
            continue;
        }
        let fits = minst
            .host
            .neighbors(u)
            .iter()
            .take_while(|&&w| w < u)
            .all(|&w| current[w] == 0 || minst.pattern.masks_compatible(z, current[w]));
        if fits {
            current[u] = z;
            multicolor_dfs(minst, suffix, u + 1, value + x, current, best_value, best);
            current[u] = 0;
        }
    }
}

/// Whether `g` has a homomorphism to `h` (loops allowed) mapping every vertex
/// into its list.
pub fn oracle_list_hcolor(g: &Graph, h: &PatternGraph, lists: &[Vec<usize>]) -> Result<bool> {
    oracle_list_hcolor_limited(g, h, lists, &OracleLimits::default())
}

pub fn oracle_list_hcolor_limited(
    g: &Graph,
    h: &PatternGraph,
    lists: &[Vec<usize>],
    limits: &OracleLimits,
) -> Result<bool> {
    check_cap("list oracle host vertices", g.n(), limits.list_vertices)?;
    check_cap("list oracle colors", h.k(), 64)?;
    if lists.len() != g.n() {
        return Err(Error::InvalidInstance(format!("{} lists for {} vertices", lists.len(), g.n())));
    }
    let mut domains = Vec::with_capacity(g.n());
    for list in lists {
        let mut d = 0u64;
        for &c in list {
            if c >= h.k() {
                return Err(Error::ColorOutOfRange { color: c, k: h.k() });
            }
            d |= 1 << c;
        }
        domains.push(d);
    }
    let nbr: Vec<u64> = (0..h.k()).map(|c| h.neighbor_mask(c)).collect();
    let mut assigned = vec![false; g.n()];
    Ok(list_search(g, &nbr, &mut domains, &mut assigned))
}

/// Backtracking with forward checking; branches on the unassigned vertex with
/// the smallest domain.
fn list_search(g: &Graph, nbr: &[u64], domains: &mut Vec<u64>, assigned: &mut [bool]) -> bool {
    let next = (0..g.n())
        .filter(|&u| !assigned[u])
        .min_by_key(|&u| domains[u].count_ones());
    let Some(u) = next else {
        return true;
    };
    for c in bits(domains[u]) {
        let saved = domains.clone();
        domains[u] = 1 << c;
        assigned[u] = true;
        let mut ok = true;
        for &w in g.neighbors(u) {
            if !assigned[w] {
                domains[w] &= nbr[c];
                if domains[w] == 0 {
                    ok = false;
                    break;
                }
            }
        }
        if ok && list_search(g, nbr, domains, assigned) {
            return true;
        }
        assigned[u] = false;
        *domains = saved;
    }
    false
}

/// Proper 3-colorability by plain backtracking in vertex order.
pub fn oracle_3coloring(g: &Graph) -> Result<bool> {
    oracle_3coloring_limited(g, &OracleLimits::default())
}

pub fn oracle_3coloring_limited(g: &Graph, limits: &OracleLimits) -> Result<bool> {
    check_cap("3-coloring oracle vertices", g.n(), limits.list_vertices)?;
    let mut colors = vec![usize::MAX; g.n()];
    Ok(three_color(g, 0, &mut colors))
}

fn three_color(g: &Graph, u: usize, colors: &mut [usize]) -> bool {
    if u == g.n() {
        return true;
    }
    for c in 0..3 {
        if g.neighbors(u).iter().all(|&w| colors[w] != c) {
            colors[u] = c;
            if three_color(g, u + 1, colors) {
                return true;
            }
            colors[u] = usize::MAX;
        }
    }
    false
}

/// Convenience: the optimum of `inst` as a plain number.
pub fn oracle_opt(inst: &Instance) -> Result<f64> {
    oracle_solve(inst).map(|s| s.value)
}

/// Checks an oracle answer against the instance; used by tests and the CLI.
pub fn certify(inst: &Instance, phi: &PartialColoring, value: f64) -> bool {
    crate::model::is_valid(inst, phi) && (crate::model::revenue(inst, phi) == Ok(value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{from_list_instance, to_multicolor, RevenueTable};
    use crate::named;

    fn unit(g: Graph, h: PatternGraph) -> Instance {
        Instance::uniform(g, h, 1.0)
    }

    #[test]
    fn small_optima() {
        assert_eq!(oracle_opt(&unit(named::complete(2), PatternGraph::complete(1))).unwrap(), 1.0);
        assert_eq!(oracle_opt(&unit(named::cycle(5).unwrap(), PatternGraph::complete(2))).unwrap(), 4.0);
        assert_eq!(oracle_opt(&unit(named::complete(5), PatternGraph::complete(3))).unwrap(), 3.0);
    }

    #[test]
    fn solution_is_certified() {
        let inst = unit(named::petersen(), PatternGraph::complete(2));
        let s = oracle_solve(&inst).unwrap();
        assert!(certify(&inst, &s.coloring, s.value));
    }

    #[test]
    fn cap_is_enforced() {
        let inst = unit(Graph::new(13), PatternGraph::complete(1));
        assert!(matches!(oracle_solve(&inst), Err(Error::CapExceeded { .. })));
        let limits = OracleLimits { max_vertices: 13, ..Default::default() };
        assert_eq!(oracle_solve_limited(&inst, &limits).unwrap().value, 13.0);
    }

    #[test]
    fn list_instance_optima() {
        let k2 = PatternGraph::complete(2);
        let full = vec![vec![0, 1]; 2];
        assert_eq!(oracle_opt(&from_list_instance(&named::complete(2), &k2, &full).unwrap()).unwrap(), 2.0);
        let full3 = vec![vec![0, 1]; 3];
        assert_eq!(oracle_opt(&from_list_instance(&named::complete(3), &k2, &full3).unwrap()).unwrap(), 2.0);
        let same = vec![vec![0]; 2];
        assert_eq!(oracle_opt(&from_list_instance(&named::complete(2), &k2, &same).unwrap()).unwrap(), 1.0);
    }

    #[test]
    fn multicolor_matches_singletons() {
        let rev = RevenueTable::from_rows(
            &[vec![1.0, 2.0], vec![3.0, -1.0], vec![0.0, 1.0], vec![2.0, 2.0], vec![-2.0, 1.0]],
            2,
        )
        .unwrap();
        let inst = Instance::new(named::cycle(5).unwrap(), PatternGraph::complete(2), rev).unwrap();
        let m = to_multicolor(&inst).unwrap();
        assert_eq!(oracle_solve_multicolor(&m).unwrap().0, oracle_opt(&inst).unwrap());
    }

    #[test]
    fn multicolor_edgeless() {
        let m = MulticolorInstance::from_fn(Graph::new(3), PatternGraph::complete(2), |u, z| {
            (u as f64) * if z == 3 { 2.0 } else { 1.0 } - 0.5
        })
        .unwrap();
        // per vertex: max(0, best subset)
        assert_eq!(oracle_solve_multicolor(&m).unwrap().0, 0.0 + 1.5 + 3.5);
    }

    #[test]
    fn list_oracle_examples() {
        let mut looped = Graph::new(1);
        looped.add_loop(0);
        let h = PatternGraph::new(looped);
        assert!(oracle_list_hcolor(&named::complete(4), &h, &vec![vec![0]; 4]).unwrap());
        let k2 = PatternGraph::complete(2);
        assert!(!oracle_list_hcolor(&named::complete(3), &k2, &vec![vec![0, 1]; 3]).unwrap());
        assert!(oracle_list_hcolor(&named::cycle(4).unwrap(), &k2, &vec![vec![0, 1]; 4]).unwrap());
    }

    #[test]
    fn three_coloring_examples() {
        assert!(oracle_3coloring(&named::cycle(5).unwrap()).unwrap());
        assert!(!oracle_3coloring(&named::complete(4)).unwrap());
        assert!(oracle_3coloring(&named::petersen()).unwrap());
    }

    #[test]
    fn reflexive_pattern_accepted() {
        let mut looped = Graph::new(1);
        looped.add_loop(0);
        let inst = unit(named::complete(3), PatternGraph::new(looped));
        assert_eq!(oracle_opt(&inst).unwrap(), 3.0);
    }
}
