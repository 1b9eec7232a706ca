use super::decomposition::{modular_decomposition, ModularDecompositionTree, QuotientKind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::model::{
    bits, to_multicolor, Instance, MulticolorInstance, Multicoloring, PartialColoring, PatternGraph, RevenueTable,
    Solution,
};
use crate::solvers::{SolveReport, SolveStats};

/// Solver for Max Partial H-Coloring on prime quotient instances.
pub type PrimeSolver<'a> = dyn FnMut(&Instance) -> Result<Solution> + 'a;

/// `rev(u, Z)` on `G[B]` when `Z ⊆ W`, `-1` otherwise.
pub fn restrict_revenue(minst: &MulticolorInstance, vertices: &[usize], w: u64) -> MulticolorInstance {
    let sub = minst.restrict(vertices);
    MulticolorInstance::from_fn(sub.host.clone(), sub.pattern.clone(), |u, z| {
        if z & !w == 0 {
            sub.get(u, z)
        } else {
            -1.0
        }
    })
    .expect("pattern already validated")
}

#[derive(Clone, Debug, Default)]
struct Entry {
    value: f64,
    phi: Multicoloring,
}

/// Submasks of `w` in increasing order, the empty one excluded.
fn submasks(w: u64) -> impl Iterator<Item = u64> {
    let mut s = 0u64;
    let mut done = w == 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        s = s.wrapping_sub(w) & w;
        if s == w {
            done = true;
        }
        Some(s)
    })
}

struct Dp<'m, 's, 'f> {
    minst: &'m MulticolorInstance,
    pattern_cap: usize,
    solver: &'s mut PrimeSolver<'f>,
    nbr: Vec<u64>,
}

impl Dp<'_, '_, '_> {
    fn size(&self) -> usize {
        1usize << self.minst.k()
    }

    /// Optimum on the module of `node` using only colors inside `W`, for every
    /// `W` (or just `only`). Index 0 is the empty solution.
    fn tables(&mut self, node: &ModularDecompositionTree, only: Option<u64>) -> Result<Vec<Entry>> {
        let size = self.size();
        let masks: Vec<u64> = match only {
            Some(w) => vec![w],
            None => (1..size as u64).collect(),
        };
        let mut out = vec![Entry::default(); size];
        let Some(kind) = node.kind else {
            let u = node.vertices[0];
            for &w in &masks {
                let mut best = Entry::default();
                for z in submasks(w) {
                    let x = self.minst.get(u, z);
                    if x > best.value {
                        best = Entry { value: x, phi: std::iter::once((u, z)).collect() };
                    }
                }
                out[w as usize] = best;
            }
            return Ok(out);
        };
        let children: Vec<Vec<Entry>> =
            node.children.iter().map(|c| self.tables(c, None)).collect::<Result<_>>()?;
        for &w in &masks {
            out[w as usize] = match kind {
                QuotientKind::Edgeless => {
                    let mut e = Entry::default();
                    for t in &children {
                        e.value += t[w as usize].value;
                        e.phi.absorb(t[w as usize].phi.clone());
                    }
                    e
                }
                QuotientKind::Complete => self.complete_entry(&children, w),
                QuotientKind::Prime => {
                    let q = node.quotient(&self.minst.host);
                    self.prime_entry(q, &children, w)?
                }
            };
        }
        Ok(out)
    }

    /// Modules pairwise complete: pick disjoint, mutually complete color sets,
    /// tracking the union `U` of the sets used so far.
    fn complete_entry(&self, children: &[Vec<Entry>], w: u64) -> Entry {
        let size = self.size();
        let mut best = vec![f64::NEG_INFINITY; size];
        best[0] = 0.0;
        let mut back: Vec<Vec<(u64, u64)>> = Vec::with_capacity(children.len());
        for t in children {
            let mut next = best.clone();
            let mut step: Vec<(u64, u64)> = (0..size as u64).map(|u| (u, 0)).collect();
            for used in 0..size as u64 {
                if best[used as usize] == f64::NEG_INFINITY || used & !w != 0 {
                    continue;
                }
                let avail = bits(used).fold(w & !used, |m, c| m & self.nbr[c]);
                for z in submasks(avail) {
                    let x = best[used as usize] + t[z as usize].value;
                    if x > next[(used | z) as usize] {
                        next[(used | z) as usize] = x;
                        step[(used | z) as usize] = (used, z);
                    }
                }
            }
            best = next;
            back.push(step);
        }
        let mut end = 0u64;
        for used in 0..size as u64 {
            if best[used as usize] > best[end as usize] {
                end = used;
            }
        }
        let mut e = Entry { value: best[end as usize], phi: Multicoloring::new() };
        for (j, step) in back.iter().enumerate().rev() {
            let (prev, z) = step[end as usize];
            if z != 0 {
                e.phi.absorb(children[j][z as usize].phi.clone());
            }
            end = prev;
        }
        e
    }

    /// Quotient instance read as coloring with the power pattern. A set is
    /// offered to a module only when it beats all of its proper subsets.
    fn prime_entry(&mut self, q: Graph, children: &[Vec<Entry>], w: u64) -> Result<Entry> {
        let gain = |i: usize, z: u64| -> f64 {
            let v = children[i][z as usize].value;
            if v > 0.0 && bits(z).all(|c| v > children[i][(z & !(1 << c)) as usize].value) {
                v
            } else {
                -1.0
            }
        };
        let kept: Vec<u64> = submasks(w).filter(|&z| (0..children.len()).any(|i| gain(i, z) > 0.0)).collect();
        if kept.is_empty() {
            return Ok(Entry::default());
        }
        if kept.len() > self.pattern_cap {
            return Err(Error::CapExceeded {
                what: "quotient pattern colors",
                actual: kept.len(),
                cap: self.pattern_cap,
            });
        }
        let mut pg = Graph::new(kept.len());
        for a in 0..kept.len() {
            for b in a + 1..kept.len() {
                if self.minst.pattern.masks_compatible(kept[a], kept[b]) {
                    pg.add_edge(a, b);
                }
            }
        }
        let rev = RevenueTable::from_fn(q.n(), kept.len(), |i, c| gain(i, kept[c]));
        let inst = Instance::new(q, PatternGraph::new(pg), rev)?;
        let sol = (self.solver)(&inst)?;
        let mut e = Entry::default();
        for (i, c) in sol.coloring.iter() {
            if inst.rev.get(i, c) <= 0.0 {
                continue;
            }
            let child = &children[i][kept[c] as usize];
            e.value += child.value;
            e.phi.absorb(child.phi.clone());
        }
        Ok(e)
    }
}

fn neighbor_masks(pattern: &PatternGraph) -> Vec<u64> {
    (0..pattern.k()).map(|c| pattern.neighbor_mask(c)).collect()
}

/// Bottom-up dynamic programming over the modular decomposition. Prime
/// quotients go to `prime_solver` as power-pattern coloring instances.
pub fn solve_multicolor_dp(
    minst: &MulticolorInstance,
    pattern_cap: usize,
    prime_solver: &mut PrimeSolver<'_>,
) -> Result<(f64, Multicoloring)> {
    let Some(tree) = modular_decomposition(&minst.host) else {
        return Ok((0.0, Multicoloring::new()));
    };
    if minst.k() == 0 {
        return Ok((0.0, Multicoloring::new()));
    }
    let full = minst.full_mask();
    let mut dp = Dp { minst, pattern_cap, solver: prime_solver, nbr: neighbor_masks(&minst.pattern) };
    let mut t = dp.tables(&tree, Some(full))?;
    let e = std::mem::take(&mut t[full as usize]);
    Ok((e.value, e.phi))
}

/// One level of the reduction: optimum per top-level module and color budget,
/// then the quotient solved by `prime_solver` whatever its kind.
pub fn combine_modules(
    minst: &MulticolorInstance,
    pattern_cap: usize,
    prime_solver: &mut PrimeSolver<'_>,
) -> Result<(f64, Multicoloring)> {
    let Some(tree) = modular_decomposition(&minst.host) else {
        return Ok((0.0, Multicoloring::new()));
    };
    if minst.k() == 0 {
        return Ok((0.0, Multicoloring::new()));
    }
    let full = minst.full_mask();
    let mut dp = Dp { minst, pattern_cap, solver: prime_solver, nbr: neighbor_masks(&minst.pattern) };
    if tree.is_leaf() {
        let mut t = dp.tables(&tree, Some(full))?;
        let e = std::mem::take(&mut t[full as usize]);
        return Ok((e.value, e.phi));
    }
    let children: Vec<Vec<Entry>> = tree.children.iter().map(|c| dp.tables(c, None)).collect::<Result<_>>()?;
    let e = dp.prime_entry(tree.quotient(&minst.host), &children, full)?;
    Ok((e.value, e.phi))
}

/// Solves a coloring instance through its multicoloring form and the modular
/// decomposition DP, counting calls to `prime_solver`.
pub fn solve_via_prime_reduction(
    inst: &Instance,
    pattern_cap: usize,
    prime_solver: &mut PrimeSolver<'_>,
) -> Result<SolveReport> {
    inst.require_irreflexive()?;
    if inst.k() > pattern_cap {
        return Err(Error::CapExceeded { what: "pattern colors", actual: inst.k(), cap: pattern_cap });
    }
    let minst = to_multicolor(inst)?;
    let mut calls = 0usize;
    let mut counting = |q: &Instance| {
        calls += 1;
        prime_solver(q)
    };
    let (value, phi) = solve_multicolor_dp(&minst, pattern_cap, &mut counting)?;
    let coloring = singletons(&phi)?;
    let height = modular_decomposition(&inst.host).map_or(0, |t| t.height());
    let stats = SolveStats { depth: height, prime_calls: calls, ..Default::default() };
    Ok(SolveReport::from_solution(Solution { value, coloring }, stats))
}

pub(crate) fn singletons(phi: &Multicoloring) -> Result<PartialColoring> {
    phi.iter()
        .map(|(u, z)| {
            if z.is_power_of_two() {
                Ok((u, z.trailing_zeros() as usize))
            } else {
                Err(Error::InvalidInstance(format!("vertex {u} received the color set {z:#b}")))
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{is_valid_multicoloring, multicolor_revenue};
    use crate::named;
    use crate::oracle::{oracle_opt, oracle_solve, oracle_solve_multicolor};

    fn oracle_prime(q: &Instance) -> Result<Solution> {
        oracle_solve(q)
    }

    #[test]
    fn submask_order() {
        assert_eq!(submasks(0b101).collect::<Vec<_>>(), vec![0b001, 0b100, 0b101]);
        assert_eq!(submasks(0).count(), 0);
    }

    #[test]
    fn restriction() {
        let minst = MulticolorInstance::from_fn(named::path(3), PatternGraph::complete(2), |u, z| (u + z as usize) as f64)
            .unwrap();
        let r = restrict_revenue(&minst, &[0, 2], 0b01);
        assert_eq!(r.n(), 2);
        assert_eq!(r.get(1, 0b01), 3.0);
        assert_eq!(r.get(1, 0b11), -1.0);
        let id = restrict_revenue(&minst, &[0, 1, 2], 0b11);
        assert_eq!(id, minst);
    }

    #[test]
    fn prime_host_single_call() {
        let inst = Instance::uniform(named::path(4), PatternGraph::complete(2), 1.0);
        let r = solve_via_prime_reduction(&inst, 64, &mut oracle_prime).unwrap();
        assert_eq!(r.opt, 4.0);
        assert_eq!(r.stats.prime_calls, 1);
        assert!(r.certify(&inst));
    }

    #[test]
    fn complete_host_no_prime_calls() {
        let inst = Instance::uniform(named::complete(5), PatternGraph::complete(3), 1.0);
        let r = solve_via_prime_reduction(&inst, 64, &mut oracle_prime).unwrap();
        assert_eq!(r.opt, 3.0);
        assert_eq!(r.stats.prime_calls, 0);
    }

    #[test]
    fn blown_up_p4_matches_oracle() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 4), (1, 2), (4, 2), (2, 3), (1, 4), (3, 5)]).unwrap();
        let rev = RevenueTable::from_fn(6, 2, |u, v| ((u * 5 + v * 3) % 4) as f64 - 1.0);
        let inst = Instance::new(g, PatternGraph::complete(2), rev).unwrap();
        let r = solve_via_prime_reduction(&inst, 64, &mut oracle_prime).unwrap();
        assert_eq!(r.opt, oracle_opt(&inst).unwrap());
        assert!(r.certify(&inst));
    }

    #[test]
    fn multicolor_dp_and_combine_match_oracle() {
        let g = named::cycle(4).unwrap().disjoint_union(&named::path(2));
        let h = PatternGraph::irreflexive(named::path(3)).unwrap();
        let minst = MulticolorInstance::from_fn(g, h, |u, z| ((u as u64 * 3 + z * 5) % 7) as f64 - 2.0).unwrap();
        let (expected, _) = oracle_solve_multicolor(&minst).unwrap();
        let (v, phi) = solve_multicolor_dp(&minst, 64, &mut oracle_prime).unwrap();
        assert_eq!(v, expected);
        assert!(is_valid_multicoloring(&minst, &phi));
        assert_eq!(multicolor_revenue(&minst, &phi), v);
        let (v2, phi2) = combine_modules(&minst, 64, &mut oracle_prime).unwrap();
        assert_eq!(v2, expected);
        assert!(is_valid_multicoloring(&minst, &phi2));
    }

    #[test]
    fn pattern_cap() {
        let inst = Instance::uniform(named::path(4), PatternGraph::complete(3), 1.0);
        assert!(solve_via_prime_reduction(&inst, 2, &mut oracle_prime).unwrap_err().is_cap_exceeded());
    }
}
