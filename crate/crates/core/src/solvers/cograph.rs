use super::{SolveReport, SolveStats};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::induced::contains_induced;
use crate::model::{bits, Instance, PartialColoring, PatternGraph, Solution, MAX_SUBSET_COLORS};
use crate::named;

/// Cotree of a cograph: leaves are vertices, inner nodes are disjoint unions or joins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cotree {
    Leaf(usize),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

impl Cotree {
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out.sort_unstable();
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Cotree::Leaf(u) => out.push(*u),
            Cotree::Union(cs) | Cotree::Join(cs) => cs.iter().for_each(|c| c.collect_leaves(out)),
        }
    }
}

/// Builds the cotree, or returns an induced `P4` as witness.
pub fn cotree(g: &Graph) -> Result<Option<Cotree>> {
    if g.n() == 0 {
        return Ok(None);
    }
    let all: Vec<usize> = g.vertices().collect();
    build(g, &all).map(Some)
}

fn build(g: &Graph, vs: &[usize]) -> Result<Cotree> {
    if vs.len() == 1 {
        return Ok(Cotree::Leaf(vs[0]));
    }
    let sub = g.induced(vs);
    let comps = sub.components();
    if comps.len() > 1 {
        let children = comps
            .iter()
            .map(|c| build(g, &c.iter().map(|&i| vs[i]).collect::<Vec<_>>()))
            .collect::<Result<_>>()?;
        return Ok(Cotree::Union(children));
    }
    let co = sub.complement().components();
    if co.len() > 1 {
        let children = co
            .iter()
            .map(|c| build(g, &c.iter().map(|&i| vs[i]).collect::<Vec<_>>()))
            .collect::<Result<_>>()?;
        return Ok(Cotree::Join(children));
    }
    let w = contains_induced(&sub, &named::path(4)).expect("connected co-connected graph contains P4");
    Err(Error::NotCograph(w.iter().map(|&i| vs[i]).collect()))
}

/// Table over color subsets `W`: best revenue using only colors in `W`, with
/// enough bookkeeping to rebuild the coloring.
struct Table {
    values: Vec<f64>,
    node: Node,
}

enum Node {
    Leaf { u: usize, pick: Vec<Option<usize>> },
    Union(Vec<Table>),
    /// Left and right operand, and the color sets handed to each for every `W`.
    Join(Box<Table>, Box<Table>, Vec<(u64, u64)>),
}

/// Exact solver for cographs by dynamic programming over the cotree.
pub fn solve_cograph(inst: &Instance) -> Result<SolveReport> {
    let sol = solve_cograph_solution(inst)?;
    Ok(SolveReport::from_solution(sol, SolveStats { depth: 1, ..Default::default() }))
}

pub(crate) fn solve_cograph_solution(inst: &Instance) -> Result<Solution> {
    inst.require_irreflexive()?;
    if inst.k() > MAX_SUBSET_COLORS {
        return Err(Error::CapExceeded { what: "pattern colors", actual: inst.k(), cap: MAX_SUBSET_COLORS });
    }
    let Some(tree) = cotree(&inst.host)? else {
        return Ok(Solution::empty());
    };
    let table = evaluate(inst, &tree);
    let full = (1u64 << inst.k()) - 1;
    let mut coloring = PartialColoring::new();
    rebuild(&table, full, &mut coloring);
    Ok(Solution { value: table.values[full as usize], coloring })
}

fn evaluate(inst: &Instance, tree: &Cotree) -> Table {
    let size = 1usize << inst.k();
    match tree {
        Cotree::Leaf(u) => {
            let mut values = vec![0.0; size];
            let mut pick = vec![None; size];
            for w in 1..size {
                // extend the best choice of W minus its top color
                let top = 63 - (w as u64).leading_zeros() as usize;
                let rest = w & !(1 << top);
                let x = inst.rev.get(*u, top);
                if x > values[rest] {
                    values[w] = x;
                    pick[w] = Some(top);
                } else {
                    values[w] = values[rest];
                    pick[w] = pick[rest];
                }
            }
            Table { values, node: Node::Leaf { u: *u, pick } }
        }
        Cotree::Union(cs) => {
            let tables: Vec<Table> = cs.iter().map(|c| evaluate(inst, c)).collect();
            let values = (0..size).map(|w| tables.iter().map(|t| t.values[w]).sum()).collect();
            Table { values, node: Node::Union(tables) }
        }
        Cotree::Join(cs) => {
            let mut iter = cs.iter().map(|c| evaluate(inst, c));
            let first = iter.next().expect("join has children");
            iter.fold(first, |acc, next| join(&inst.pattern, acc, next))
        }
    }
}

/// Combines two joined modules: the left part uses colors `W1 ⊆ W`, the right
/// part the colors of `W - W1` adjacent to all of `W1`.
fn join(pattern: &PatternGraph, left: Table, right: Table) -> Table {
    let size = left.values.len();
    let nbr: Vec<u64> = (0..pattern.k()).map(|c| pattern.neighbor_mask(c)).collect();
    let mut values = vec![0.0; size];
    let mut split = vec![(0u64, 0u64); size];
    for w in 0..size as u64 {
        let mut best = f64::NEG_INFINITY;
        let mut w1 = w;
        loop {
            let common = bits(w1).fold(w & !w1, |m, c| m & nbr[c]);
            let x = left.values[w1 as usize] + right.values[common as usize];
            if x > best {
                best = x;
                split[w as usize] = (w1, common);
            }
            if w1 == 0 {
                break;
            }
            w1 = (w1 - 1) & w;
        }
        values[w as usize] = best;
    }
    Table { values, node: Node::Join(Box::new(left), Box::new(right), split) }
}

fn rebuild(table: &Table, w: u64, out: &mut PartialColoring) {
    match &table.node {
        Node::Leaf { u, pick } => {
            if let Some(v) = pick[w as usize] {
                out.assign(*u, v);
            }
        }
        Node::Union(ts) => ts.iter().for_each(|t| rebuild(t, w, out)),
        Node::Join(left, right, split) => {
            let (w1, w2) = split[w as usize];
            rebuild(left, w1, out);
            rebuild(right, w2, out);
        }
    }
}
