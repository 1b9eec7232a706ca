//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Revenues are small integers, so every optimum comparison is exact
//! (tolerance 0).

mod common;

use std::time::Instant;

use common::*;
use hcolor::branching::{branch_full, branch_simplified, BranchOptions};
use hcolor::classes::{is_split, random_gnp, recognize_all, GraphClass};
use hcolor::graph::{Graph, VertexSet};
use hcolor::hardness::{reduce_3col_to_cobipartite, reduce_3col_to_split};
use hcolor::induced::{clique_number, is_isomorphic, maximal_cliques};
use hcolor::model::{hat, is_valid, revenue, to_multicolor, Instance, MulticolorInstance, PatternGraph};
use hcolor::modular::{modular_decomposition, solve_bullfree, solve_via_prime_reduction, QuotientKind};
use hcolor::monitor::{find_monitor_base, is_monitor};
use hcolor::named;
use hcolor::oracle::{
    oracle_3coloring, oracle_list_hcolor, oracle_opt, oracle_solve, oracle_solve_limited, oracle_solve_multicolor,
    OracleLimits,
};
use hcolor::solvers::{
    solve_cograph, solve_recursive, solve_subexponential, solve_threshold_excluded, subexp_threshold, SolverConfig,
};
use rand::Rng;

/// Allowed absolute difference between two optima.
const OPT_TOLERANCE: f64 = 0.0;

fn same(a: f64, b: f64) -> bool {
    (a - b).abs() <= OPT_TOLERANCE
}

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn checked_cfg() -> SolverConfig {
    SolverConfig { check_class: true, check_invariants: true, ..SolverConfig::with_st(3, 2) }
}

fn p5_corpus() -> Vec<Instance> {
    corpus(&p5_free(), 200, 4..=9, 1..=3, true, 0xC0FFEE)
}

fn criterion_1(corpus: &[Instance]) -> Outcome {
    let cfg = checked_cfg();
    for (i, inst) in corpus.iter().enumerate() {
        let expected = oracle_opt(inst).map_err(|e| e.to_string())?;
        ensure(same(expected, brute_force_opt(inst)), || format!("instance {i}: oracle disagrees with enumeration"))?;
        let r = solve_recursive(inst, &cfg).map_err(|e| format!("instance {i}: {e}"))?;
        ensure(same(r.opt, expected), || format!("instance {i}: recursive {} vs oracle {expected}", r.opt))?;
        ensure(r.certify(inst), || format!("instance {i}: solution fails certification"))?;
    }
    Ok(format!("{} instances, recursive = oracle", corpus.len()))
}

fn criterion_2(corpus: &[Instance]) -> Outcome {
    let opts = BranchOptions::default();
    let mut tested = 0;
    let mut tables = 0;
    let mut pairs_seen = 0;
    for (i, inst) in corpus.iter().enumerate().filter(|(_, inst)| inst.n() >= 5).take(50) {
        tested += 1;
        let expected = oracle_opt(inst).map_err(|e| e.to_string())?;
        let (stripped, revs) = branch_simplified(inst, 3, 2, &opts).map_err(|e| format!("instance {i}: {e}"))?;
        let mut best = 0.0f64;
        for rev in revs {
            tables += 1;
            let sub = Instance::new(stripped.clone(), inst.pattern.clone(), rev).unwrap();
            let sol = oracle_solve(&sub).map_err(|e| e.to_string())?;
            ensure(is_valid(inst, &sol.coloring), || format!("instance {i}: derived optimum invalid for G"))?;
            let original = revenue(inst, &sol.coloring).unwrap();
            ensure(same(original, sol.value), || format!("instance {i}: derived optimum changes revenue"))?;
            best = best.max(sol.value);
        }
        ensure(same(best, expected), || format!("instance {i}: simplified max {best} vs oracle {expected}"))?;
        if !inst.rev.has_positive() {
            continue;
        }
        let pairs = branch_full(inst, 3, 2, &opts).map_err(|e| format!("instance {i}: {e}"))?;
        let mut best = 0.0f64;
        for pair in pairs {
            pairs_seen += 1;
            let s1 = oracle_solve(&pair.first.inst).map_err(|e| e.to_string())?;
            let s2 = oracle_solve(&pair.second.inst).map_err(|e| e.to_string())?;
            let mut phi = pair.first.lift(&s1.coloring);
            phi.absorb(pair.second.lift(&s2.coloring));
            ensure(is_valid(inst, &phi), || format!("instance {i}: recombined full solution invalid"))?;
            let total = s1.value + s2.value;
            ensure(same(revenue(inst, &phi).unwrap(), total), || format!("instance {i}: sum identity broken"))?;
            ensure(pair.first.inst.k() + 1 == inst.k(), || format!("instance {i}: first pattern size"))?;
            best = best.max(total);
        }
        ensure(same(best, expected), || format!("instance {i}: full max {best} vs oracle {expected}"))?;
    }
    Ok(format!("{tested} instances, {tables} derived tables, {pairs_seen} pairs"))
}

fn criterion_3() -> Outcome {
    let mut r = rng(0x5EED_0003);
    let mut graphs = 0;
    let mut anchors = 0;
    while graphs < 500 {
        let n = r.gen_range(1..=9);
        let g = sample(&[GraphClass::PathFree(6)], n, true, &mut r);
        graphs += 1;
        let omega = clique_number(&g);
        let cliques = maximal_cliques(&g);
        for a in g.vertices() {
            anchors += 1;
            let base = find_monitor_base(&g, Some(a)).map_err(|e| format!("graph {graphs}, anchor {a}: {e}"))?;
            ensure(base.x.len() <= 3 && base.x[0] == a, || format!("graph {graphs}: bad base {:?}", base.x))?;
            let m: VertexSet = base.closed_neighborhood(&g);
            ensure(is_monitor(&g, &m).unwrap(), || format!("graph {graphs}: N[X] is not a monitor"))?;
            ensure(cliques.iter().all(|c| c.iter().any(|v| m.contains(v))), || {
                format!("graph {graphs}: a maximal clique misses N[X]")
            })?;
            if g.edge_count() > 0 {
                let (rest, _) = g.remove_vertices(&m);
                ensure(clique_number(&rest) < omega, || format!("graph {graphs}: clique number did not drop"))?;
            }
        }
    }
    Ok(format!("{graphs} graphs, {anchors} anchors"))
}

fn criterion_4(corpus: &[Instance]) -> Outcome {
    let cfg = checked_cfg();
    let opts = BranchOptions::default();
    let mut top = 0;
    for (i, inst) in corpus.iter().enumerate() {
        let r = solve_recursive(inst, &cfg).map_err(|e| format!("instance {i}: {e}"))?;
        ensure(r.stats.omega_violations == 0, || format!("instance {i}: clique number did not drop"))?;
        let omega = clique_number(&inst.host);
        ensure(r.stats.depth <= 2 * omega, || format!("instance {i}: depth {} > 2*{omega}", r.stats.depth))?;
        if inst.n() >= 5 && inst.host.edge_count() > 0 {
            let (stripped, _) = branch_simplified(inst, 3, 2, &opts).map_err(|e| e.to_string())?;
            ensure(clique_number(&stripped) < omega, || format!("instance {i}: top-level clique number"))?;
            top += 1;
        }
    }
    Ok(format!("{} solves, {top} top-level branchings, 0 violations", corpus.len()))
}

fn criterion_5(corpus: &[Instance]) -> Outcome {
    ensure(subexp_threshold(16, 1) == 4, || "threshold(16, 1) != 4".into())?;
    let cfg = checked_cfg();
    for (i, inst) in corpus.iter().enumerate() {
        let a = solve_subexponential(inst, &cfg, 1).map_err(|e| format!("instance {i}: {e}"))?;
        let b = solve_recursive(inst, &cfg).map_err(|e| format!("instance {i}: {e}"))?;
        let expected = oracle_opt(inst).map_err(|e| e.to_string())?;
        ensure(same(a.opt, b.opt) && same(a.opt, expected), || {
            format!("instance {i}: subexp {} recursive {} oracle {expected}", a.opt, b.opt)
        })?;
        ensure(a.certify(inst), || format!("instance {i}: certification"))?;
    }
    Ok(format!("{} instances, tau(16)=4", corpus.len()))
}

fn criterion_6() -> Outcome {
    let corpus = cograph_corpus(200, 12, 3, 0x5EED_0006);
    for (i, inst) in corpus.iter().enumerate() {
        let expected = oracle_opt(inst).map_err(|e| e.to_string())?;
        let r = solve_cograph(inst).map_err(|e| format!("instance {i}: {e}"))?;
        ensure(same(r.opt, expected), || format!("instance {i}: cograph {} vs oracle {expected}", r.opt))?;
        ensure(r.certify(inst), || format!("instance {i}: certification"))?;
    }
    Ok(format!("{} cographs", corpus.len()))
}

fn criterion_7() -> Outcome {
    let mut r = rng(0x5EED_0007);
    for i in 0..100 {
        let n = r.gen_range(1..=8);
        let k = r.gen_range(1..=2);
        let p = r.gen_range(0.1..0.9);
        let g = random_gnp(n, p, &mut r);
        let h = random_pattern(k, &mut r);
        let rev = random_revenue(n, k, -2, 3, &mut r);
        let inst = Instance::new(g.clone(), h, rev).unwrap();
        let rep = solve_via_prime_reduction(&inst, 64, &mut |q: &Instance| oracle_solve(q))
            .map_err(|e| format!("instance {i}: {e}"))?;
        let expected = oracle_opt(&inst).map_err(|e| e.to_string())?;
        ensure(same(rep.opt, expected), || format!("instance {i}: reduction {} vs oracle {expected}", rep.opt))?;
        ensure(rep.certify(&inst), || format!("instance {i}: certification"))?;

        let tree = modular_decomposition(&g).expect("nonempty");
        ensure(tree.node_count() < 2 * n, || format!("instance {i}: {} nodes", tree.node_count()))?;
        let mut nodes: Vec<u32> = tree.nodes().iter().map(|t| mask_of(&t.vertices)).collect();
        nodes.sort_unstable();
        let mut strong = brute_force_strong_modules(&g);
        strong.sort_unstable();
        ensure(nodes == strong, || format!("instance {i}: tree nodes differ from strong modules"))?;
        for node in tree.nodes() {
            let Some(kind) = node.kind else { continue };
            let q = node.quotient(&g);
            let m = q.n();
            let ok = match kind {
                QuotientKind::Edgeless => q.edge_count() == 0,
                QuotientKind::Complete => q.edge_count() == m * (m - 1) / 2,
                QuotientKind::Prime => m >= 4 && brute_force_is_prime(&q),
            };
            ensure(ok, || format!("instance {i}: quotient of {:?} is not {kind:?}", node.vertices))?;
        }
    }
    Ok("100 graphs, tree = strong modules, quotients classified".into())
}

fn criterion_8() -> Outcome {
    let q2 = [GraphClass::PathFree(5), GraphClass::HalfGraphFree(2)];
    let q3 = [GraphClass::PathFree(5), GraphClass::HalfGraphFree(3)];
    let cfg = checked_cfg();
    let mut total = 0;
    for (classes, count, k, seed) in [(&q2, 100, 2, 0x5EED_0008u64), (&q3, 50, 3, 0x5EED_0018)] {
        for (i, inst) in corpus(classes, count, 1..=8, 1..=2, false, seed).iter().enumerate() {
            let expected = oracle_opt(inst).map_err(|e| e.to_string())?;
            let r = solve_threshold_excluded(inst, &cfg, k).map_err(|e| format!("Q{k} instance {i}: {e}"))?;
            ensure(same(r.opt, expected), || format!("Q{k} instance {i}: {} vs oracle {expected}", r.opt))?;
            ensure(r.certify(inst), || format!("Q{k} instance {i}: certification"))?;
            total += 1;
        }
    }
    Ok(format!("{total} instances (100 Q2-free, 50 Q3-free)"))
}

fn criterion_9() -> Outcome {
    let classes = [GraphClass::PathFree(5), GraphClass::BullFree];
    let cfg = checked_cfg();
    let mut prime_calls = 0;
    let mut branch_nodes = 0;
    for (i, inst) in corpus(&classes, 100, 1..=9, 1..=2, false, 0x5EED_0009).iter().enumerate() {
        let expected = oracle_opt(inst).map_err(|e| e.to_string())?;
        let r = solve_bullfree(inst, &cfg).map_err(|e| format!("instance {i}: {e}"))?;
        ensure(r.stats.structure_violations == 0, || format!("instance {i}: structure assertion fired"))?;
        ensure(same(r.opt, expected), || format!("instance {i}: bullfree {} vs oracle {expected}", r.opt))?;
        ensure(r.certify(inst), || format!("instance {i}: certification"))?;
        prime_calls += r.stats.prime_calls;
        branch_nodes += r.stats.branch_nodes;
    }
    ensure(branch_nodes > 0, || "no prime quotient was large enough to branch".into())?;
    Ok(format!("100 instances, {prime_calls} prime calls, {branch_nodes} branchings, no structure violations"))
}

fn criterion_10() -> Outcome {
    let mut r = rng(0x5EED_0010);
    let mut colorable = 0;
    let p5_bull = [GraphClass::PathFree(5), GraphClass::BullFree];
    for i in 0..300 {
        let n = r.gen_range(1..=7);
        let p = r.gen_range(0.2..0.9);
        let g = random_gnp(n, p, &mut r);
        let m = g.edge_count();
        let three = oracle_3coloring(&g).map_err(|e| e.to_string())?;
        ensure(three == brute_force_3col(&g), || format!("graph {i}: 3-coloring oracles disagree"))?;
        let (split, layout) = reduce_3col_to_split(&g).map_err(|e| e.to_string())?;
        let (cobip, _) = reduce_3col_to_cobipartite(&g).map_err(|e| e.to_string())?;
        let h0 = hcolor::hardness::build_h0();
        let a = oracle_list_hcolor(&split.graph, &h0, &split.lists).map_err(|e| e.to_string())?;
        let b = oracle_list_hcolor(&cobip.graph, &h0, &cobip.lists).map_err(|e| e.to_string())?;
        ensure(a == three && b == three, || format!("graph {i}: 3col {three}, split {a}, cobipartite {b}"))?;
        ensure(split.graph.n() == 3 * n + m, || format!("graph {i}: |V(G')| != 3n+m"))?;
        ensure(is_split(&split.graph), || format!("graph {i}: G' not split"))?;
        let indep: Vec<usize> = layout.w.iter().copied().chain(layout.z.iter().map(|&(_, z)| z)).collect();
        ensure(split.graph.is_independent(&indep), || format!("graph {i}: W+Z not independent"))?;
        ensure(indep.iter().all(|&v| split.graph.degree(v) == 2), || format!("graph {i}: degree != 2"))?;
        ensure(cobip.graph.complement().is_bipartite(), || format!("graph {i}: G'' not cobipartite"))?;
        ensure(recognize_all(&cobip.graph, &p5_bull), || format!("graph {i}: G'' not {{P5, bull}}-free"))?;
        colorable += three as usize;
    }
    Ok(format!("300 graphs ({colorable} 3-colorable), all equivalences hold"))
}

fn criterion_11() -> Outcome {
    for k in 1..=4 {
        let h = PatternGraph::complete(k);
        ensure(hat(&h).unwrap().k() == (1 << k) - 1, || format!("|hat(K{k})|"))?;
        let e = PatternGraph::new(Graph::new(k));
        ensure(hat(&e).unwrap().k() == (1 << k) - 1, || format!("|hat(E{k})|"))?;
    }
    let k1 = hat(&PatternGraph::complete(1)).unwrap();
    ensure(is_isomorphic(k1.graph(), &named::complete(1)), || "hat(K1) != K1".into())?;
    let k2 = hat(&PatternGraph::complete(2)).unwrap();
    let expected = Graph::from_edges(3, &[(0, 1)]).unwrap();
    ensure(is_isomorphic(k2.graph(), &expected), || "hat(K2) is not an edge plus a vertex".into())?;

    let mut r = rng(0x5EED_0011);
    let mut fixtures = 0;
    for _ in 0..60 {
        let n = r.gen_range(1..=5);
        let k = r.gen_range(1..=3);
        let g = random_gnp(n, r.gen_range(0.2..0.8), &mut r);
        let h = random_pattern(k, &mut r);
        let vals: Vec<f64> = (0..n * ((1 << k) - 1)).map(|_| r.gen_range(-2..=3) as f64).collect();
        let minst =
            MulticolorInstance::from_fn(g.clone(), h.clone(), |u, z| vals[u * ((1 << k) - 1) + z as usize - 1])
                .unwrap();
        let (multi, _) = oracle_solve_multicolor(&minst).map_err(|e| e.to_string())?;
        let hat_inst = minst.as_hat_instance().unwrap();
        let via_hat = oracle_solve_limited(&hat_inst, &OracleLimits::default()).map_err(|e| e.to_string())?;
        ensure(same(multi, via_hat.value), || format!("fixture {fixtures}: multicolor {multi} vs hat {}", via_hat.value))?;
        let plain = Instance::new(g, h, random_revenue(n, k, -2, 3, &mut r)).unwrap();
        let (lifted, _) = oracle_solve_multicolor(&to_multicolor(&plain).unwrap()).map_err(|e| e.to_string())?;
        ensure(same(lifted, oracle_opt(&plain).unwrap()), || format!("fixture {fixtures}: to_multicolor changes OPT"))?;
        fixtures += 1;
    }
    Ok(format!("sizes for |H| <= 4, hat(K1), hat(K2), {fixtures} oracle fixtures"))
}

fn main() {
    let start = Instant::now();
    let corpus = p5_corpus();
    let corpus = &corpus;
    let jobs: Vec<(usize, Box<dyn Fn() -> Outcome + Send + Sync + '_>)> = vec![
        (1, Box::new(move || criterion_1(corpus))),
        (2, Box::new(move || criterion_2(corpus))),
        (3, Box::new(criterion_3)),
        (4, Box::new(move || criterion_4(corpus))),
        (5, Box::new(move || criterion_5(corpus))),
        (6, Box::new(criterion_6)),
        (7, Box::new(criterion_7)),
        (8, Box::new(criterion_8)),
        (9, Box::new(criterion_9)),
        (10, Box::new(criterion_10)),
        (11, Box::new(criterion_11)),
    ];
    let results: Vec<(usize, Outcome, f64)> = std::thread::scope(|s| {
        let handles: Vec<_> = jobs
            .iter()
            .map(|(id, job)| {
                s.spawn(move || {
                    let t = Instant::now();
                    let out = std::panic::catch_unwind(std::panic::AssertUnwindSafe(job))
                        .unwrap_or_else(|_| Err("panicked".into()));
                    (*id, out, t.elapsed().as_secs_f64())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("criterion thread")).collect()
    });
    let mut failed = 0;
    for (id, out, secs) in &results {
        match out {
            Ok(msg) => println!("criterion {id:>2}: PASS ({msg}; {secs:.1}s)"),
            Err(msg) => {
                failed += 1;
                println!("criterion {id:>2}: FAIL ({msg}; {secs:.1}s)");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed, tolerance {OPT_TOLERANCE}, {:.1}s", results.len() - failed, start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
