mod common;

use common::*;
use hcolor::classes::{random_cograph, GraphClass};
use hcolor::graph::Graph;
use hcolor::model::{Instance, RevenueTable};
use hcolor::oracle::oracle_opt;
use hcolor::solvers::{
    solve_ante_excluded, solve_cograph, solve_recursive, solve_subexponential, solve_with, ExclusionBase,
    SolverConfig, Strategy, StrategyParams,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn cfg() -> SolverConfig {
    SolverConfig { check_class: true, check_invariants: true, ..SolverConfig::with_st(3, 2) }
}

fn relabel(inst: &Instance, perm: &[usize]) -> Instance {
    let n = inst.n();
    let mut g = Graph::new(n);
    for (u, v) in inst.host.edges() {
        g.add_edge(perm[u], perm[v]);
    }
    let mut rev = RevenueTable::filled(n, inst.k(), 0.0);
    for u in 0..n {
        for v in 0..inst.k() {
            rev.set(perm[u], v, inst.rev.get(u, v));
        }
    }
    Instance::new(g, inst.pattern.clone(), rev).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn strategies_agree_on_p5_free_bull_free_hosts(seed in any::<u64>()) {
        let classes = [GraphClass::PathFree(5), GraphClass::BullFree];
        let inst = corpus(&classes, 1, 1..=8, 1..=3, false, seed).pop().unwrap();
        let expected = oracle_opt(&inst).unwrap();
        for strategy in [Strategy::Oracle, Strategy::Recursive, Strategy::Subexp, Strategy::Bullfree] {
            let r = solve_with(strategy, &inst, &cfg(), StrategyParams::default()).unwrap();
            prop_assert_eq!(r.opt, expected, "{}", strategy);
            prop_assert!(r.certify(&inst));
        }
    }

    #[test]
    fn cograph_solver_ignores_vertex_labels(seed in any::<u64>()) {
        let mut r = rng(seed);
        let inst = cograph_corpus(1, 10, 3, seed).pop().unwrap();
        let mut perm: Vec<usize> = (0..inst.n()).collect();
        perm.shuffle(&mut r);
        let a = solve_cograph(&inst).unwrap();
        let b = solve_cograph(&relabel(&inst, &perm)).unwrap();
        prop_assert_eq!(a.opt, b.opt);
    }

    #[test]
    fn recursive_solver_ignores_vertex_labels(seed in any::<u64>()) {
        let mut r = rng(seed);
        let inst = corpus(&p5_free(), 1, 1..=9, 1..=3, true, seed).pop().unwrap();
        let mut perm: Vec<usize> = (0..inst.n()).collect();
        perm.shuffle(&mut r);
        let a = solve_recursive(&inst, &cfg()).unwrap();
        let b = solve_recursive(&relabel(&inst, &perm), &cfg()).unwrap();
        prop_assert_eq!(a.opt, b.opt);
    }

    #[test]
    fn cograph_exclusion_chain_matches_oracle(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(1..=8);
        let g = random_cograph(n, 0.5, false, &mut r);
        let k = r.gen_range(1..=2);
        let inst = Instance::new(g, random_pattern(k, &mut r), random_revenue(n, k, -2, 3, &mut r)).unwrap();
        let rep = solve_ante_excluded(&inst, &cfg(), 0, ExclusionBase::Cograph).unwrap();
        prop_assert_eq!(rep.opt, oracle_opt(&inst).unwrap());
    }
}

#[test]
fn deleting_a_vertex_never_raises_the_recursive_optimum() {
    let mut r = rng(0xDE1E7E);
    let instances = corpus(&p5_free(), 50, 3..=9, 1..=3, true, 0xDE1E7E);
    for (i, inst) in instances.iter().enumerate() {
        let u = r.gen_range(0..inst.n());
        let keep: Vec<usize> = inst.host.vertices().filter(|&w| w != u).collect();
        let sub = inst.restrict(&keep).inst;
        let whole = solve_recursive(inst, &cfg()).unwrap().opt;
        let part = solve_recursive(&sub, &cfg()).unwrap().opt;
        assert!(part <= whole, "instance {i}: G - {u} has {part} > {whole}");
    }
}

#[test]
fn subexp_matches_recursive_for_several_exponents() {
    for (i, inst) in corpus(&p5_free(), 40, 1..=9, 1..=3, false, 0x5B3).iter().enumerate() {
        let base = solve_recursive(inst, &cfg()).unwrap().opt;
        for alpha in 1..=3 {
            let r = solve_subexponential(inst, &cfg(), alpha).unwrap();
            assert_eq!(r.opt, base, "instance {i}, alpha {alpha}");
        }
    }
}

#[test]
fn class_checks_reject_wrong_hosts() {
    let p6 = Instance::uniform(hcolor::named::path(6), hcolor::model::PatternGraph::complete(2), 1.0);
    assert!(solve_recursive(&p6, &cfg()).unwrap_err().is_class_violation());
    let p4 = Instance::uniform(hcolor::named::path(4), hcolor::model::PatternGraph::complete(2), 1.0);
    assert!(matches!(solve_cograph(&p4).unwrap_err(), hcolor::Error::NotCograph(..)));
}

#[test]
fn solvers_refuse_looped_patterns() {
    let mut h = Graph::new(2);
    h.add_edge(0, 1);
    h.add_loop(1);
    let inst = Instance::uniform(hcolor::named::path(3), hcolor::model::PatternGraph::new(h), 1.0);
    for strategy in [Strategy::Oracle, Strategy::Recursive, Strategy::Cograph, Strategy::Bullfree] {
        let err = solve_with(strategy, &inst, &cfg(), StrategyParams::default()).unwrap_err();
        assert!(matches!(err, hcolor::Error::ReflexivePattern), "{strategy}: {err}");
    }
}
