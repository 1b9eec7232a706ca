//! Corpus generators and brute-force reference checks shared by the integration tests.
#![allow(dead_code)]

use hcolor::classes::{random_cograph, random_gnp, recognize_all, GraphClass};
use hcolor::graph::Graph;
use hcolor::model::{Instance, PatternGraph, RevenueTable};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random irreflexive pattern on `k` colors.
pub fn random_pattern(k: usize, rng: &mut ChaCha8Rng) -> PatternGraph {
    PatternGraph::new(random_gnp(k, 0.7, rng))
}

/// Integer revenues drawn uniformly from `lo..=hi`.
pub fn random_revenue(n: usize, k: usize, lo: i32, hi: i32, rng: &mut ChaCha8Rng) -> RevenueTable {
    RevenueTable::from_fn(n, k, |_, _| rng.gen_range(lo..=hi) as f64)
}

/// Rejection sample from `G(n, p)` with `p` drawn per attempt.
pub fn sample(classes: &[GraphClass], n: usize, connected: bool, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let p = rng.gen_range(0.2..0.8);
        let g = random_gnp(n, p, rng);
        if connected && !g.is_connected() {
            continue;
        }
        if recognize_all(&g, classes) {
            return g;
        }
    }
}

pub fn p5_free() -> Vec<GraphClass> {
    vec![GraphClass::PathFree(5)]
}

/// Instances on hosts from `classes` with `n` in `n_range` and `k` in `k_range`.
pub fn corpus(
    classes: &[GraphClass],
    count: usize,
    n_range: std::ops::RangeInclusive<usize>,
    k_range: std::ops::RangeInclusive<usize>,
    connected: bool,
    seed: u64,
) -> Vec<Instance> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(n_range.clone());
            let k = r.gen_range(k_range.clone());
            let g = sample(classes, n, connected, &mut r);
            let h = random_pattern(k, &mut r);
            let rev = random_revenue(n, k, -2, 3, &mut r);
            Instance::new(g, h, rev).unwrap()
        })
        .collect()
}

pub fn cograph_corpus(count: usize, max_n: usize, max_k: usize, seed: u64) -> Vec<Instance> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(1..=max_n);
            let k = r.gen_range(1..=max_k);
            let join_p = r.gen_range(0.2..0.8);
            let g = random_cograph(n, join_p, false, &mut r);
            let h = random_pattern(k, &mut r);
            let rev = random_revenue(n, k, -2, 3, &mut r);
            Instance::new(g, h, rev).unwrap()
        })
        .collect()
}

/// Plain enumeration of all `(k + 1)^n` partial maps, no pruning.
pub fn brute_force_opt(inst: &Instance) -> f64 {
    fn go(inst: &Instance, u: usize, phi: &mut Vec<Option<usize>>, acc: f64, best: &mut f64) {
        if u == inst.n() {
            *best = best.max(acc);
            return;
        }
        phi.push(None);
        go(inst, u + 1, phi, acc, best);
        phi.pop();
        for v in 0..inst.k() {
            let ok = inst
                .host
                .neighbors(u)
                .iter()
                .filter(|&&w| w < u)
                .all(|&w| phi[w].is_none_or(|c| inst.pattern.adjacent(c, v)));
            if ok {
                phi.push(Some(v));
                go(inst, u + 1, phi, acc + inst.rev.get(u, v), best);
                phi.pop();
            }
        }
    }
    let mut best = 0.0;
    go(inst, 0, &mut Vec::new(), 0.0, &mut best);
    best
}

/// Proper 3-colorability by trying every map.
pub fn brute_force_3col(g: &Graph) -> bool {
    let n = g.n();
    let total = 3usize.pow(n as u32);
    (0..total).any(|mut code| {
        let mut col = vec![0; n];
        for c in col.iter_mut() {
            *c = code % 3;
            code /= 3;
        }
        g.edges().iter().all(|&(u, v)| col[u] != col[v])
    })
}

/// Every vertex subset (as a bitmask) that is a nonempty module.
pub fn brute_force_modules(g: &Graph) -> Vec<u32> {
    let n = g.n();
    (1u32..1 << n)
        .filter(|&s| {
            (0..n).filter(|&w| s >> w & 1 == 0).all(|w| {
                let hits = (0..n).filter(|&u| s >> u & 1 == 1 && g.has_edge(u, w)).count();
                hits == 0 || hits == s.count_ones() as usize
            })
        })
        .collect()
}

/// Modules comparable with or disjoint from every other module.
pub fn brute_force_strong_modules(g: &Graph) -> Vec<u32> {
    let all = brute_force_modules(g);
    all.iter()
        .copied()
        .filter(|&a| all.iter().all(|&b| a & b == 0 || a & b == a || a & b == b))
        .collect()
}

pub fn brute_force_is_prime(g: &Graph) -> bool {
    let n = g.n();
    brute_force_modules(g).iter().all(|&s| {
        let size = s.count_ones() as usize;
        size < 2 || size == n
    })
}

pub fn mask_of(vs: &[usize]) -> u32 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

/// Proptest strategy: arbitrary simple graph on `1..=max_n` vertices.
pub fn arb_graph(max_n: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        })
    })
}

/// Proptest strategy: instance on an arbitrary host with integer revenues in `[-2, 3]`.
pub fn arb_instance(max_n: usize, max_k: usize) -> impl proptest::strategy::Strategy<Value = Instance> {
    use proptest::prelude::*;
    (arb_graph(max_n), 1..=max_k, any::<u64>()).prop_map(|(g, k, seed)| {
        let mut r = rng(seed);
        let h = random_pattern(k, &mut r);
        let rev = random_revenue(g.n(), k, -2, 3, &mut r);
        Instance::new(g, h, rev).unwrap()
    })
}
