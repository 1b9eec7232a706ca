//! Subcommand implementations. Each returns the text to print on stdout.

use std::collections::HashSet;
use std::io::Read;
use std::path::Path;

use hcolor::branching::{prepare_full, prepare_simplified, BranchOptions};
use hcolor::classes::{parse_classes, random_gnp, recognize_with_witness, sample_with_rng, SampleOptions};
use hcolor::hardness::{reduce_3col_to_cobipartite, reduce_3col_to_split};
use hcolor::io::{
    graph_to_json, instance_to_json, list_instance_to_json, parse_graph, parse_instance, parse_list_instance,
    report_to_json, InstanceJson,
};
use hcolor::modular::modular_decomposition;
use hcolor::monitor::{find_monitor_base, find_monitor_base_padded, monitor_witnesses};
use hcolor::named::{make_named, NamedKind};
use hcolor::oracle::{oracle_list_hcolor_limited, oracle_solve_limited, OracleLimits};
use hcolor::{
    solve_with, Error, Graph, Instance, PatternGraph, RevenueTable, SolveReport, SolveStats, SolverConfig, Strategy,
    StrategyParams,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::exit::CliError;
use crate::{
    BranchArgs, CrosscheckArgs, DecomposeArgs, GenArgs, MonitorArgs, OracleArgs, RecognizeArgs, ReduceArgs,
    ReduceTarget, SolveArgs, SolverArgs, StrategyArg,
};

type CmdResult = Result<String, CliError>;

fn read_input(path: &Path) -> Result<String, CliError> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn solver_config(a: &SolverArgs) -> SolverConfig {
    let mut cfg = SolverConfig {
        fallback: a.fallback,
        guess_cap: a.guess_cap,
        pattern_cap: a.pattern_cap,
        all_guesses: a.all_guesses,
        ..SolverConfig::with_st(a.s, a.t)
    };
    if a.check_class {
        cfg.check_class = true;
    }
    if a.trust_class {
        cfg.check_class = false;
    }
    cfg
}

fn params(a: &SolverArgs) -> StrategyParams {
    StrategyParams { alpha: a.alpha, k: a.k }
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Oracle => Strategy::Oracle,
            StrategyArg::Recursive => Strategy::Recursive,
            StrategyArg::Subexp => Strategy::Subexp,
            StrategyArg::Threshold => Strategy::Threshold,
            StrategyArg::Cograph => Strategy::Cograph,
            StrategyArg::Bullfree => Strategy::Bullfree,
        }
    }
}

fn to_json(value: &serde_json::Value) -> String {
    serde_json::to_string(value).expect("json values serialize")
}

pub fn solve(a: &SolveArgs) -> CmdResult {
    let inst = parse_instance(&read_input(&a.input)?)?;
    let report = solve_with(a.strategy.into(), &inst, &solver_config(&a.solver), params(&a.solver))?;
    Ok(report_to_json(&report))
}

pub fn oracle(a: &OracleArgs) -> CmdResult {
    let text = read_input(&a.input)?;
    let limits = OracleLimits { max_vertices: a.max_vertices, ..Default::default() };
    if a.list {
        let (g, h, lists) = parse_list_instance(&text)?;
        let sat = oracle_list_hcolor_limited(&g, &h, &lists, &limits)?;
        return Ok(to_json(&json!({ "satisfiable": sat })));
    }
    let inst = parse_instance(&text)?;
    let sol = oracle_solve_limited(&inst, &limits)?;
    let stats = SolveStats { depth: 1, oracle_fallbacks: 1, ..Default::default() };
    Ok(report_to_json(&SolveReport::from_solution(sol, stats)))
}

fn thread_count(requested: usize) -> usize {
    std::env::var("HCOLOR_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&t| t > 0)
        .unwrap_or(requested.max(1))
}

/// Draws the crosscheck corpus from one ChaCha8 stream seeded with `seed`.
fn crosscheck_corpus(a: &CrosscheckArgs) -> Result<Vec<Instance>, CliError> {
    let classes = parse_classes(&a.class)?;
    if a.min_n > a.max_n || a.max_colors == 0 {
        return Err(CliError::usage("need min-n <= max-n and max-colors >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let opts = SampleOptions { connected: a.connected, budget: a.budget };
    (0..a.count)
        .map(|_| {
            let n = rng.gen_range(a.min_n..=a.max_n);
            let k = rng.gen_range(1..=a.max_colors);
            let density = rng.gen_range(0.2..0.8);
            let g = sample_with_rng(&classes, n, density, &mut rng, opts)?;
            Ok(random_instance(g, k, &mut rng))
        })
        .collect()
}

/// Pattern `G(k, 0.7)` and integer revenues in `[-2, 3]`.
fn random_instance(g: Graph, k: usize, rng: &mut ChaCha8Rng) -> Instance {
    let h = PatternGraph::new(random_gnp(k, 0.7, rng));
    let rev = RevenueTable::from_fn(g.n(), k, |_, _| rng.gen_range(-2..=3) as f64);
    Instance::new(g, h, rev).expect("dimensions match")
}

pub fn crosscheck(a: &CrosscheckArgs) -> CmdResult {
    if a.strategies.len() < 2 {
        return Err(CliError::usage("crosscheck needs at least two strategies"));
    }
    let corpus = crosscheck_corpus(a)?;
    let cfg = solver_config(&a.solver);
    let p = params(&a.solver);
    let strategies: Vec<Strategy> = a.strategies.iter().map(|&s| s.into()).collect();
    let last = strategies.len() - 1;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(thread_count(a.threads))
        .build()
        .map_err(|e| CliError::usage(e.to_string()))?;
    let results: Vec<Result<Vec<f64>, Error>> = pool.install(|| {
        corpus
            .par_iter()
            .map(|inst| {
                strategies
                    .iter()
                    .enumerate()
                    .map(|(i, &s)| {
                        let r = solve_with(s, inst, &cfg, p)?;
                        Ok(if a.inject_fault && i == last { r.opt + 1.0 } else { r.opt })
                    })
                    .collect()
            })
            .collect()
    });
    let mut opts = Vec::with_capacity(corpus.len());
    for (idx, (inst, res)) in corpus.iter().zip(results).enumerate() {
        let values = res.map_err(|e| {
            let mut err = CliError::from(e);
            err.message = format!("instance {idx}: {}", err.message);
            err.output = Some(instance_to_json(inst));
            err
        })?;
        if values.iter().any(|&v| v != values[0]) {
            let per_strategy: serde_json::Map<String, serde_json::Value> =
                strategies.iter().zip(&values).map(|(s, v)| (s.to_string(), json!(v))).collect();
            let dump = json!({
                "instance_index": idx,
                "opts": per_strategy,
                "instance": InstanceJson::from(inst),
            });
            return Err(CliError::mismatch(format!("strategies disagree on instance {idx}"), to_json(&dump)));
        }
        opts.push(values[0]);
    }
    let names: Vec<String> = strategies.iter().map(|s| s.to_string()).collect();
    Ok(to_json(&json!({
        "class": a.class,
        "seed": a.seed,
        "instances": corpus.len(),
        "strategies": names,
        "agree": true,
        "total_opt": opts.iter().sum::<f64>(),
        "opts": opts,
    })))
}

pub fn gen(a: &GenArgs) -> CmdResult {
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let g = match (&a.kind, &a.class) {
        (Some(kind), None) => make_named(kind.parse::<NamedKind>()?, a.k)?,
        (None, Some(class)) => {
            let classes = parse_classes(class)?;
            let opts = SampleOptions { connected: a.connected, budget: a.budget };
            sample_with_rng(&classes, a.n, a.density, &mut rng, opts)?
        }
        _ => return Err(CliError::usage("gen needs exactly one of --kind or --class")),
    };
    match a.colors {
        Some(0) => Err(CliError::usage("--colors must be positive")),
        Some(k) => Ok(instance_to_json(&random_instance(g, k, &mut rng))),
        None => Ok(graph_to_json(&g)),
    }
}

pub fn recognize(a: &RecognizeArgs) -> CmdResult {
    let g = parse_graph(&read_input(&a.input)?)?;
    let classes = parse_classes(&a.class)?;
    let mut rows = Vec::new();
    for class in classes {
        let (member, witness) = recognize_with_witness(&g, class)?;
        rows.push(json!({ "class": class.to_string(), "member": member, "witness": witness }));
    }
    Ok(to_json(&serde_json::Value::Array(rows)))
}

pub fn monitor(a: &MonitorArgs) -> CmdResult {
    let g = parse_graph(&read_input(&a.input)?)?;
    let base = if a.padded { find_monitor_base_padded(&g, a.anchor)? } else { find_monitor_base(&g, a.anchor)? };
    let m = base.closed_neighborhood(&g);
    let components: Vec<serde_json::Value> = monitor_witnesses(&g, &m)
        .into_iter()
        .map(|(c, w)| json!({ "vertices": c, "witness": w }))
        .collect();
    Ok(to_json(&json!({ "x": base.x, "closed_neighborhood": m, "components": components })))
}

pub fn decompose(a: &DecomposeArgs) -> CmdResult {
    let g = parse_graph(&read_input(&a.input)?)?;
    let tree = modular_decomposition(&g);
    if a.json {
        return Ok(serde_json::to_string(&tree).expect("tree serializes"));
    }
    Ok(match tree {
        Some(t) => t.render().trim_end().to_string(),
        None => "(empty graph)".to_string(),
    })
}

fn check_guess_cap(count: usize, cap: Option<usize>) -> Result<(), CliError> {
    match cap {
        Some(cap) if count > cap => Err(Error::CapExceeded { what: "guesses", actual: count, cap }.into()),
        _ => Ok(()),
    }
}

pub fn branch(a: &BranchArgs) -> CmdResult {
    let inst = parse_instance(&read_input(&a.input)?)?;
    let cfg = solver_config(&a.solver);
    cfg.validate()?;
    let opts = BranchOptions { check_class: cfg.check_class, ..cfg.branch_options() };
    let (s, t) = (a.solver.s, a.solver.t);
    if !a.full {
        let b = prepare_simplified(&inst, s, t, &opts)?;
        let mut guesses = 0usize;
        let mut tables = HashSet::new();
        for guess in b.guesses() {
            guesses += 1;
            check_guess_cap(guesses, cfg.guess_cap)?;
            tables.insert(b.revenue_for(&guess).key_bits(inst.host.vertices()));
        }
        return Ok(to_json(&json!({
            "mode": "simplified",
            "x": b.base.x,
            "partition_sizes": b.partition.sizes(),
            "closed_neighborhood_size": b.partition.closed_neighborhood().len(),
            "guesses": guesses,
            "distinct_tables": tables.len(),
        })));
    }
    let full = prepare_full(&inst, s, t, &opts)?;
    let mut frames = Vec::new();
    let mut pairs = 0usize;
    for frame in &full.frames {
        let count = full.guesses(frame).count();
        check_guess_cap(count, cfg.guess_cap)?;
        pairs += count;
        frames.push(json!({
            "anchor": [frame.anchor.0, frame.anchor.1],
            "x": frame.base.x,
            "partition_sizes": frame.partition.sizes(),
            "guesses": count,
        }));
    }
    Ok(to_json(&json!({ "mode": "full", "frames": frames, "pairs": pairs })))
}

pub fn reduce(a: &ReduceArgs) -> CmdResult {
    let g = parse_graph(&read_input(&a.input)?)?;
    let (li, _) = match a.target {
        ReduceTarget::Split => reduce_3col_to_split(&g)?,
        ReduceTarget::Cobipartite => reduce_3col_to_cobipartite(&g)?,
    };
    if a.as_revenue {
        return Ok(instance_to_json(&li.to_revenue_instance()?));
    }
    Ok(list_instance_to_json(&li))
}
