//! Exact algorithms for Max Partial H-Coloring on hereditary graph classes.
//!
//! An instance is a host graph `G`, an irreflexive pattern `H` and a revenue
//! table `rev: V(G) × V(H) → ℝ`; a solution is a partial homomorphism
//! `G ⇀ H` maximizing total revenue. The crate provides brute-force oracles,
//! monitor-based branching, recursive solvers for `{P6, L_s, S_t}`-free hosts,
//! a cograph DP, a modular-decomposition reduction to prime graphs with a
//! bull-free pipeline on top, and the 3-Coloring reductions onto the looped
//! pattern `H0`.

pub mod branching;
pub mod classes;
pub mod error;
pub mod graph;
pub mod hardness;
pub mod induced;
pub mod io;
pub mod model;
pub mod modular;
pub mod monitor;
pub mod named;
pub mod oracle;
pub mod solvers;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use model::{Instance, MulticolorInstance, Multicoloring, PartialColoring, PatternGraph, RevenueTable, Solution};
pub use solvers::{solve_with, SolveReport, SolveStats, SolverConfig, Strategy, StrategyParams};
