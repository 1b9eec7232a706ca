//! Modular decomposition, the multicoloring DP over it, and the bull-free solvers.

mod bullfree;
mod decomposition;
mod dp;

pub use bullfree::{solve_bullfree, solve_bullfree_c5free_prime};
pub use decomposition::{is_module, is_prime, modular_decomposition, ModularDecompositionTree, QuotientKind};
pub use dp::{combine_modules, restrict_revenue, solve_multicolor_dp, solve_via_prime_reduction, PrimeSolver};
