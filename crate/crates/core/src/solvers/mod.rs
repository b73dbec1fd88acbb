//! Exact optimum oracles and the layout heuristic that feeds the DPs.

pub mod brute;
pub mod dp;
pub mod heuristic;

pub use brute::{brute_ds, brute_ds_with_limit, brute_is, brute_is_with_limit, brute_vc, brute_vc_with_limit, DEFAULT_BRUTE_LIMIT};
pub use dp::{dp_ds, dp_ds_with_budget, dp_is, dp_is_with_budget, state_ceiling, DpReport, DEFAULT_MEMORY_BUDGET};
pub use heuristic::heuristic_layout;
