//! Vertex caps for the exponential solvers.

use std::sync::OnceLock;

/// Default cap for the exact Grundy and chromatic solvers.
pub const DEFAULT_SOLVER_LIMIT: usize = 20;
/// Hard ceiling applied to any `GLAB_SOLVER_LIMIT` override.
pub const MAX_SOLVER_LIMIT: usize = 24;
/// Exhaustive complete-colouring search.
pub const ACHROMATIC_LIMIT: usize = 10;
/// Sweeps over all `2^n` induced subgraphs.
pub const SWEEP_LIMIT: usize = 7;
/// Permutation and partition brute-force oracles.
pub const BRUTE_FORCE_LIMIT: usize = 8;

pub const SOLVER_LIMIT_ENV: &str = "GLAB_SOLVER_LIMIT";

/// Cap for the exact Grundy and chromatic solvers, read once from
/// `GLAB_SOLVER_LIMIT` and clamped to `1..=MAX_SOLVER_LIMIT`.
pub fn solver_limit() -> usize {
    static LIMIT: OnceLock<usize> = OnceLock::new();
    *LIMIT.get_or_init(|| parse_limit(std::env::var(SOLVER_LIMIT_ENV).ok().as_deref()))
}

fn parse_limit(raw: Option<&str>) -> usize {
    raw.and_then(|s| s.trim().parse::<usize>().ok())
        .map(|v| v.clamp(1, MAX_SOLVER_LIMIT))
        .unwrap_or(DEFAULT_SOLVER_LIMIT)
}
