//! Exhaustive free-tree enumeration and the sweep that checks the bound,
//! both characterizations and the supporting lemmas on every small tree.

mod free_trees;
mod sweep;

pub use free_trees::{enumerate_free_trees, EnumerateError, FreeTrees, MAX_ENUM_ORDER};
pub use sweep::{
    expected_delta, run_sweep, Check, Counterexample, OrderSummary, SweepConfig, SweepError,
    SweepReport, Tally, ORACLE_SUBDIVISION_CAP, SCHEMA_VERSION,
};

use serde::{Deserialize, Serialize};

use crate::graph::Tree;
use crate::solver::{bounds, SolveError};

/// Which bounds a tree attains. `Lower` and `Upper` include trees attaining
/// both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Attainment {
    Lower,
    Upper,
    Both,
    Neither,
}

#[derive(Debug, thiserror::Error)]
pub enum MembersError {
    #[error("n must be at least 2, got {0}")]
    TooSmall(usize),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// All `n`-vertex trees with the requested signature, in enumeration order.
pub fn find_members(n: usize, which: Attainment) -> Result<Vec<Tree>, MembersError> {
    if n < 2 {
        return Err(MembersError::TooSmall(n));
    }
    let mut out = Vec::new();
    for t in enumerate_free_trees(n)? {
        let b = bounds(&t)?;
        let keep = match which {
            Attainment::Lower => b.attains_lower,
            Attainment::Upper => b.attains_upper,
            Attainment::Both => b.attains_lower && b.attains_upper,
            Attainment::Neither => !b.attains_lower && !b.attains_upper,
        };
        if keep {
            out.push(t);
        }
    }
    Ok(out)
}
