//! Exact total outer-independent domination numbers.
//!
//! A set `D` is a TOIDS of `G` when every vertex has a neighbor in `D` and
//! no edge joins two vertices outside `D`. Two independent routes compute the
//! minimum: an exhaustive search for small graphs of any shape, and a
//! linear-time dynamic program for trees.

mod bounds;
mod brute;
mod dp;
mod predicate;

pub use bounds::{bounds, gamma_subdivision, BoundReport};
pub use brute::{gamma_brute, gamma_brute_capped, BRUTE_FORCE_CAP};
pub use dp::{gamma_tree_dp, gamma_tree_dp_forced};
pub use predicate::is_toids;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{GraphError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("brute force is capped at {cap} vertices, graph has {order}")]
    CapExceeded { order: usize, cap: usize },
    #[error("no TOIDS contains the forced set")]
    Infeasible,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    BruteForce,
    TreeDp,
}

/// A minimum TOIDS and how it was found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ToidSolution {
    pub value: usize,
    /// Sorted; `witness.len() == value`.
    pub witness: Vec<VertexId>,
    pub method: Method,
    /// Sorted vertices the solution was required to contain.
    pub forced: Vec<VertexId>,
}

fn check_ids(order: usize, ids: &[VertexId]) -> Result<(), GraphError> {
    match ids.iter().find(|&&v| v >= order) {
        Some(&vertex) => Err(GraphError::VertexOutOfRange { vertex, order }),
        None => Ok(()),
    }
}

fn sorted_set(ids: &[VertexId]) -> Vec<VertexId> {
    let mut v = ids.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}
