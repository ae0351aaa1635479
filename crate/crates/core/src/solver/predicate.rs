use super::check_ids;
use crate::graph::{GraphError, Neighborhood, VertexId};

/// True iff `d` totally dominates `g` and `V(g) \ d` is independent.
pub fn is_toids<G: Neighborhood>(g: &G, d: &[VertexId]) -> Result<bool, GraphError> {
    let n = g.order();
    check_ids(n, d)?;
    let mut in_set = vec![false; n];
    for &v in d {
        in_set[v] = true;
    }
    Ok((0..n).all(|v| {
        let nbrs = g.neighbors(v);
        nbrs.iter().any(|&w| in_set[w]) && (in_set[v] || nbrs.iter().all(|&w| in_set[w]))
    }))
}
