use std::collections::BTreeMap;

use super::{GraphError, Tree, VertexId};

/// `S(T)` together with the correspondence between edges of `T` and the
/// midpoint vertices that replace them.
///
/// Original vertex `v` keeps id `v` in the subdivision. Midpoints take ids
/// `n..2n-1` in sorted edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdivisionMap {
    pub graph: Tree,
    pub original_ids: Vec<VertexId>,
    edge_vertex: BTreeMap<(VertexId, VertexId), VertexId>,
}

impl SubdivisionMap {
    /// Midpoint of the original edge `{i, j}`, in either order.
    pub fn edge_vertex(&self, i: VertexId, j: VertexId) -> Option<VertexId> {
        self.edge_vertex.get(&(i.min(j), i.max(j))).copied()
    }

    /// `((i, j), midpoint)` pairs with `i < j`.
    pub fn edge_vertices(&self) -> impl Iterator<Item = ((VertexId, VertexId), VertexId)> + '_ {
        self.edge_vertex.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_original(&self, v: VertexId) -> bool {
        v < self.original_ids.len()
    }
}

pub fn subdivide(t: &Tree) -> Result<SubdivisionMap, GraphError> {
    let n = t.order();
    if n < 2 {
        return Err(GraphError::Trivial(n));
    }
    let edges = t.edges();
    let mut adjacency: Vec<Vec<VertexId>> = vec![Vec::new(); 2 * n - 1];
    let mut edge_vertex = BTreeMap::new();
    for (k, &(i, j)) in edges.iter().enumerate() {
        let mid = n + k;
        adjacency[i].push(mid);
        adjacency[j].push(mid);
        adjacency[mid] = vec![i, j];
        edge_vertex.insert((i, j), mid);
    }
    // midpoints are added in increasing id order, so lists are already sorted
    let graph = Tree::from_adjacency_unchecked(adjacency);
    Ok(SubdivisionMap { graph, original_ids: (0..n).collect(), edge_vertex })
}
