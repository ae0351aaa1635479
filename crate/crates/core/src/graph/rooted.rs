use std::collections::VecDeque;

use serde::Serialize;

use super::{bfs_distances, GraphError, Neighborhood, Tree, VertexId};

/// A tree oriented away from a chosen root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedView {
    pub root: VertexId,
    pub parent: Vec<Option<VertexId>>,
    pub depth: Vec<usize>,
    /// Vertices in BFS order from the root.
    pub order: Vec<VertexId>,
}

impl RootedView {
    pub fn new(t: &Tree, root: VertexId) -> Result<Self, GraphError> {
        let n = t.order();
        if root >= n {
            return Err(GraphError::VertexOutOfRange { vertex: root, order: n });
        }
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in t.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        Ok(RootedView { root, parent, depth, order })
    }

    pub fn children<'a>(&'a self, t: &'a Tree, v: VertexId) -> impl Iterator<Item = VertexId> + 'a {
        let p = self.parent[v];
        t.neighbors(v).iter().copied().filter(move |&w| Some(w) != p)
    }

    /// `D(v)`: every vertex whose root path passes through `v`, excluding `v`.
    pub fn descendants(&self, t: &Tree, v: VertexId) -> Vec<VertexId> {
        let mut out = Vec::new();
        let mut stack: Vec<VertexId> = self.children(t, v).collect();
        while let Some(u) = stack.pop() {
            out.push(u);
            stack.extend(self.children(t, u));
        }
        out.sort_unstable();
        out
    }
}

/// An induced subtree plus the map from its ids back to the parent tree.
///
/// Remapping preserves relative order: `original_ids` is ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedTree {
    pub tree: Tree,
    pub original_ids: Vec<VertexId>,
}

impl InducedTree {
    pub fn new_id(&self, original: VertexId) -> Option<VertexId> {
        self.original_ids.binary_search(&original).ok()
    }
}

/// `T_v`: the subtree induced by `v` and its descendants.
pub fn maximal_subtree(rv: &RootedView, t: &Tree, v: VertexId) -> Result<InducedTree, GraphError> {
    if v >= t.order() {
        return Err(GraphError::VertexOutOfRange { vertex: v, order: t.order() });
    }
    if v == rv.root {
        return Err(GraphError::RootSubtree(v));
    }
    let mut keep = vec![false; t.order()];
    keep[v] = true;
    for d in rv.descendants(t, v) {
        keep[d] = true;
    }
    induced(t, &keep)
}

/// `T - S`. Fails when the remainder is empty or disconnected.
pub fn remove_vertices(t: &Tree, removed: &[VertexId]) -> Result<InducedTree, GraphError> {
    let n = t.order();
    let mut keep = vec![true; n];
    for &v in removed {
        if v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
        }
        keep[v] = false;
    }
    induced(t, &keep)
}

fn induced(t: &Tree, keep: &[bool]) -> Result<InducedTree, GraphError> {
    let original_ids: Vec<VertexId> = (0..t.order()).filter(|&v| keep[v]).collect();
    if original_ids.is_empty() {
        return Err(GraphError::Empty);
    }
    let mut new_id = vec![usize::MAX; t.order()];
    for (i, &v) in original_ids.iter().enumerate() {
        new_id[v] = i;
    }
    let adjacency: Vec<Vec<VertexId>> = original_ids
        .iter()
        .map(|&v| t.neighbors(v).iter().filter(|&&w| keep[w]).map(|&w| new_id[w]).collect())
        .collect();
    let edges: usize = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
    if edges + 1 != original_ids.len() {
        // an induced subgraph of a tree is a forest; too few edges means disconnected
        return Err(GraphError::Disconnected);
    }
    let mut tree = Tree::from_adjacency_unchecked(adjacency);
    if let Some(labels) = t.labels() {
        tree.labels = Some(original_ids.iter().map(|&v| labels[v].clone()).collect());
    }
    Ok(InducedTree { tree, original_ids })
}

/// A longest path `v_1 .. v_{d+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiametralPath {
    pub vertices: Vec<VertexId>,
    pub diameter: usize,
}

/// The diametral path whose endpoint pair is lexicographically smallest,
/// listed from the smaller endpoint.
pub fn diametral_path(t: &Tree) -> Result<DiametralPath, GraphError> {
    if t.order() < 2 {
        return Err(GraphError::Trivial(t.order()));
    }
    let vertices = lex_diametral_path(t.adjacency());
    Ok(DiametralPath { diameter: vertices.len() - 1, vertices })
}

pub(crate) fn lex_diametral_path(adjacency: &[Vec<VertexId>]) -> Vec<VertexId> {
    let argmax = |dist: &[usize]| {
        let best = *dist.iter().max().expect("nonempty");
        dist.iter().position(|&d| d == best).expect("max exists")
    };
    let x = argmax(&bfs_distances(adjacency, 0));
    let from_x = bfs_distances(adjacency, x);
    let y = argmax(&from_x);
    let from_y = bfs_distances(adjacency, y);
    let d = from_x[y];
    // ecc(v) = max(dist(v, x), dist(v, y)) for any diametral pair (x, y)
    let u = (0..adjacency.len())
        .find(|&v| from_x[v].max(from_y[v]) == d)
        .expect("x itself has eccentricity d");
    let from_u = bfs_distances(adjacency, u);
    let w = from_u.iter().position(|&dist| dist == d).expect("u is a diametral endpoint");

    let mut path = Vec::with_capacity(d + 1);
    let mut cur = w;
    path.push(cur);
    while cur != u {
        cur = *adjacency[cur]
            .iter()
            .find(|&&z| from_u[z] + 1 == from_u[cur])
            .expect("a tree has a unique predecessor toward u");
        path.push(cur);
    }
    path.reverse();
    path
}
