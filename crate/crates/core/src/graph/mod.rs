//! Tree and graph representations plus the structural utilities built on them.

mod canon;
mod classify;
pub mod edgelist;
pub mod graph6;
mod rooted;
mod subdivision;

pub use canon::{canonical_form, centroids, is_isomorphic, rooted_level_sequence, CanonicalForm};
pub use classify::{classify, classify_with, VertexClassification};
pub use rooted::{
    diametral_path, maximal_subtree, remove_vertices, DiametralPath, InducedTree, RootedView,
};
pub use subdivision::{subdivide, SubdivisionMap};

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use rand::Rng;
use thiserror::Error;

/// Dense 0-based vertex identifier.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: VertexId, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("a tree on {vertices} vertices needs {} edges, got {edges}", vertices.saturating_sub(1))]
    EdgeCount { vertices: usize, edges: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("operation requires a nontrivial tree (order >= 2), got order {0}")]
    Trivial(usize),
    #[error("vertex {0} is the root; the maximal subtree is defined only for non-root vertices")]
    RootSubtree(VertexId),
    #[error("label table has {given} entries for {order} vertices")]
    LabelCount { given: usize, order: usize },
}

/// Malformed text input, located by line (edge lists) or byte (graph6).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("graph6 byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Read access to an undirected simple graph with dense vertex ids.
pub trait Neighborhood {
    fn order(&self) -> usize;
    fn neighbors(&self, v: VertexId) -> &[VertexId];

    fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }
}

/// Simple undirected graph. Cycles are allowed; only the brute-force solver
/// and the TOIDS predicate accept graphs that are not trees.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
}

impl Graph {
    pub fn empty(order: usize) -> Self {
        Graph { adjacency: vec![Vec::new(); order] }
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adjacency = vec![Vec::new(); order];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adjacency })
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        edges_of(&self.adjacency)
    }

    pub fn is_connected(&self) -> bool {
        is_connected(&self.adjacency)
    }
}

impl Neighborhood for Graph {
    fn order(&self) -> usize {
        self.adjacency.len()
    }

    fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }
}

/// A finite tree with sorted adjacency lists and optional display labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    adjacency: Vec<Vec<VertexId>>,
    labels: Option<Vec<String>>,
}

impl Tree {
    /// Builds a tree from an edge list, rejecting anything that is not a
    /// connected acyclic simple graph on `order` vertices.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        Tree::try_from(Graph::from_edges(order, edges)?)
    }

    /// The single-vertex tree. Accepted as a value, rejected by every
    /// operation that needs a nontrivial tree.
    pub fn trivial() -> Self {
        Tree { adjacency: vec![Vec::new()], labels: None }
    }

    pub fn path(order: usize) -> Self {
        assert!(order >= 1, "a path needs at least one vertex");
        Tree::from_edges(order, (1..order).map(|i| (i - 1, i))).expect("path is a tree")
    }

    /// `K_{1,leaves}` with the center at id 0.
    pub fn star(leaves: usize) -> Self {
        Tree::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star is a tree")
    }

    /// Decodes a Prüfer sequence over `0..len+2`.
    pub fn from_prufer(seq: &[VertexId]) -> Result<Self, GraphError> {
        let n = seq.len() + 2;
        if let Some(&v) = seq.iter().find(|&&v| v >= n) {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
        }
        let mut degree = vec![1usize; n];
        for &v in seq {
            degree[v] += 1;
        }
        let mut leaves: BinaryHeap<Reverse<VertexId>> =
            (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
        let mut edges = Vec::with_capacity(n - 1);
        for &v in seq {
            let Reverse(leaf) = leaves.pop().expect("a Prüfer step always has a leaf");
            edges.push((leaf, v));
            degree[v] -= 1;
            if degree[v] == 1 {
                leaves.push(Reverse(v));
            }
        }
        let Reverse(a) = leaves.pop().expect("two leaves remain");
        let Reverse(b) = leaves.pop().expect("two leaves remain");
        edges.push((a, b));
        Tree::from_edges(n, edges)
    }

    /// A uniformly random labeled tree on `order >= 2` vertices.
    pub fn random<R: Rng + ?Sized>(order: usize, rng: &mut R) -> Self {
        assert!(order >= 2, "random trees need at least two vertices");
        let seq: Vec<VertexId> = (0..order - 2).map(|_| rng.gen_range(0..order)).collect();
        Tree::from_prufer(&seq).expect("entries are in range")
    }

    /// Adjacency lists are trusted: symmetric, sorted, acyclic and connected.
    pub(crate) fn from_adjacency_unchecked(adjacency: Vec<Vec<VertexId>>) -> Self {
        debug_assert!(adjacency.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
        Tree { adjacency, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.order() {
            return Err(GraphError::LabelCount { given: labels.len(), order: self.order() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `v`: its label when one was supplied, otherwise the id.
    pub fn display(&self, v: VertexId) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.order() - 1
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        edges_of(&self.adjacency)
    }

    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.adjacency[v].len() == 1
    }

    pub fn adjacency(&self) -> &[Vec<VertexId>] {
        &self.adjacency
    }

    pub fn to_graph(&self) -> Graph {
        Graph { adjacency: self.adjacency.clone() }
    }

    pub fn contains_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[VertexId]) -> Tree {
        let mut adjacency = vec![Vec::new(); self.order()];
        for (v, list) in self.adjacency.iter().enumerate() {
            adjacency[perm[v]] = list.iter().map(|&w| perm[w]).collect();
            adjacency[perm[v]].sort_unstable();
        }
        Tree { adjacency, labels: None }
    }

    /// Appends a fresh vertex adjacent to `to` and returns its id.
    pub(crate) fn push_leaf(&mut self, to: VertexId) -> VertexId {
        let id = self.adjacency.len();
        self.adjacency.push(vec![to]);
        // new id is the largest, so pushing keeps the list sorted
        self.adjacency[to].push(id);
        if let Some(labels) = &mut self.labels {
            labels.push(id.to_string());
        }
        id
    }
}

impl Neighborhood for Tree {
    fn order(&self) -> usize {
        self.adjacency.len()
    }

    fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }
}

impl TryFrom<Graph> for Tree {
    type Error = GraphError;

    fn try_from(graph: Graph) -> Result<Self, Self::Error> {
        let order = graph.adjacency.len();
        if order == 0 {
            return Err(GraphError::Empty);
        }
        let edges = graph.edge_count();
        if edges != order - 1 {
            return Err(GraphError::EdgeCount { vertices: order, edges });
        }
        if !is_connected(&graph.adjacency) {
            return Err(GraphError::Disconnected);
        }
        Ok(Tree { adjacency: graph.adjacency, labels: None })
    }
}

fn edges_of(adjacency: &[Vec<VertexId>]) -> Vec<(VertexId, VertexId)> {
    let mut out = Vec::new();
    for (u, list) in adjacency.iter().enumerate() {
        out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
    }
    out
}

fn is_connected(adjacency: &[Vec<VertexId>]) -> bool {
    if adjacency.is_empty() {
        return true;
    }
    bfs_distances(adjacency, 0).iter().all(|&d| d != usize::MAX)
}

/// Hop distances from `start`; unreachable vertices get `usize::MAX`.
pub(crate) fn bfs_distances(adjacency: &[Vec<VertexId>], start: VertexId) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adjacency.len()];
    let mut queue = VecDeque::new();
    dist[start] = 0;
    queue.push_back(start);
    while let Some(u) = queue.pop_front() {
        for &w in &adjacency[u] {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}
