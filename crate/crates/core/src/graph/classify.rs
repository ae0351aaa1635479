use serde::Serialize;

use super::{GraphError, Neighborhood, Tree, VertexId};

/// The leaf/support class table of a nontrivial tree.
///
/// All sets are sorted vertex-id lists. On `P_2` both vertices are leaves and
/// supports by degree, so one endpoint is declared the support
/// (`p2_support_choice`) and the other the leaf.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexClassification {
    pub leaves: Vec<VertexId>,
    pub supports: Vec<VertexId>,
    pub strong_supports: Vec<VertexId>,
    pub strong_leaves: Vec<VertexId>,
    pub weak_leaves: Vec<VertexId>,
    pub semi_supports: Vec<VertexId>,
    pub nss: Vec<VertexId>,
    pub l_count: usize,
    pub s_count: usize,
    pub p2_support_choice: Option<VertexId>,
}

impl VertexClassification {
    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.leaves.binary_search(&v).is_ok()
    }

    pub fn is_support(&self, v: VertexId) -> bool {
        self.supports.binary_search(&v).is_ok()
    }

    pub fn is_strong_support(&self, v: VertexId) -> bool {
        self.strong_supports.binary_search(&v).is_ok()
    }

    pub fn is_strong_leaf(&self, v: VertexId) -> bool {
        self.strong_leaves.binary_search(&v).is_ok()
    }

    pub fn is_weak_leaf(&self, v: VertexId) -> bool {
        self.weak_leaves.binary_search(&v).is_ok()
    }

    pub fn is_semi_support(&self, v: VertexId) -> bool {
        self.semi_supports.binary_search(&v).is_ok()
    }

    pub fn is_nss(&self, v: VertexId) -> bool {
        self.nss.binary_search(&v).is_ok()
    }
}

/// Classifies with the default `P_2` convention: the lower id is the support.
pub fn classify(t: &Tree) -> Result<VertexClassification, GraphError> {
    classify_with(t, 0)
}

/// Classifies `t`; `p2_support` picks the support endpoint when `t` is `P_2`
/// and is ignored otherwise.
pub fn classify_with(t: &Tree, p2_support: VertexId) -> Result<VertexClassification, GraphError> {
    let n = t.order();
    if n < 2 {
        return Err(GraphError::Trivial(n));
    }
    if n == 2 {
        if p2_support > 1 {
            return Err(GraphError::VertexOutOfRange { vertex: p2_support, order: 2 });
        }
        let leaf = 1 - p2_support;
        return Ok(VertexClassification {
            leaves: vec![leaf],
            supports: vec![p2_support],
            strong_supports: Vec::new(),
            strong_leaves: Vec::new(),
            weak_leaves: vec![leaf],
            semi_supports: Vec::new(),
            nss: Vec::new(),
            l_count: 1,
            s_count: 1,
            p2_support_choice: Some(p2_support),
        });
    }

    let is_leaf: Vec<bool> = (0..n).map(|v| t.degree(v) == 1).collect();
    let leaf_neighbors: Vec<usize> = (0..n)
        .map(|v| t.neighbors(v).iter().filter(|&&w| is_leaf[w]).count())
        .collect();
    let is_support: Vec<bool> = leaf_neighbors.iter().map(|&c| c >= 1).collect();
    let is_strong: Vec<bool> = leaf_neighbors.iter().map(|&c| c >= 2).collect();
    let is_ss: Vec<bool> = (0..n)
        .map(|v| !is_leaf[v] && !is_support[v] && t.neighbors(v).iter().any(|&w| is_support[w]))
        .collect();
    let is_nss: Vec<bool> = (0..n)
        .map(|v| !is_ss[v] && !is_support[v] && t.neighbors(v).iter().any(|&w| is_ss[w]))
        .collect();

    let collect = |pred: &dyn Fn(VertexId) -> bool| (0..n).filter(|&v| pred(v)).collect::<Vec<_>>();
    let leaves = collect(&|v| is_leaf[v]);
    let strong_leaves = collect(&|v| is_leaf[v] && is_strong[t.neighbors(v)[0]]);
    let weak_leaves = collect(&|v| is_leaf[v] && !is_strong[t.neighbors(v)[0]]);
    let supports = collect(&|v| is_support[v]);
    Ok(VertexClassification {
        l_count: leaves.len(),
        s_count: supports.len(),
        leaves,
        supports,
        strong_supports: collect(&|v| is_strong[v]),
        strong_leaves,
        weak_leaves,
        semi_supports: collect(&|v| is_ss[v]),
        nss: collect(&|v| is_nss[v]),
        p2_support_choice: None,
    })
}
