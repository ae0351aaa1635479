use serde::Serialize;

use super::{Neighborhood, Tree, VertexId};

/// Isomorphism-class key of a free tree: the canonical level sequence of the
/// tree rooted at its centroid (the larger of the two rootings when the tree
/// has two centroids).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalForm(pub Vec<u32>);

/// Level sequence of `t` rooted at `root`, with sibling subtrees ordered by
/// non-increasing level sequence. Root has level 0 and vertices are listed in
/// preorder.
pub fn rooted_level_sequence(t: &Tree, root: VertexId) -> Vec<u32> {
    let n = t.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &w in t.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    let mut seqs: Vec<Vec<u32>> = vec![Vec::new(); n];
    for &u in order.iter().rev() {
        let mut kids: Vec<Vec<u32>> = t
            .neighbors(u)
            .iter()
            .filter(|&&w| parent[w] == u && w != root)
            .map(|&w| std::mem::take(&mut seqs[w]))
            .collect();
        kids.sort_unstable_by(|a, b| b.cmp(a));
        let mut seq = Vec::with_capacity(1 + kids.iter().map(Vec::len).sum::<usize>());
        seq.push(0);
        for k in kids {
            seq.extend(k.into_iter().map(|l| l + 1));
        }
        seqs[u] = seq;
    }
    std::mem::take(&mut seqs[root])
}

/// The one or two vertices minimizing the largest component left after
/// their removal.
pub fn centroids(t: &Tree) -> Vec<VertexId> {
    let n = t.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &w in t.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    let mut size = vec![1usize; n];
    let mut heaviest = vec![0usize; n];
    for &u in order.iter().rev() {
        if u != 0 {
            let p = parent[u];
            size[p] += size[u];
            heaviest[p] = heaviest[p].max(size[u]);
        }
    }
    (0..n).filter(|&v| heaviest[v].max(n - size[v]) * 2 <= n).collect()
}

pub fn canonical_form(t: &Tree) -> CanonicalForm {
    let best = centroids(t)
        .into_iter()
        .map(|c| rooted_level_sequence(t, c))
        .max()
        .expect("every tree has a centroid");
    CanonicalForm(best)
}

pub fn is_isomorphic(a: &Tree, b: &Tree) -> bool {
    a.order() == b.order() && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_sequences_are_canonical() {
        // 0-1, 0-2, 2-3: rooted at 0 the deeper branch comes first
        let t = Tree::from_edges(4, [(0, 1), (0, 2), (2, 3)]).unwrap();
        assert_eq!(rooted_level_sequence(&t, 0), vec![0, 1, 2, 1]);
    }

    #[test]
    fn centroid_examples() {
        assert_eq!(centroids(&Tree::path(5)), vec![2]);
        assert_eq!(centroids(&Tree::path(4)), vec![1, 2]);
        assert_eq!(centroids(&Tree::star(4)), vec![0]);
        assert_eq!(centroids(&Tree::trivial()), vec![0]);
    }

    #[test]
    fn isomorphism_ignores_labelling() {
        let a = Tree::from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let b = Tree::from_edges(5, [(4, 3), (3, 0), (0, 2), (3, 1)]).unwrap();
        assert!(is_isomorphic(&a, &b));
        assert!(!is_isomorphic(&a, &Tree::path(5)));
        assert!(!is_isomorphic(&Tree::path(4), &Tree::star(3)));
    }
}
