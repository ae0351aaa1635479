use super::FamilyError;
use crate::graph::{Neighborhood, Tree, VertexId};

/// `Q_r`: a center joined to one end of each of `r` disjoint copies of `P_3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QGadget {
    pub tree: Tree,
    pub central: VertexId,
    pub r: usize,
}

/// Center is 0; branch `i` (1-based) is `3i-2, 3i-1, 3i` outward from it.
pub fn build_q(r: usize) -> Result<QGadget, FamilyError> {
    if r < 2 {
        return Err(FamilyError::BadRadius { kind: super::OpKind::O3, r: Some(r) });
    }
    let edges = (1..=r).flat_map(|i| [(0, 3 * i - 2), (3 * i - 2, 3 * i - 1), (3 * i - 1, 3 * i)]);
    let tree = Tree::from_edges(3 * r + 1, edges)?;
    Ok(QGadget { tree, central: 0, r })
}

/// If the branches hanging off `center` (ignoring `toward_root`) are exactly
/// `r >= 2` pendant paths of three vertices, returns them outward-ordered,
/// branches sorted by their first vertex.
pub(crate) fn q_branches<G: Neighborhood>(
    t: &G,
    center: VertexId,
    toward_root: Option<VertexId>,
) -> Option<Vec<[VertexId; 3]>> {
    let mut branches = Vec::new();
    for &a in t.neighbors(center) {
        if Some(a) == toward_root {
            continue;
        }
        let next = |from: VertexId, at: VertexId| -> Option<VertexId> {
            match t.neighbors(at) {
                [x, y] if *x == from => Some(*y),
                [x, y] if *y == from => Some(*x),
                _ => None,
            }
        };
        let b = next(center, a)?;
        let c = next(a, b)?;
        if t.degree(c) != 1 {
            return None;
        }
        branches.push([a, b, c]);
    }
    (branches.len() >= 2).then_some(branches)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::classify;

    #[test]
    fn q_anatomy() {
        for r in 2..=8 {
            let q = build_q(r).unwrap();
            assert_eq!(q.tree.order(), 3 * r + 1);
            assert_eq!(q.tree.degree(q.central), r);
            let c = classify(&q.tree).unwrap();
            assert_eq!(c.supports.len(), r);
            assert_eq!(c.semi_supports.len(), r);
            assert_eq!(c.l_count, r);
            assert_eq!(c.nss, vec![q.central]);
        }
    }

    #[test]
    fn q3_matches_figure() {
        let q = build_q(3).unwrap();
        let c = classify(&q.tree).unwrap();
        assert_eq!(c.semi_supports, vec![1, 4, 7]);
        assert_eq!(c.supports, vec![2, 5, 8]);
        assert_eq!(c.leaves, vec![3, 6, 9]);
    }

    #[test]
    fn rejects_small_r() {
        assert!(build_q(1).is_err());
        assert!(build_q(0).is_err());
    }

    #[test]
    fn branch_detection() {
        let q = build_q(2).unwrap();
        assert_eq!(q_branches(&q.tree, 0, None), Some(vec![[1, 2, 3], [4, 5, 6]]));
        // from a branch vertex, the shape is not a Q
        assert_eq!(q_branches(&q.tree, 1, Some(2)), None);
        assert_eq!(q_branches(&Tree::path(5), 0, None), None);
    }
}
