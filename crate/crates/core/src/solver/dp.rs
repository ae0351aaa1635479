use super::{check_ids, sorted_set, Method, SolveError, ToidSolution};
use crate::graph::{GraphError, RootedView, Tree, VertexId};

const INF: u32 = u32::MAX / 4;

/// Per-vertex table indexed by `[in_set][dominated]`, where `dominated`
/// records whether some already merged child is in the set.
type Table = [[u32; 2]; 2];

/// Minimum TOIDS of a tree in linear time.
pub fn gamma_tree_dp(t: &Tree) -> Result<ToidSolution, SolveError> {
    gamma_tree_dp_forced(t, &[])
}

/// Minimum TOIDS of a tree among those containing `forced`.
///
/// Rooted at vertex 0. A child is merged into its parent only if at least one
/// of the two is selected, and a child that is still undominated must have
/// a selected parent. The root must end dominated.
pub fn gamma_tree_dp_forced(t: &Tree, forced: &[VertexId]) -> Result<ToidSolution, SolveError> {
    let n = t.order();
    if n < 2 {
        return Err(GraphError::Trivial(n).into());
    }
    check_ids(n, forced)?;
    let forced = sorted_set(forced);
    let mut must = vec![false; n];
    for &v in &forced {
        must[v] = true;
    }

    let rv = RootedView::new(t, 0)?;
    let mut table: Vec<Table> = vec![[[INF; 2]; 2]; n];
    // back[c][in_parent][dom_parent_after] = (dom_parent_before, in_child, dom_child)
    let mut back: Vec<[[u8; 2]; 2]> = vec![[[0; 2]; 2]; n];

    for &v in rv.order.iter().rev() {
        let mut cur: Table = [[0, INF], [1, INF]];
        if must[v] {
            cur[0] = [INF, INF];
        }
        for c in rv.children(t, v) {
            let child = table[c];
            let mut next: Table = [[INF; 2]; 2];
            for iv in 0..2 {
                for dv in 0..2 {
                    if cur[iv][dv] >= INF {
                        continue;
                    }
                    for ic in 0..2 {
                        for dc in 0..2 {
                            let feasible = child[ic][dc] < INF
                                && (iv == 1 || ic == 1)
                                && (iv == 1 || dc == 1);
                            if !feasible {
                                continue;
                            }
                            let nd = dv | ic;
                            let cost = cur[iv][dv] + child[ic][dc];
                            if cost < next[iv][nd] {
                                next[iv][nd] = cost;
                                back[c][iv][nd] = (dv << 2 | ic << 1 | dc) as u8;
                            }
                        }
                    }
                }
            }
            cur = next;
        }
        table[v] = cur;
    }

    let root = table[0];
    let root_in = if root[0][1] <= root[1][1] { 0 } else { 1 };
    let value = root[root_in][1];
    if value >= INF {
        return Err(SolveError::Infeasible);
    }

    let mut state = vec![(0usize, 0usize); n];
    state[0] = (root_in, 1);
    let mut witness = Vec::with_capacity(value as usize);
    for &v in &rv.order {
        let (iv, mut dv) = state[v];
        if iv == 1 {
            witness.push(v);
        }
        let children: Vec<VertexId> = rv.children(t, v).collect();
        for &c in children.iter().rev() {
            let code = back[c][iv][dv] as usize;
            state[c] = (code >> 1 & 1, code & 1);
            dv = code >> 2;
        }
    }
    witness.sort_unstable();
    debug_assert_eq!(witness.len(), value as usize);
    Ok(ToidSolution { value: value as usize, witness, method: Method::TreeDp, forced })
}
