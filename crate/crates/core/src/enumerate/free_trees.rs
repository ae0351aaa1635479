use thiserror::Error;

use crate::graph::{canonical_form, Tree, VertexId};

pub const MAX_ENUM_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("free-tree enumeration supports 1 <= n <= {MAX_ENUM_ORDER}, got {0}")]
    OrderOutOfRange(usize),
}

/// Every unlabeled free tree on `n` vertices exactly once.
///
/// Rooted level sequences are generated in decreasing lexicographic order
/// (Beyer-Hedetniemi); a sequence is kept when it is already the canonical
/// form of its tree, i.e. it is rooted at the centroid and, with two
/// centroids, is the larger of the two rootings.
#[derive(Debug, Clone)]
pub struct FreeTrees {
    levels: Option<Vec<u32>>,
}

impl FreeTrees {
    pub fn new(n: usize) -> Result<Self, EnumerateError> {
        if !(1..=MAX_ENUM_ORDER).contains(&n) {
            return Err(EnumerateError::OrderOutOfRange(n));
        }
        Ok(FreeTrees { levels: Some((0..n as u32).collect()) })
    }
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        loop {
            let levels = self.levels.take()?;
            self.levels = successor(&levels);
            let t = tree_from_levels(&levels);
            if canonical_form(&t).0 == levels {
                return Some(t);
            }
        }
    }
}

pub fn enumerate_free_trees(n: usize) -> Result<FreeTrees, EnumerateError> {
    FreeTrees::new(n)
}

fn successor(levels: &[u32]) -> Option<Vec<u32>> {
    let p = levels.iter().rposition(|&l| l > 1)?;
    let q = levels[..p].iter().rposition(|&l| l == levels[p] - 1).expect("a parent level exists");
    let mut next = levels.to_vec();
    for i in p..next.len() {
        next[i] = next[i - (p - q)];
    }
    Some(next)
}

/// Vertex `i` is the `i`-th entry; its parent is the last earlier vertex one
/// level up.
pub(crate) fn tree_from_levels(levels: &[u32]) -> Tree {
    let n = levels.len();
    let mut adjacency: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    let mut last_at: Vec<VertexId> = Vec::new();
    for (i, &l) in levels.iter().enumerate() {
        let l = l as usize;
        if l > 0 {
            let parent = last_at[l - 1];
            adjacency[parent].push(i);
            adjacency[i].push(parent);
        }
        last_at.truncate(l);
        last_at.push(i);
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    Tree::from_adjacency_unchecked(adjacency)
}
