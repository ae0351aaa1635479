use super::{check_ids, sorted_set, Method, SolveError, ToidSolution};
use crate::graph::{Neighborhood, VertexId};

/// Default order limit for the exhaustive search.
pub const BRUTE_FORCE_CAP: usize = 24;

/// Minimum TOIDS containing `forced`, by exhaustive search.
///
/// Candidate sets are tried by increasing size, and within a size in
/// lexicographic order, so the witness is the lexicographically least
/// minimum set.
pub fn gamma_brute<G: Neighborhood>(g: &G, forced: &[VertexId]) -> Result<ToidSolution, SolveError> {
    gamma_brute_capped(g, forced, BRUTE_FORCE_CAP)
}

pub fn gamma_brute_capped<G: Neighborhood>(
    g: &G,
    forced: &[VertexId],
    cap: usize,
) -> Result<ToidSolution, SolveError> {
    let n = g.order();
    if n > cap.min(63) {
        return Err(SolveError::CapExceeded { order: n, cap: cap.min(63) });
    }
    check_ids(n, forced)?;
    let forced = sorted_set(forced);

    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let forced_mask = forced.iter().fold(0u64, |m, &v| m | 1 << v);
    let search = Search { n, adj: &adj, forced: forced_mask };

    for k in forced.len()..=n {
        if let Some(mask) = search.first_of_size(k) {
            let witness: Vec<VertexId> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            return Ok(ToidSolution { value: k, witness, method: Method::BruteForce, forced });
        }
    }
    Err(SolveError::Infeasible)
}

struct Search<'a> {
    n: usize,
    adj: &'a [u64],
    forced: u64,
}

impl Search<'_> {
    fn first_of_size(&self, k: usize) -> Option<u64> {
        self.descend(0, 0, 0, k)
    }

    /// Decides vertices `i..n`. `chosen` holds the selected vertices so far,
    /// `required` the vertices that must be selected because a neighbor was
    /// left out (the complement has to stay independent).
    fn descend(&self, i: usize, chosen: u64, required: u64, k: usize) -> Option<u64> {
        let count = chosen.count_ones() as usize;
        let pending = (required & !chosen).count_ones() as usize;
        if count + pending > k {
            return None;
        }
        if i == self.n {
            return (count == k && self.dominates(chosen)).then_some(chosen);
        }
        let bit = 1u64 << i;
        if count < k {
            if let Some(found) = self.descend(i + 1, chosen | bit, required, k) {
                return Some(found);
            }
        }
        let below = bit - 1;
        let excludable = (self.forced | required) & bit == 0
            // every earlier neighbor of an excluded vertex must be selected
            && self.adj[i] & below & !chosen == 0
            && self.n - (i + 1) >= k - count;
        if excludable {
            return self.descend(i + 1, chosen, required | self.adj[i], k);
        }
        None
    }

    fn dominates(&self, chosen: u64) -> bool {
        self.adj.iter().all(|&nbrs| nbrs & chosen != 0)
    }
}
