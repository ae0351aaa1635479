use serde::Serialize;

use super::{gamma_tree_dp, SolveError};
use crate::graph::{classify, subdivide, Tree};

/// Lower and upper bounds on `γ_t^oi(S(T))` as integer numerators over 3,
/// next to the exact value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub l: usize,
    pub s: usize,
    /// `4n - l - s`
    pub lower_num: usize,
    /// `4n - l + s - 2`
    pub upper_num: usize,
    pub gamma: usize,
    pub attains_lower: bool,
    pub attains_upper: bool,
}

impl BoundReport {
    pub fn sandwich_holds(&self) -> bool {
        self.lower_num <= 3 * self.gamma && 3 * self.gamma <= self.upper_num
    }
}

pub fn gamma_subdivision(t: &Tree) -> Result<usize, SolveError> {
    Ok(gamma_tree_dp(&subdivide(t)?.graph)?.value)
}

pub fn bounds(t: &Tree) -> Result<BoundReport, SolveError> {
    let c = classify(t)?;
    let gamma = gamma_subdivision(t)?;
    let (n, l, s) = (t.order(), c.l_count, c.s_count);
    let lower_num = 4 * n - l - s;
    let upper_num = 4 * n + s - l - 2;
    Ok(BoundReport {
        n,
        l,
        s,
        lower_num,
        upper_num,
        gamma,
        attains_lower: 3 * gamma == lower_num,
        attains_upper: 3 * gamma == upper_num,
    })
}
