//! The two constructive tree families: `F` (trees attaining the lower bound)
//! and `T` (trees attaining the upper bound), both grown from `P_2`.
//!
//! | op | attaches                       | site class           |
//! |----|--------------------------------|----------------------|
//! | F1 | a pendant vertex               | supports             |
//! | F2 | a pendant `P_2`                | supports ∪ semi-supp |
//! | F3 | a pendant `P_3`                | weak leaves          |
//! | O1 | a pendant vertex               | supports             |
//! | O2 | a pendant `P_3`                | supports ∪ weak lvs  |
//! | O3 | `Q_r`, center on the site      | weak leaves          |

mod gadget;
mod generate;
mod lemma3;
mod recognize;
mod script;

pub use gadget::{build_q, QGadget};
pub use generate::{generate, generate_random, random_member, StepRequest};
pub use lemma3::lemma3_check;
pub use recognize::{recognize_arith, recognize_structural, verify_trace, ReductionTrace};
pub use script::OperationScript;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{classify_with, GraphError, Tree, VertexClassification, VertexId};
use crate::solver::SolveError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OpKind {
    F1,
    F2,
    F3,
    O1,
    O2,
    O3,
}

impl OpKind {
    pub const LOWER: [OpKind; 3] = [OpKind::F1, OpKind::F2, OpKind::F3];
    pub const UPPER: [OpKind; 3] = [OpKind::O1, OpKind::O2, OpKind::O3];

    pub fn family(self) -> Family {
        match self {
            OpKind::F1 | OpKind::F2 | OpKind::F3 => Family::Lower,
            OpKind::O1 | OpKind::O2 | OpKind::O3 => Family::Upper,
        }
    }

    pub fn site_class(self) -> SiteClass {
        match self {
            OpKind::F1 | OpKind::O1 => SiteClass::Support,
            OpKind::F2 => SiteClass::SupportOrSemiSupport,
            OpKind::F3 | OpKind::O3 => SiteClass::WeakLeaf,
            OpKind::O2 => SiteClass::SupportOrWeakLeaf,
        }
    }

    /// Vertices added by one application (`r` only matters for O3).
    pub fn added_vertices(self, r: usize) -> usize {
        match self {
            OpKind::F1 | OpKind::O1 => 1,
            OpKind::F2 => 2,
            OpKind::F3 | OpKind::O2 => 3,
            OpKind::O3 => 3 * r,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Lower,
    Upper,
}

impl Family {
    pub fn kinds(self) -> [OpKind; 3] {
        match self {
            Family::Lower => OpKind::LOWER,
            Family::Upper => OpKind::UPPER,
        }
    }
}

/// Where an operation may be applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SiteClass {
    Support,
    SupportOrSemiSupport,
    WeakLeaf,
    SupportOrWeakLeaf,
}

impl SiteClass {
    pub fn contains(self, c: &VertexClassification, v: VertexId) -> bool {
        match self {
            SiteClass::Support => c.is_support(v),
            SiteClass::SupportOrSemiSupport => c.is_support(v) || c.is_semi_support(v),
            SiteClass::WeakLeaf => c.is_weak_leaf(v),
            SiteClass::SupportOrWeakLeaf => c.is_support(v) || c.is_weak_leaf(v),
        }
    }

    pub fn members(self, c: &VertexClassification) -> Vec<VertexId> {
        let merge = |a: &[VertexId], b: &[VertexId]| {
            let mut v = [a, b].concat();
            v.sort_unstable();
            v.dedup();
            v
        };
        match self {
            SiteClass::Support => c.supports.clone(),
            SiteClass::SupportOrSemiSupport => merge(&c.supports, &c.semi_supports),
            SiteClass::WeakLeaf => c.weak_leaves.clone(),
            SiteClass::SupportOrWeakLeaf => merge(&c.supports, &c.weak_leaves),
        }
    }
}

impl std::fmt::Display for SiteClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SiteClass::Support => "S",
            SiteClass::SupportOrSemiSupport => "S ∪ SS",
            SiteClass::WeakLeaf => "L_w",
            SiteClass::SupportOrWeakLeaf => "S ∪ L_w",
        })
    }
}

/// One construction step: operation `kind` at `site` of the current tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperationStep {
    pub kind: OpKind,
    pub site: VertexId,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
}

impl OperationStep {
    pub fn new(kind: OpKind, site: VertexId) -> Self {
        OperationStep { kind, site, r: None }
    }

    pub fn q(site: VertexId, r: usize) -> Self {
        OperationStep { kind: OpKind::O3, site, r: Some(r) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{kind:?} needs a site in {required}, vertex {site} is not")]
    ClassViolation { kind: OpKind, site: VertexId, required: SiteClass },
    #[error("{kind:?} has no legal site ({class} is empty)")]
    EmptyClass { kind: OpKind, class: SiteClass },
    #[error("O3 needs r >= 2 and other operations take no r; got {kind:?} with r = {r:?}")]
    BadRadius { kind: OpKind, r: Option<usize> },
    #[error("F3 is not applied to P_2: the result P_5 misses the lower bound")]
    F3OnP2,
    #[error("script base support must be vertex 0 or 1, got {0}")]
    BadBase(VertexId),
    #[error("lemma precondition: P_5 is excluded")]
    ExcludedP5,
    #[error("lemma precondition: tree has strong leaves")]
    StrongLeaves,
    #[error("lemma precondition: tree does not attain the upper bound")]
    NotUpperExtremal,
    #[error("invalid script JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// Applies `step` with the default `P_2` convention (vertex 0 is the support).
pub fn apply_step(t: &Tree, step: &OperationStep) -> Result<Tree, FamilyError> {
    apply_step_with(t, step, 0)
}

/// Applies `step`; `p2_support` selects the support endpoint when `t` is `P_2`.
///
/// New vertices get the next free ids, in path order starting next to the
/// site. For O3 the `Q_r` center is the site itself and the `r` branches are
/// appended one after another. F3 is refused on `P_2`.
pub fn apply_step_with(t: &Tree, step: &OperationStep, p2_support: VertexId) -> Result<Tree, FamilyError> {
    let r = match (step.kind, step.r) {
        (OpKind::O3, Some(r)) if r >= 2 => r,
        (OpKind::O3, _) | (_, Some(_)) => {
            return Err(FamilyError::BadRadius { kind: step.kind, r: step.r })
        }
        (_, None) => 1,
    };
    if step.site >= t.order() {
        return Err(GraphError::VertexOutOfRange { vertex: step.site, order: t.order() }.into());
    }
    if step.kind == OpKind::F3 && t.order() == 2 {
        return Err(FamilyError::F3OnP2);
    }
    let c = classify_with(t, p2_support)?;
    let required = step.kind.site_class();
    if !required.contains(&c, step.site) {
        return Err(FamilyError::ClassViolation { kind: step.kind, site: step.site, required });
    }

    let mut out = t.clone();
    let path_len = match step.kind {
        OpKind::F1 | OpKind::O1 => 1,
        OpKind::F2 => 2,
        OpKind::F3 | OpKind::O2 | OpKind::O3 => 3,
    };
    for _ in 0..r {
        let mut prev = step.site;
        for _ in 0..path_len {
            prev = out.push_leaf(prev);
        }
    }
    Ok(out)
}
