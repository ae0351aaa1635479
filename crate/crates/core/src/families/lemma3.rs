use super::{recognize_arith, Family, FamilyError};
use crate::graph::{classify, is_isomorphic, Neighborhood, Tree};

/// For an upper-extremal tree without strong leaves, other than `P_5`: does
/// every semi-support have exactly one support neighbor?
///
/// Preconditions are checked in the order P_5, strong leaves, extremality.
pub fn lemma3_check(t: &Tree) -> Result<bool, FamilyError> {
    if t.order() == 5 && is_isomorphic(t, &Tree::path(5)) {
        return Err(FamilyError::ExcludedP5);
    }
    let c = classify(t)?;
    if !c.strong_leaves.is_empty() {
        return Err(FamilyError::StrongLeaves);
    }
    if !recognize_arith(t, Family::Upper)? {
        return Err(FamilyError::NotUpperExtremal);
    }
    Ok(c.semi_supports
        .iter()
        .all(|&v| t.neighbors(v).iter().filter(|&&w| c.is_support(w)).count() == 1))
}
