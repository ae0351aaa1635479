use serde::{Deserialize, Serialize};

use super::{apply_step, apply_step_with, Family, FamilyError, OperationStep};
use crate::graph::Tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
enum Base {
    P2,
}

/// A construction from `P_2` (vertices 0 and 1): the base marker, which base
/// vertex plays the support, and the steps in construction order.
///
/// Serialized as
/// `{"base":"P2","base_support":0,"steps":[{"kind":"O2","site":1}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperationScript {
    base: Base,
    pub base_support: usize,
    pub steps: Vec<OperationStep>,
}

impl Default for OperationScript {
    fn default() -> Self {
        OperationScript { base: Base::P2, base_support: 0, steps: Vec::new() }
    }
}

impl OperationScript {
    pub fn new(base_support: usize, steps: Vec<OperationStep>) -> Self {
        OperationScript { base: Base::P2, base_support, steps }
    }

    /// The family every step belongs to; `None` for a mixed script. An empty
    /// script (just `P_2`) reports `None` as it lies in both.
    pub fn family(&self) -> Option<Family> {
        let first = self.steps.first()?.kind.family();
        self.steps.iter().all(|s| s.kind.family() == first).then_some(first)
    }

    /// Rebuilds the tree step by step, checking each site against the class
    /// the operation demands at that stage.
    pub fn replay(&self) -> Result<Tree, FamilyError> {
        if self.base_support > 1 {
            return Err(FamilyError::BadBase(self.base_support));
        }
        let mut t = Tree::path(2);
        for step in &self.steps {
            t = if t.order() == 2 {
                apply_step_with(&t, step, self.base_support)?
            } else {
                apply_step(&t, step)?
            };
        }
        Ok(t)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("script serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, FamilyError> {
        serde_json::from_str(text).map_err(|e| FamilyError::Json(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::OpKind;
    use proptest::prelude::*;

    #[test]
    fn json_shape() {
        let s = OperationScript::new(
            0,
            vec![OperationStep::new(OpKind::O2, 1), OperationStep::q(4, 3)],
        );
        let json = s.to_json();
        assert_eq!(
            json,
            r#"{"base":"P2","base_support":0,"steps":[{"kind":"O2","site":1},{"kind":"O3","site":4,"r":3}]}"#
        );
        assert_eq!(OperationScript::from_json(&json).unwrap(), s);
        assert!(OperationScript::from_json(r#"{"base":"P3","base_support":0,"steps":[]}"#).is_err());
    }

    #[test]
    fn empty_script_is_p2() {
        assert_eq!(OperationScript::default().replay().unwrap(), Tree::path(2));
        assert_eq!(OperationScript::default().family(), None);
    }

    #[test]
    fn bad_base_is_rejected() {
        assert_eq!(OperationScript::new(2, vec![]).replay(), Err(FamilyError::BadBase(2)));
    }

    fn arb_step() -> impl Strategy<Value = OperationStep> {
        (0usize..6, 0usize..50, 2usize..6).prop_map(|(k, site, r)| {
            let kind = [OpKind::F1, OpKind::F2, OpKind::F3, OpKind::O1, OpKind::O2, OpKind::O3][k];
            OperationStep { kind, site, r: (kind == OpKind::O3).then_some(r) }
        })
    }

    proptest! {
        #[test]
        fn json_round_trips_bit_exactly(support in 0usize..2, steps in prop::collection::vec(arb_step(), 0..12)) {
            let s = OperationScript::new(support, steps);
            let json = s.to_json();
            let back = OperationScript::from_json(&json).unwrap();
            prop_assert_eq!(&back, &s);
            prop_assert_eq!(back.to_json(), json);
        }
    }
}
