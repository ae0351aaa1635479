use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{apply_step, Family, FamilyError, OpKind, OperationScript, OperationStep};
use crate::graph::{classify, Tree};

/// An operation whose site is left to the generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRequest {
    pub kind: OpKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
}

impl StepRequest {
    pub fn new(kind: OpKind) -> Self {
        StepRequest { kind, r: None }
    }
}

/// Replays an explicit script. Mixing F and O steps is a class error on the
/// first step of the minority family.
pub fn generate(script: &OperationScript) -> Result<Tree, FamilyError> {
    if let Some(first) = script.steps.first() {
        let family = first.kind.family();
        if let Some(bad) = script.steps.iter().find(|s| s.kind.family() != family) {
            return Err(FamilyError::ClassViolation {
                kind: bad.kind,
                site: bad.site,
                required: bad.kind.site_class(),
            });
        }
    }
    script.replay()
}

/// Applies each request at a site drawn uniformly from its legal class.
pub fn generate_random(
    requests: &[StepRequest],
    seed: u64,
) -> Result<(Tree, OperationScript), FamilyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tree::path(2);
    let mut steps = Vec::with_capacity(requests.len());
    for req in requests {
        let step = draw_step(&t, req.kind, req.r, &mut rng)?;
        t = apply_step(&t, &step)?;
        steps.push(step);
    }
    Ok((t, OperationScript::new(0, steps)))
}

/// Grows a random member of `family` until it has at least `min_order`
/// vertices. Operation kinds are uniform; O3 uses `r` in `2..=4`.
pub fn random_member(
    family: Family,
    min_order: usize,
    seed: u64,
) -> Result<(Tree, OperationScript), FamilyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tree::path(2);
    let mut steps = Vec::new();
    while t.order() < min_order {
        let kind = *family.kinds().choose(&mut rng).expect("three kinds");
        let r = (kind == OpKind::O3).then(|| rng.gen_range(2..=4));
        let step = match draw_step(&t, kind, r, &mut rng) {
            Ok(step) => step,
            // F3 and O3 need weak leaves, which can run out
            Err(FamilyError::EmptyClass { .. }) => continue,
            Err(e) => return Err(e),
        };
        t = match apply_step(&t, &step) {
            Ok(grown) => grown,
            Err(FamilyError::F3OnP2) => continue,
            Err(e) => return Err(e),
        };
        steps.push(step);
    }
    Ok((t, OperationScript::new(0, steps)))
}

fn draw_step(
    t: &Tree,
    kind: OpKind,
    r: Option<usize>,
    rng: &mut ChaCha8Rng,
) -> Result<OperationStep, FamilyError> {
    let class = kind.site_class();
    let sites = class.members(&classify(t)?);
    let site = *sites.choose(rng).ok_or(FamilyError::EmptyClass { kind, class })?;
    Ok(OperationStep { kind, site, r })
}
