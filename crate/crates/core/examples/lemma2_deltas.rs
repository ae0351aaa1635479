// Each operation shifts gamma(S(T)) by a fixed amount, whatever the host.

use std::error::Error;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toid::enumerate::expected_delta;
use toid::families::{apply_step, OpKind, OperationStep};
use toid::graph::{classify, Tree};
use toid::solver::gamma_subdivision;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let host = Tree::random(20, &mut rng);
    let gamma = gamma_subdivision(&host)?;
    let c = classify(&host)?;
    for (kind, r) in [(OpKind::F1, 1), (OpKind::F2, 1), (OpKind::F3, 1), (OpKind::O2, 1), (OpKind::O3, 3)] {
        let Some(&site) = kind.site_class().members(&c).first() else {
            println!("{kind:?}: no legal site on this host");
            continue;
        };
        let step = OperationStep { kind, site, r: (kind == OpKind::O3).then_some(r) };
        let delta = gamma_subdivision(&apply_step(&host, &step)?)? - gamma;
        assert_eq!(delta, expected_delta(kind, r));
        println!("{kind:?} at {site}: +{delta}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
