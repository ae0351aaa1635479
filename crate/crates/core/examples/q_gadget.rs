// The Q_r gadget and what identifying it onto a weak leaf does to gamma.

use std::error::Error;

use toid::families::{apply_step, build_q, OperationStep};
use toid::graph::{classify, Tree};
use toid::solver::gamma_subdivision;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for r in 2..=5 {
        let q = build_q(r)?;
        let c = classify(&q.tree)?;
        assert_eq!(c.nss, vec![q.central]);
        println!("Q_{r}: n = {}, supports {:?}, semi-supports {:?}", q.tree.order(), c.supports, c.semi_supports);
    }

    let p2 = Tree::path(2);
    let base = gamma_subdivision(&p2)?;
    for r in 2..=4 {
        let grown = apply_step(&p2, &OperationStep::q(1, r))?;
        let delta = gamma_subdivision(&grown)? - base;
        assert_eq!(delta, 4 * r);
        println!("P_2 + Q_{r}: gamma(S) rises by {delta}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
