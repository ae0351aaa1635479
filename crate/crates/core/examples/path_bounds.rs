// Bound table for paths: which of P_2..P_9 attain the lower or upper bound.

use std::error::Error;

use toid::graph::{subdivide, Tree};
use toid::solver::{bounds, gamma_tree_dp};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!(" n  S(P_n)  gamma  lower  3g  upper");
    let mut gammas = Vec::new();
    for n in 2..=9 {
        let t = Tree::path(n);
        let s = subdivide(&t)?;
        let b = bounds(&t)?;
        assert_eq!(gamma_tree_dp(&s.graph)?.value, b.gamma);
        assert!(b.sandwich_holds());
        println!(
            "{n:>2}  {:>6}  {:>5}  {:>5}  {:>2}  {:>5} {}{}",
            s.graph.order(),
            b.gamma,
            b.lower_num,
            3 * b.gamma,
            b.upper_num,
            if b.attains_lower { "L" } else { "" },
            if b.attains_upper { "U" } else { "" },
        );
        gammas.push(b.gamma);
    }
    assert_eq!(gammas, vec![2, 3, 4, 6, 7, 8, 10, 11]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
