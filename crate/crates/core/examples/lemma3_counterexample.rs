// An upper-extremal tree without strong leaves whose semi-supports each see
// two supports.

use std::error::Error;

use toid::families::{lemma3_check, FamilyError};
use toid::graph::{classify, Neighborhood, Tree};
use toid::solver::{bounds, gamma_brute};
use toid::graph::subdivide;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let t = Tree::from_edges(8, [(0, 1), (0, 4), (0, 7), (1, 2), (2, 3), (4, 5), (5, 6)])?;
    let b = bounds(&t)?;
    assert_eq!(gamma_brute(&subdivide(&t)?.graph, &[])?.value, b.gamma);
    assert!(b.attains_upper);
    let c = classify(&t)?;
    assert!(c.strong_leaves.is_empty());
    for &v in &c.semi_supports {
        let seen: Vec<usize> = t.neighbors(v).iter().copied().filter(|&w| c.is_support(w)).collect();
        println!("semi-support {v}: support neighbors {seen:?}");
    }
    assert_eq!(lemma3_check(&t), Ok(false));
    assert_eq!(lemma3_check(&Tree::path(5)), Err(FamilyError::ExcludedP5));
    assert_eq!(lemma3_check(&Tree::path(8)), Ok(true));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
