// Free-tree counts and the trees attaining each bound.

use std::error::Error;

use toid::enumerate::{enumerate_free_trees, find_members, Attainment};
use toid::graph::graph6;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let counts: Vec<usize> = (1..=12).map(|n| enumerate_free_trees(n).map(Iterator::count)).collect::<Result<_, _>>()?;
    assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]);
    println!("free trees, n = 1..12: {counts:?}");

    for n in 2..=7 {
        let lower = find_members(n, Attainment::Lower)?;
        let upper = find_members(n, Attainment::Upper)?;
        let codes = |ts: &[toid::Tree]| ts.iter().map(graph6::encode).collect::<Vec<_>>().join(" ");
        println!("n = {n}: lower [{}] upper [{}]", codes(&lower), codes(&upper));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
