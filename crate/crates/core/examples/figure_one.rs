// The seven-vertex running example: gamma of T and of S(T), its bounds and
// class table.

use std::error::Error;

use toid::graph::{classify, edgelist};
use toid::solver::{bounds, gamma_brute, gamma_tree_dp};

const FIGURE_ONE: &str = "\
v1 v2
v2 v3
v2 v4
v4 v5
v5 v6
v5 v7
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let t = edgelist::parse_tree(FIGURE_ONE)?;

    let dp = gamma_tree_dp(&t)?;
    let brute = gamma_brute(&t, &[])?;
    assert_eq!(dp.value, 3);
    assert_eq!(brute.value, dp.value);
    let witness: Vec<String> = dp.witness.iter().map(|&v| t.display(v)).collect();
    println!("gamma(T) = {} via {}", dp.value, witness.join(" "));

    let b = bounds(&t)?;
    assert_eq!(b.gamma, 8);
    assert!(b.attains_upper && !b.attains_lower);
    println!(
        "gamma(S(T)) = {}: {} <= {} <= {}",
        b.gamma,
        b.lower_num,
        3 * b.gamma,
        b.upper_num
    );

    let c = classify(&t)?;
    let show = |vs: &[usize]| vs.iter().map(|&v| t.display(v)).collect::<Vec<_>>().join(" ");
    println!("supports {} | semi-supports {} | strong leaves {}", show(&c.supports), show(&c.semi_supports), show(&c.strong_leaves));
    assert_eq!(show(&c.semi_supports), "v4");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
