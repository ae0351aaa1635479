// Structural recognition with replayable certificates, checked against the
// bound equality.

use std::error::Error;

use toid::families::{recognize_arith, recognize_structural, verify_trace, Family};
use toid::graph::{edgelist, is_isomorphic, Tree};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let figure = edgelist::parse_tree("0 1\n1 2\n1 3\n3 4\n4 5\n4 6\n")?;
    let cases = [
        ("figure one", figure, Family::Upper),
        ("P_4", Tree::path(4), Family::Lower),
        ("P_5", Tree::path(5), Family::Upper),
        ("P_5", Tree::path(5), Family::Lower),
        ("P_6", Tree::path(6), Family::Upper),
    ];
    for (name, t, family) in cases {
        let trace = recognize_structural(&t, family)?;
        assert_eq!(trace.accepted, recognize_arith(&t, family)?);
        if trace.accepted {
            assert!(verify_trace(&t, &trace)?);
            assert!(is_isomorphic(&trace.script.replay()?, &t));
            println!("{name} in {family:?}: {}", trace.script.to_json());
        } else {
            println!("{name} not in {family:?}: {}", trace.rejection.unwrap_or_default());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
