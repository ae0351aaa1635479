// graph6 round trips and the byte offsets reported for bad input.

use std::error::Error;

use toid::graph::{edgelist, graph6, ParseError, Tree};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let t = Tree::path(5);
    let code = graph6::encode(&t);
    let back = Tree::try_from(graph6::decode(&code)?)?;
    assert_eq!(back, t);
    println!("P_5 = {code}");
    print!("{}", edgelist::write(&back));

    for bad in ["DQ", "DQcc", "D Q", "AB"] {
        match graph6::decode(bad) {
            Err(ParseError::Graph6 { offset, message }) => println!("{bad:?}: byte {offset}: {message}"),
            other => return Err(format!("{bad:?} decoded unexpectedly: {other:?}").into()),
        }
    }

    let big = Tree::path(300);
    assert_eq!(Tree::try_from(graph6::decode(&graph6::encode(&big))?)?, big);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
