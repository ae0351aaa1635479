// Growing family members from P_2, explicitly and at random.

use std::error::Error;

use toid::families::{generate, random_member, recognize_arith, Family, OpKind, OperationScript, OperationStep};
use toid::graph::{is_isomorphic, Tree};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // two pendant vertices on the support of P_2
    let claw = OperationScript::new(0, vec![OperationStep::new(OpKind::F1, 0), OperationStep::new(OpKind::F1, 0)]);
    assert!(is_isomorphic(&generate(&claw)?, &Tree::star(3)));

    let json = r#"{"base":"P2","base_support":0,"steps":[{"kind":"O2","site":1},{"kind":"O3","site":4,"r":3}]}"#;
    let script = OperationScript::from_json(json)?;
    assert_eq!(script.to_json(), json);
    let t = generate(&script)?;
    println!("O2 then Q_3: {} vertices, upper member: {}", t.order(), recognize_arith(&t, Family::Upper)?);

    for family in [Family::Lower, Family::Upper] {
        for seed in 0..3 {
            let (t, script) = random_member(family, 15, seed)?;
            assert!(recognize_arith(&t, family)?);
            println!("{family:?} seed {seed}: n = {}, {} steps", t.order(), script.steps.len());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
