//! Extended product actions: the cocycle laws, orbit numbers, and the
//! actions they induce on the solid tori glued into the boundary.

use std::path::Path;

use seifert::action::{
    beta_orbit_numbers, gluing_matrix, induced_solid_torus_action, validate_action_spec,
    Permutation, RotationNumber,
};
use seifert::format::{action_spec_to_json, parse_action_spec};

const SWAP: &str = r#"{
  "symbol": "(0,o1|(3,1),(3,1))",
  "group": "cyclic:4",
  "theta1": ["0", "1/4", "1/2", "3/4"],
  "alpha": [1, 1, 1, 1],
  "beta": [[1, 2], [2, 1], [1, 2], [2, 1]],
  "theta2": [["0", "0", "0", "0"], ["0", "0", "0", "0"]]
}"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut spec = parse_action_spec(SWAP, Path::new("."))?;
    println!("{}", action_spec_to_json(&spec));
    println!("laws: {:?}", validate_action_spec(&spec));
    println!("orbit numbers: {:?}", beta_orbit_numbers(&spec)?);

    for pair in spec.symbol.pairs() {
        println!("gluing for {pair}: {}", gluing_matrix(*pair));
    }
    for g in spec.group.elements() {
        let data = induced_solid_torus_action(&spec, 0, g)?;
        let (l, m) = data.rotation;
        println!("g={g}: torus 1 -> rotation ({l}, {m}), sign {}", data.sign);
    }

    // Break the fiber rotation of the generator; law (b) catches it.
    spec.theta1[1] = RotationNumber::new(1, 3);
    println!("after mutation: {}", validate_action_spec(&spec).unwrap_err());

    // And a beta that is not a homomorphism.
    spec.theta1[1] = RotationNumber::new(1, 4);
    spec.beta[2] = Permutation::from_images(vec![1, 0]).expect("a permutation");
    println!("after mutation: {}", validate_action_spec(&spec).unwrap_err());
    Ok(())
}
