//! Actions on a non-orientable base, lifted to the orientable double cover
//! and projected back.

use std::path::Path;

use seifert::action::{check_tau_commuting, lift_action, project_action, validate_descriptor};
use seifert::format::{action_spec_to_json, descriptor_to_json, parse_descriptor};

// Z2 on the prism manifold, the generator reversing the fiber and flipping
// the sheet over the single exceptional fiber.
const PRISM: &str = r#"{
  "base": "(1,n2|(2,1))",
  "group": "cyclic:2",
  "epsilon": [1, -1],
  "beta_bar": [[1], [-1]],
  "theta2_bar": [["0", "0"]]
}"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = parse_descriptor(PRISM, Path::new("."))?;
    validate_descriptor(&d)?;

    let spec = lift_action(&d)?;
    println!("lifted:\n{}", action_spec_to_json(&spec));

    let report = check_tau_commuting(&spec)?;
    println!("commutes with tau: {}", report.is_commuting());

    let back = project_action(&spec)?;
    println!("projected:\n{}", descriptor_to_json(&back));
    println!("round trip: {}", back == d);
    Ok(())
}
