//! Where a group acting through extended product data embeds: `Z_n x H`
//! when the fiber orientation is kept, a semidirect product otherwise.

use std::path::Path;

use seifert::format::parse_action_spec;
use seifert::group::analyze_structure;

const ROTATION: &str = r#"{
  "symbol": "(0,o1|(2,1),(3,1))",
  "group": "cyclic:6",
  "theta1": ["0", "1/6", "1/3", "1/2", "2/3", "5/6"],
  "alpha": [1, 1, 1, 1, 1, 1],
  "beta": [[1, 2], [1, 2], [1, 2], [1, 2], [1, 2], [1, 2]],
  "theta2": [["0", "0", "0", "0", "0", "0"], ["0", "0", "0", "0", "0", "0"]]
}"#;

// Klein four group: elements 1 and 3 reverse the fiber.
const REFLECTION: &str = r#"{
  "symbol": "(0,o1|(1,0),(1,0))",
  "group": {"order": 4, "table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]},
  "theta1": ["0", "0", "1/2", "1/2"],
  "alpha": [1, -1, 1, -1],
  "beta": [[1, 2], [1, 2], [2, 1], [2, 1]],
  "theta2": [["0", "0", "0", "0"], ["0", "0", "0", "0"]]
}"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, text) in [("rotation", ROTATION), ("reflection", REFLECTION)] {
        let spec = parse_action_spec(text, Path::new("."))?;
        let report = analyze_structure(&spec)?;
        println!("{name}: n = {}, alpha image order {}", report.n, report.alpha_image_order);
        println!("  target {}", report.shape);
        println!("  images {:?}, embedding ok: {}", report.images, report.embedding_ok);
        if let Some(tau) = &report.tau {
            println!("  tau target Z_2 x H, |H| = {}, ok: {}", tau.h_order, tau.embedding_ok);
        }
    }
    Ok(())
}
