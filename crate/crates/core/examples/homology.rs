//! Fundamental-group presentations and first homology.
//!
//! cargo run --example homology -- "(1,n2|(2,1))"

use seifert::presentation::{abelianize, h1, orbifold_pi1, pi1, smith_normal_form, IntegerMatrix};
use seifert::SeifertSymbol;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "(1,n2|(2,1))".into());
    let s: SeifertSymbol = text.parse()?;

    let p = pi1(&s);
    println!("pi1 of {s}:\n{p}");
    println!("orbifold group:\n{}", orbifold_pi1(&s));

    let m = abelianize(&p);
    for r in 0..m.rows() {
        println!("  {:?}", m.row(r));
    }
    println!("invariants {:?}", smith_normal_form(&m));
    println!("H1 = {}", h1(&s));

    // Smith normal form on its own.
    let m = IntegerMatrix::from_rows(3, &[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])
        .expect("rectangular rows");
    println!("snf of a 3x3 matrix: {:?}", smith_normal_form(&m));
    Ok(())
}
