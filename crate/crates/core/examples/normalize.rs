//! Normal forms, total sums and equivalence of Seifert symbols.
//!
//! cargo run --example normalize -- "(2,n2|(5,-3),(2,1),(1,4))"

use seifert::{equivalent, normalize, total_sum, SeifertSymbol};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "(2,n2|(5,-3),(2,1),(1,4))".into());
    let s: SeifertSymbol = text.parse()?;
    let n = normalize(&s);
    println!("symbol      {s}");
    println!("sum         {}", total_sum(&s));
    println!("normal form {}", n.expand());
    println!("b           {}", n.obstruction_class());

    // Same manifold written three ways.
    let forms = ["(0,o1|(3,4))", "(0,o1|(1,1),(3,1))", "(0,o1|(3,-2),(1,2))"];
    let first: SeifertSymbol = forms[0].parse()?;
    for f in &forms[1..] {
        let other: SeifertSymbol = f.parse()?;
        println!("{first} ~ {other}: {}", equivalent(&first, &other));
    }
    let lens: SeifertSymbol = "(0,o1|(3,2))".parse()?;
    println!("{first} ~ {lens}: {}", equivalent(&first, &lens));
    Ok(())
}
