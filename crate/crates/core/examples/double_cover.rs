//! Orientable double covers of non-orientable bases and their quotients.

use seifert::{base_quotient, obstruction_class, orientable_double_cover, SeifertSymbol};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["(1,n2|(2,1))", "(1,n2|(3,1))", "(3,n2|(3,1),(5,2),(1,1))"] {
        let m: SeifertSymbol = text.parse()?;
        let cover = orientable_double_cover(&m)?;
        println!("{m}  b={}", obstruction_class(&m));
        println!("  cover    {cover}  b={}", obstruction_class(&cover));
        match base_quotient(&cover)? {
            Some(back) => println!("  quotient {back}"),
            None => println!("  quotient none"),
        }
    }

    // An odd pair list is not a double cover.
    let odd: SeifertSymbol = "(0,o1|(2,1))".parse()?;
    println!("{odd} quotient: {:?}", base_quotient(&odd)?);
    Ok(())
}
