//! Finite groups given by multiplication tables.

use seifert::group::{check_homomorphism, check_injective, cyclic, direct_product, FiniteGroup, GroupMap};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let klein = FiniteGroup::parse_table("4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n")?;
    println!("klein: order {}, element orders {:?}", klein.order(), orders(&klein));

    let z6 = cyclic(6);
    let z2z3 = FiniteGroup::from_constructor("product:cyclic:2,cyclic:3")?;
    println!("Z6 element orders    {:?}", orders(&z6));
    println!("Z2xZ3 element orders {:?}", orders(&z2z3));

    // k -> (k mod 2, k mod 3) is an isomorphism Z6 -> Z2 x Z3.
    let images = (0..6).map(|k| (k % 2) * 3 + k % 3).collect();
    let map = GroupMap::new(&z6, &z2z3, images);
    println!(
        "crt map: homomorphism {}, injective {}",
        check_homomorphism(&map),
        check_injective(&map)
    );

    let big = direct_product(&klein, &cyclic(3));
    println!("klein x Z3 has order {}", big.order());

    let broken = vec![vec![0, 1], vec![1, 1]];
    println!("bad table: {}", FiniteGroup::from_table(broken).unwrap_err());
    Ok(())
}

fn orders(g: &FiniteGroup) -> Vec<usize> {
    g.elements().map(|a| g.element_order(a)).collect()
}
