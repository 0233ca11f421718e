//! Solving `b = sum c_i n_i` over the orbit numbers of an action.
//!
//! cargo run --example obstruction -- 3 4 6 9

use seifert::action::check_obstruction_condition;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let cases: Vec<(i64, Vec<u64>)> = match args.split_first() {
        Some((&b, orbits)) => vec![(b, orbits.iter().map(|&o| o as u64).collect())],
        None => vec![(1, vec![2, 3]), (0, vec![4, 6]), (3, vec![4, 6]), (7, vec![4, 6, 9])],
    };
    for (b, orbits) in cases {
        match check_obstruction_condition(b, &orbits)? {
            Some(w) => {
                let terms: Vec<String> = w.iter().zip(&orbits).map(|(c, n)| format!("{c}*{n}")).collect();
                println!("b={b}: {}", terms.join(" + "));
            }
            None => println!("b={b}: no solution over {orbits:?}"),
        }
    }
    Ok(())
}
