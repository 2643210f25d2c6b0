//! Parse a presentation, run coset enumeration and print element orders.
//!
//! ```bash
//! cargo run --example enumerate
//! cargo run --example enumerate -- corpus/sg32_27.grp
//! ```

use wittlab::presentations::{parse_group_file, DEFAULT_MAX_COSETS};

const Q16: &str = "
group \"Q16\" presentation {
    gens a b;
    rel a^8;
    rel b^2 = a^4;
    rel b^-1 a b = a^-1;
}";

fn main() -> Result<(), wittlab::Error> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(&path).map_err(|source| wittlab::Error::Io { path, source })?,
        None => Q16.to_string(),
    };
    let file = parse_group_file(&text, "input")?;
    print!("{file}");
    let g = file.realize(DEFAULT_MAX_COSETS)?;
    println!("order {}, exponent {}, abelian: {}", g.order(), g.exponent(), g.is_abelian());
    for (order, count) in &g.order_profile().0 {
        println!("  {count:3} elements of order {order}");
    }
    Ok(())
}
