//! Character tables of the two nonabelian groups of order 8.

use wittlab::chartab::{burnside_dixon, fs_indicators, lift_to_cyclotomic};
use wittlab::load_group;

fn main() -> Result<(), wittlab::Error> {
    let corpus = concat!(env!("CARGO_MANIFEST_DIR"), "/corpus");
    for file in ["d8.grp", "q8.grp", "z8.grp"] {
        let g = load_group(format!("{corpus}/{file}").as_ref())?;
        let t = burnside_dixon(&g)?;
        let lifted = lift_to_cyclotomic(&t)?;
        let nu = fs_indicators(&t)?;
        println!("{} (computed mod {})", g.name().unwrap_or(file), t.p);
        for (i, row) in lifted.values.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|v| format!("{:>8}", v.to_string())).collect();
            println!("  χ{}  ν={:>2}  {}", i + 1, nu[i], cells.join(""));
        }
    }
    Ok(())
}
