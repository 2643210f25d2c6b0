use wittlab::load_group;
use wittlab::screen::{compare_bundles, cor14_screen, invariant_bundle};

fn main() -> Result<(), wittlab::Error> {
    let corpus = concat!(env!("CARGO_MANIFEST_DIR"), "/corpus");
    for (a, b) in [("d8", "q8"), ("sg32_6", "sg32_7"), ("sg32_27", "sg32_34")] {
        let g = invariant_bundle(&load_group(format!("{corpus}/{a}.grp").as_ref())?)?;
        let h = invariant_bundle(&load_group(format!("{corpus}/{b}.grp").as_ref())?)?;
        let v = compare_bundles(&g, &h);
        println!("{} vs {}: {:?}", v.left, v.right, v.verdict);
    }
    let q8 = load_group(format!("{corpus}/q8.grp").as_ref())?;
    println!("Q8 rigid: {}", cor14_screen(&q8).is_rigid());
    Ok(())
}
