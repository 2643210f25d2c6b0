use wittlab::groups::FiniteGroup;
use wittlab::witt::double_witt_of_group;

fn main() -> Result<(), wittlab::Error> {
    let z2 = FiniteGroup::cyclic(2);
    let groups = [
        ("Z2", z2.clone()),
        ("Z3", FiniteGroup::cyclic(3)),
        ("Z4", FiniteGroup::cyclic(4)),
        ("Z2xZ2", z2.direct_product(&z2)),
        ("Z2xZ2xZ2", z2.direct_product(&z2).direct_product(&z2)),
    ];
    for (name, g) in groups {
        let d = double_witt_of_group(&g)?;
        println!("D({name}): Witt group rank {}", d.rank);
    }
    Ok(())
}
