//! Witt groups of the four braidings on pointed Z2 categories, and of
//! Rep(G, u) for a central involution u.

use wittlab::groups::FiniteGroup;
use wittlab::witt::{rep_g_u_fusion_data, vec_z2_fixture, witt_ring, VecZ2Braiding};

fn main() -> Result<(), wittlab::Error> {
    for id in ["b0", "b1", "bi", "b-i"] {
        let fd = vec_z2_fixture(id.parse::<VecZ2Braiding>()?);
        let w = witt_ring(&fd)?;
        let d: Vec<String> = fd.d.iter().map(ToString::to_string).collect();
        println!("{id:4} d = [{}]  Witt rank {}  weakly symmetric: {}", d.join(", "), w.rank(), fd.is_weakly_symmetric(1));
    }
    let z4 = FiniteGroup::cyclic(4);
    let w = witt_ring(&rep_g_u_fusion_data(&z4, 2)?)?;
    println!("Rep(Z4, u = 2): Witt rank {}", w.rank());
    Ok(())
}
