//! D8 and Q8 share a Grothendieck ring but not a Witt ring.

use wittlab::chartab::burnside_dixon;
use wittlab::witt::{based_ring_isomorphism, grothendieck_ring, rep_g_fusion_data, witt_ring};
use wittlab::{load_group, FiniteGroup};

fn rings(g: &FiniteGroup) -> Result<(wittlab::BasedRing, wittlab::BasedRing), wittlab::Error> {
    let k0 = grothendieck_ring(&burnside_dixon(g)?)?;
    let w = witt_ring(&rep_g_fusion_data(g)?)?.ring.expect("Rep(G) is symmetric");
    Ok((k0, w))
}

fn main() -> Result<(), wittlab::Error> {
    let corpus = concat!(env!("CARGO_MANIFEST_DIR"), "/corpus");
    let d8 = load_group(format!("{corpus}/d8.grp").as_ref())?;
    let q8 = load_group(format!("{corpus}/q8.grp").as_ref())?;
    let (k_d, w_d) = rings(&d8)?;
    let (k_q, w_q) = rings(&q8)?;
    println!("Witt ranks: D8 {}, Q8 {}", w_d.len(), w_q.len());
    println!("K0 isomorphic: {}", based_ring_isomorphism(&k_d, &k_q).is_some());
    println!("Witt isomorphic: {}", based_ring_isomorphism(&w_d, &w_q).is_some());
    Ok(())
}
