//! Deform an order-64 group along a 2-cocycle and check that the result is
//! a different group with the same invariants.

use wittlab::ekg::{izumi_kosaki, verify_cocycle};
use wittlab::groups::{are_isomorphic, IsoOutcome};
use wittlab::screen::compare_pair;

fn main() -> Result<(), wittlab::Error> {
    let ik = izumi_kosaki()?;
    verify_cocycle(&ik.cocycle)?;
    println!("|G| = {}, |G_b| = {}", ik.group.order(), ik.deformed.order());
    match are_isomorphic(&ik.group, &ik.deformed) {
        IsoOutcome::Isomorphic(_) => println!("isomorphic"),
        IsoOutcome::NotIsomorphic(d) => println!("not isomorphic ({d:?})"),
    }
    let v = compare_pair(&ik.group, &ik.deformed)?;
    println!("{:?}", v.equal);
    println!("verdict: {:?}", v.verdict);
    Ok(())
}
