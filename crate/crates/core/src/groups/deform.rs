use super::{FiniteGroup, SubgroupSet};
use crate::ekg::{verify_cocycle, CocycleData, CocycleError};

/// The group `G_b`: same elements, product `g ·_b h = b(ḡ, h̄) g h`.
///
/// The cocycle data must describe `G/A` and the conjugation action of its
/// section; the new table is re-validated as a group.
pub fn deform_by_cocycle(g: &FiniteGroup, a: &SubgroupSet, c: &CocycleData) -> Result<FiniteGroup, CocycleError> {
    let mismatch = |what: &str| Err(CocycleError::Mismatch(what.into()));
    if !a.normal || !a.abelian {
        return mismatch("A must be normal and abelian");
    }
    if c.subgroup.elements != a.elements {
        return mismatch("cocycle is defined on a different subgroup");
    }
    let q = &c.quotient;
    if c.projection.len() != g.order() || q.order() * a.order() != g.order() || c.section.len() != q.order() {
        return mismatch("quotient sizes do not match G/A");
    }
    for x in 0..g.order() {
        if (c.projection[x] == 0) != a.contains(x) {
            return mismatch("projection kernel differs from A");
        }
        for &s in g.generators() {
            if c.projection[g.mul(x, s)] != q.mul(c.projection[x], c.projection[s]) {
                return mismatch("projection is not a homomorphism");
            }
        }
    }
    for (qi, &s) in c.section.iter().enumerate() {
        if c.projection[s] != qi {
            return mismatch("section does not split the projection");
        }
        for (j, &x) in c.structure.generators.iter().enumerate() {
            let y = g.mul(g.mul(s, x), g.inv(s));
            if c.structure.element(&c.action[qi][j]) != y {
                return mismatch("action differs from conjugation by the section");
            }
        }
    }
    verify_cocycle(c)?;
    let n = g.order();
    let b: Vec<usize> = (0..q.order() * q.order())
        .map(|k| c.value_element(k / q.order(), k % q.order()))
        .collect();
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        let px = c.projection[x] * q.order();
        for y in 0..n {
            table.push(g.mul(b[px + c.projection[y]], g.mul(x, y)) as u32);
        }
    }
    Ok(g.with_table(table)?)
}
