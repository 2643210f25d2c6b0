use super::{ConjugacyClasses, FiniteGroup, GroupError, SubgroupSet};

/// `G/N` together with the projection and a section.
///
/// Cosets are numbered by their smallest element, so the section picks the
/// minimal element of each coset and coset 0 is `N` itself.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: FiniteGroup,
    pub projection: Vec<usize>,
    pub section: Vec<usize>,
}

impl Quotient {
    pub fn new(g: &FiniteGroup, n: &SubgroupSet) -> Result<Self, GroupError> {
        if !n.normal {
            return Err(GroupError::NotNormal);
        }
        let mut projection = vec![usize::MAX; g.order()];
        let mut section = Vec::new();
        for x in 0..g.order() {
            if projection[x] != usize::MAX {
                continue;
            }
            let id = section.len();
            section.push(x);
            for &a in &n.elements {
                projection[g.mul(x, a)] = id;
            }
        }
        let m = section.len();
        let mut table = Vec::with_capacity(m * m);
        for &s in &section {
            for &t in &section {
                table.push(projection[g.mul(s, t)] as u32);
            }
        }
        let gens = g.generators().iter().map(|&s| projection[s]).filter(|&q| q != 0).collect();
        let group = FiniteGroup::from_table(m, table, gens, None)?;
        Ok(Self {
            group,
            projection,
            section,
        })
    }
}

/// The commutator subgroup `[G, G]`.
pub fn derived_subgroup(g: &FiniteGroup) -> SubgroupSet {
    let classes = ConjugacyClasses::new(g);
    let mut comms: Vec<usize> = Vec::new();
    for x in 0..g.order() {
        for &s in g.generators() {
            let c = g.mul(g.mul(g.inv(x), g.inv(s)), g.mul(x, s));
            if c != 0 {
                comms.push(c);
            }
        }
    }
    comms.sort_unstable();
    comms.dedup();
    let elements = super::normal_closure(g, &classes, &comms);
    SubgroupSet::generated(g, &elements)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_of_z4_by_z2() {
        let g = FiniteGroup::cyclic(4);
        let n = SubgroupSet::new(&g, vec![0, 2]).unwrap();
        let q = Quotient::new(&g, &n).unwrap();
        assert_eq!(q.group.order(), 2);
        assert_eq!(q.section, vec![0, 1]);
        assert_eq!(q.projection, vec![0, 1, 0, 1]);
    }

    #[test]
    fn derived_subgroup_of_s3() {
        let z3 = FiniteGroup::cyclic(3);
        let s3 = FiniteGroup::semidirect_product(&z3, &FiniteGroup::cyclic(2), &[vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        let d = derived_subgroup(&s3);
        assert_eq!(d.order(), 3);
        assert!(d.normal);
        assert_eq!(derived_subgroup(&z3).order(), 1);
    }

    #[test]
    fn non_normal_rejected() {
        let z3 = FiniteGroup::cyclic(3);
        let s3 = FiniteGroup::semidirect_product(&z3, &FiniteGroup::cyclic(2), &[vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        let h = SubgroupSet::generated(&s3, &[3]);
        assert_eq!(h.order(), 2);
        assert!(matches!(Quotient::new(&s3, &h), Err(GroupError::NotNormal)));
    }
}
