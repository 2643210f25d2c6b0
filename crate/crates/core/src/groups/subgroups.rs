use std::collections::BTreeSet;

use serde::Serialize;

use super::{ConjugacyClasses, FiniteGroup, GroupError};

/// A subgroup as a sorted element set, with eagerly computed flags.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SubgroupSet {
    pub elements: Vec<usize>,
    pub normal: bool,
    pub abelian: bool,
    pub central: bool,
}

impl SubgroupSet {
    /// Checks closure and computes the flags.
    pub fn new(g: &FiniteGroup, mut elements: Vec<usize>) -> Result<Self, GroupError> {
        elements.sort_unstable();
        elements.dedup();
        let mut inside = vec![false; g.order()];
        for &x in &elements {
            if x >= g.order() {
                return Err(GroupError::NotSubgroup);
            }
            inside[x] = true;
        }
        if !inside[0] {
            return Err(GroupError::NotSubgroup);
        }
        for &x in &elements {
            if !inside[g.inv(x)] || elements.iter().any(|&y| !inside[g.mul(x, y)]) {
                return Err(GroupError::NotSubgroup);
            }
        }
        Ok(Self::with_flags(g, elements, &inside))
    }

    /// The subgroup generated by `gens`.
    pub fn generated(g: &FiniteGroup, gens: &[usize]) -> Self {
        let elements = g.closure(gens);
        let mut inside = vec![false; g.order()];
        elements.iter().for_each(|&x| inside[x] = true);
        Self::with_flags(g, elements, &inside)
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Self::generated(g, &[])
    }

    fn with_flags(g: &FiniteGroup, elements: Vec<usize>, inside: &[bool]) -> Self {
        let normal = elements
            .iter()
            .all(|&x| g.generators().iter().all(|&s| inside[g.conj(x, s)]));
        let abelian = elements
            .iter()
            .all(|&x| elements.iter().all(|&y| g.mul(x, y) == g.mul(y, x)));
        let central = elements.iter().all(|&x| g.is_central(x));
        Self {
            elements,
            normal,
            abelian,
            central,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

/// Smallest normal subgroup containing `x`: generated by the class of `x`.
pub fn normal_closure(g: &FiniteGroup, classes: &ConjugacyClasses, gens: &[usize]) -> Vec<usize> {
    let mut all = Vec::new();
    for &x in gens {
        all.extend_from_slice(&classes.members[classes.class_of[x]]);
    }
    g.closure(&all)
}

/// Every normal subgroup of `g`, sorted by order and then by elements.
///
/// Each normal subgroup is the join of the normal closures of its elements,
/// so the set is built by joining single-class closures until nothing new
/// appears.
pub fn normal_subgroups(g: &FiniteGroup) -> Vec<SubgroupSet> {
    let classes = ConjugacyClasses::new(g);
    let atoms: Vec<usize> = (1..classes.len()).map(|k| classes.representatives[k]).collect();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    // each entry: (elements, class generators used)
    let mut queue: Vec<(Vec<usize>, Vec<usize>)> = vec![(vec![0], vec![])];
    found.insert(vec![0]);
    let mut head = 0;
    while head < queue.len() {
        let (elems, gens) = queue[head].clone();
        head += 1;
        let mut inside = vec![false; g.order()];
        elems.iter().for_each(|&x| inside[x] = true);
        for &a in &atoms {
            if inside[a] {
                continue;
            }
            let mut next_gens = gens.clone();
            next_gens.push(a);
            let joined = normal_closure(g, &classes, &next_gens);
            if found.insert(joined.clone()) {
                queue.push((joined, next_gens));
            }
        }
    }
    let mut out: Vec<SubgroupSet> = found
        .into_iter()
        .map(|elements| {
            let mut inside = vec![false; g.order()];
            elements.iter().for_each(|&x| inside[x] = true);
            SubgroupSet::with_flags(g, elements, &inside)
        })
        .collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
    out
}
