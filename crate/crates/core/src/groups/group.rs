use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::GroupError;
use crate::presentations::PermGenSet;

/// Largest group order the engine accepts.
pub const MAX_ORDER: usize = 4096;

/// Groups up to this order get a full associativity check.
pub const FULL_CHECK_ORDER: usize = 256;

/// A finite group given by its Cayley table. Element 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
    generators: Vec<usize>,
    name: Option<String>,
}

/// Element-order statistics: order -> number of elements of that order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderProfile(pub BTreeMap<usize, usize>);

impl OrderProfile {
    pub fn count(&self, order: usize) -> usize {
        self.0.get(&order).copied().unwrap_or(0)
    }
}

impl FiniteGroup {
    /// The group of order 1.
    pub fn trivial() -> Self {
        Self {
            n: 1,
            table: vec![0],
            inverse: vec![0],
            orders: vec![1],
            generators: Vec::new(),
            name: None,
        }
    }

    /// The cyclic group `Z_n`, elements `0..n` added mod n.
    pub fn cyclic(n: usize) -> Self {
        assert!((1..=MAX_ORDER).contains(&n));
        let table = (0..n).flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32)).collect();
        let gens = if n > 1 { vec![1] } else { vec![] };
        let mut g = Self::from_table(n, table, gens, None).expect("cyclic group table");
        g.name = Some(format!("Z{n}"));
        g
    }

    /// Validates a row-major Cayley table and builds the group.
    ///
    /// If `generators` do not generate the whole group, further elements are
    /// appended until they do.
    pub fn from_table(
        n: usize,
        table: Vec<u32>,
        generators: Vec<usize>,
        name: Option<String>,
    ) -> Result<Self, GroupError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GroupError::TooLarge { order: n, limit: MAX_ORDER });
        }
        if table.len() != n * n {
            return Err(GroupError::InvalidTable("table has the wrong size".into()));
        }
        if table.iter().any(|&x| x as usize >= n) {
            return Err(GroupError::InvalidTable("entry out of range".into()));
        }
        if let Some(&g) = generators.iter().find(|&&g| g >= n) {
            return Err(GroupError::InvalidTable(format!("generator {g} out of range")));
        }
        for x in 0..n {
            if table[x] as usize != x || table[x * n] as usize != x {
                return Err(GroupError::InvalidTable("element 0 is not the identity".into()));
            }
        }
        let mut seen = vec![0u32; n];
        for x in 0..n {
            let stamp = x as u32 + 1;
            for y in 0..n {
                let v = table[x * n + y] as usize;
                if seen[v] == stamp {
                    return Err(GroupError::InvalidTable(format!("row {x} is not a permutation")));
                }
                seen[v] = stamp;
            }
        }
        seen.iter_mut().for_each(|s| *s = 0);
        for y in 0..n {
            let stamp = y as u32 + 1;
            for x in 0..n {
                let v = table[x * n + y] as usize;
                if seen[v] == stamp {
                    return Err(GroupError::InvalidTable(format!("column {y} is not a permutation")));
                }
                seen[v] = stamp;
            }
        }
        let mut inverse = vec![0u32; n];
        for x in 0..n {
            let y = (0..n).find(|&y| table[x * n + y] == 0).expect("latin row contains identity");
            inverse[x] = y as u32;
        }
        let mut g = Self {
            n,
            table,
            inverse,
            orders: Vec::new(),
            generators,
            name,
        };
        g.complete_generators();
        g.check_associativity()?;
        g.orders = (0..n).map(|x| g.compute_order(x) as u32).collect();
        Ok(g)
    }

    fn complete_generators(&mut self) {
        let mut span = self.closure(&self.generators);
        while span.len() < self.n {
            let mut inside = vec![false; self.n];
            span.iter().for_each(|&x| inside[x] = true);
            let x = (0..self.n).find(|&x| !inside[x]).unwrap();
            self.generators.push(x);
            span = self.closure(&self.generators);
        }
    }

    fn check_associativity(&self) -> Result<(), GroupError> {
        let n = self.n;
        // Light's test on a generating set suffices for larger tables.
        let third: Vec<usize> = if n <= FULL_CHECK_ORDER {
            (0..n).collect()
        } else {
            self.generators.clone()
        };
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul(x, y);
                for &z in &third {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Err(GroupError::NotAssociative { x, y, z });
                    }
                }
            }
        }
        Ok(())
    }

    fn compute_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Breadth-first closure of permutation generators. The identity gets
    /// index 0 and the generators keep their listed order among the images.
    pub fn from_permutations(p: &PermGenSet) -> Result<Self, GroupError> {
        Self::from_permutations_with_images(p).map(|(g, _)| g)
    }

    /// Like [`FiniteGroup::from_permutations`], also returning the element
    /// index of each listed generator.
    pub fn from_permutations_with_images(p: &PermGenSet) -> Result<(Self, Vec<usize>), GroupError> {
        let identity: Vec<u16> = (0..p.degree as u16).collect();
        let gens: Vec<Vec<u16>> = p.generators.iter().map(|g| g.iter().map(|&x| x as u16).collect()).collect();
        let mut index: HashMap<Vec<u16>, usize> = HashMap::new();
        let mut elements = vec![identity.clone()];
        index.insert(identity, 0);
        // rmul[x][g] = x * gen_g (apply x, then gen_g)
        let mut rmul: Vec<Vec<u32>> = Vec::new();
        let mut tree: Vec<(usize, usize)> = vec![(usize::MAX, 0)];
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head].clone();
            let mut row = Vec::with_capacity(gens.len());
            for (gi, g) in gens.iter().enumerate() {
                let y: Vec<u16> = x.iter().map(|&pt| g[pt as usize]).collect();
                let next = elements.len();
                let id = *index.entry(y.clone()).or_insert(next);
                if id == next {
                    if next >= MAX_ORDER {
                        return Err(GroupError::TooLarge { order: next + 1, limit: MAX_ORDER });
                    }
                    elements.push(y);
                    tree.push((head, gi));
                }
                row.push(id as u32);
            }
            rmul.push(row);
            head += 1;
        }
        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            table[a * n] = a as u32;
        }
        for (c, &(parent, gi)) in tree.iter().enumerate().skip(1) {
            for a in 0..n {
                let ap = table[a * n + parent] as usize;
                table[a * n + c] = rmul[ap][gi];
            }
        }
        let images: Vec<usize> = gens.iter().map(|g| index[g]).collect();
        let mut uniq = Vec::new();
        for &g in &images {
            if g != 0 && !uniq.contains(&g) {
                uniq.push(g);
            }
        }
        Ok((Self::from_table(n, table, uniq, None)?, images))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let ord = self.element_order(a) as i64;
        let k = k.rem_euclid(ord);
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a] as usize
    }

    pub fn exponent(&self) -> usize {
        self.orders.iter().fold(1usize, |acc, &o| lcm(acc, o as usize))
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = Some(name.into());
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.set_name(name);
        self
    }

    /// Row `a` of the Cayley table.
    pub fn row(&self, a: usize) -> &[u32] {
        &self.table[a * self.n..(a + 1) * self.n]
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, &a)| self.generators[i + 1..].iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_central(&self, x: usize) -> bool {
        self.generators.iter().all(|&g| self.mul(x, g) == self.mul(g, x))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.is_central(x)).collect()
    }

    pub fn order_profile(&self) -> OrderProfile {
        let mut m = BTreeMap::new();
        for &o in &self.orders {
            *m.entry(o as usize).or_insert(0) += 1;
        }
        OrderProfile(m)
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.n];
        inside[0] = true;
        let mut out = vec![0];
        let mut head = 0;
        while head < out.len() {
            let x = out[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    out.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// `G x H`, with `(g, h)` stored at index `g * |H| + h`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.n, other.n);
        let size = n * m;
        assert!(size <= MAX_ORDER, "direct product exceeds {MAX_ORDER}");
        let mut table = vec![0u32; size * size];
        for a in 0..size {
            for b in 0..size {
                let g = self.mul(a / m, b / m);
                let h = other.mul(a % m, b % m);
                table[a * size + b] = (g * m + h) as u32;
            }
        }
        let gens = self
            .generators
            .iter()
            .map(|&g| g * m)
            .chain(other.generators.iter().copied())
            .collect();
        let name = match (&self.name, &other.name) {
            (Some(a), Some(b)) => Some(format!("{a}x{b}")),
            _ => None,
        };
        FiniteGroup::from_table(size, table, gens, name).expect("direct product of groups is a group")
    }

    /// `N ⋊ Q` with `action[q]` the automorphism of `N` induced by `q`.
    /// The pair `(n, q)` is stored at index `q * |N| + n`, so `N` occupies
    /// the first `|N|` indices. Product: `(n1, q1)(n2, q2) = (n1 q1(n2), q1 q2)`.
    pub fn semidirect_product(
        normal: &FiniteGroup,
        quotient: &FiniteGroup,
        action: &[Vec<usize>],
    ) -> Result<FiniteGroup, GroupError> {
        let (n, m) = (normal.n, quotient.n);
        if action.len() != m {
            return Err(GroupError::BadAction("one automorphism per element of Q is required".into()));
        }
        for (q, phi) in action.iter().enumerate() {
            if !normal.is_automorphism(phi) {
                return Err(GroupError::BadAction(format!("image of element {q} is not an automorphism")));
            }
        }
        for q1 in 0..m {
            for q2 in 0..m {
                let q12 = quotient.mul(q1, q2);
                if (0..n).any(|x| action[q12][x] != action[q1][action[q2][x]]) {
                    return Err(GroupError::BadAction(format!(
                        "action is not a homomorphism at ({q1}, {q2})"
                    )));
                }
            }
        }
        let size = n * m;
        if size > MAX_ORDER {
            return Err(GroupError::TooLarge { order: size, limit: MAX_ORDER });
        }
        let mut table = vec![0u32; size * size];
        for a in 0..size {
            let (q1, n1) = (a / n, a % n);
            for b in 0..size {
                let (q2, n2) = (b / n, b % n);
                let nn = normal.mul(n1, action[q1][n2]);
                table[a * size + b] = (quotient.mul(q1, q2) * n + nn) as u32;
            }
        }
        let gens = normal
            .generators
            .iter()
            .copied()
            .chain(quotient.generators.iter().map(|&q| q * n))
            .collect();
        FiniteGroup::from_table(size, table, gens, None)
    }

    /// Checks that `phi` (a map on element indices) is a bijective homomorphism.
    pub fn is_automorphism(&self, phi: &[usize]) -> bool {
        if phi.len() != self.n {
            return false;
        }
        let mut seen = vec![false; self.n];
        for &y in phi {
            if y >= self.n || std::mem::replace(&mut seen[y], true) {
                return false;
            }
        }
        (0..self.n).all(|a| (0..self.n).all(|b| phi[self.mul(a, b)] == self.mul(phi[a], phi[b])))
    }

    /// Group with the same carrier and a new table; generators carried over.
    pub(crate) fn with_table(&self, table: Vec<u32>) -> Result<FiniteGroup, GroupError> {
        FiniteGroup::from_table(self.n, table, self.generators.clone(), self.name.clone())
    }

    /// Row-major Cayley table: entry `a * n + b` is `ab`.
    pub fn table(&self) -> &[u32] {
        &self.table
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perms(degree: usize, gens: Vec<Vec<usize>>) -> FiniteGroup {
        FiniteGroup::from_permutations(&PermGenSet::new(degree, gens).unwrap()).unwrap()
    }

    /// Independent brute-force closure over explicit permutations.
    fn brute_closure(gens: &[Vec<usize>], degree: usize) -> usize {
        let mut set: std::collections::BTreeSet<Vec<usize>> = std::collections::BTreeSet::new();
        set.insert((0..degree).collect());
        loop {
            let mut added = false;
            for x in set.clone() {
                for g in gens {
                    let y: Vec<usize> = x.iter().map(|&p| g[p]).collect();
                    added |= set.insert(y);
                }
            }
            if !added {
                return set.len();
            }
        }
    }

    #[test]
    fn symmetric_group_on_three_letters() {
        let gens = vec![vec![1, 0, 2], vec![1, 2, 0]];
        assert_eq!(brute_closure(&gens, 3), 6);
        let g = perms(3, gens);
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.center(), vec![0]);
    }

    #[test]
    fn empty_generator_list_is_trivial() {
        let g = perms(4, vec![]);
        assert_eq!(g.order(), 1);
        assert_eq!(g.order_profile().0, BTreeMap::from([(1, 1)]));
    }

    #[test]
    fn z4_squared_as_permutations() {
        // (1 2 3 4) and (5 6 7 8)
        let a = vec![1, 2, 3, 0, 4, 5, 6, 7];
        let b = vec![0, 1, 2, 3, 5, 6, 7, 4];
        let g = perms(8, vec![a, b]);
        assert_eq!(g.order(), 16);
        assert!(g.is_abelian());
        assert_eq!(g.exponent(), 4);
    }

    #[test]
    fn klein_product() {
        let z2 = FiniteGroup::cyclic(2);
        let v = z2.direct_product(&z2);
        assert_eq!(v.order(), 4);
        assert_eq!(v.exponent(), 2);
    }

    #[test]
    fn dihedral_as_semidirect_product() {
        let z4 = FiniteGroup::cyclic(4);
        let z2 = FiniteGroup::cyclic(2);
        let inversion: Vec<usize> = (0..4).map(|x| (4 - x) % 4).collect();
        let d8 = FiniteGroup::semidirect_product(&z4, &z2, &[(0..4).collect(), inversion]).unwrap();
        assert_eq!(d8.order(), 8);
        assert_eq!(d8.order_profile().count(4), 2);
        assert_eq!(d8.order_profile().count(2), 5);
    }

    #[test]
    fn bad_action_rejected() {
        let z4 = FiniteGroup::cyclic(4);
        let z2 = FiniteGroup::cyclic(2);
        let not_auto = vec![0, 2, 0, 2];
        assert!(matches!(
            FiniteGroup::semidirect_product(&z4, &z2, &[(0..4).collect(), not_auto]),
            Err(GroupError::BadAction(_))
        ));
        // inversion on every nontrivial element of Z3 is not a homomorphism Z3 -> Aut(Z3)
        let z3 = FiniteGroup::cyclic(3);
        let swap: Vec<usize> = vec![0, 2, 1];
        assert!(FiniteGroup::semidirect_product(&z3, &z3, &[(0..3).collect(), swap.clone(), swap]).is_err());
    }

    #[test]
    fn rejects_non_group_tables() {
        // a latin square with identity that is not associative (order 5 loop)
        let t: Vec<u32> = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        assert!(matches!(
            FiniteGroup::from_table(5, t, vec![], None),
            Err(GroupError::NotAssociative { .. })
        ));
        assert!(FiniteGroup::from_table(2, vec![0, 1, 1, 1], vec![], None).is_err());
    }

    #[test]
    fn pow_and_inverse() {
        let z6 = FiniteGroup::cyclic(6);
        assert_eq!(z6.pow(1, 4), 4);
        assert_eq!(z6.pow(1, -1), 5);
        assert_eq!(z6.inv(2), 4);
        assert_eq!(z6.element_order(2), 3);
    }
}
