use serde::Serialize;

use super::{FiniteGroup, GroupError, SubgroupSet};
use crate::roots::RootOfUnity;

/// Invariant-factor decomposition `Z_{d1} x ... x Z_{dk}` with `d1 | d2 | ...`,
/// realized by explicit independent generators inside the ambient group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianStructure {
    pub factors: Vec<usize>,
    pub generators: Vec<usize>,
    /// Element with mixed-radix coordinate index `i` (first factor slowest).
    #[serde(skip)]
    by_coords: Vec<usize>,
    /// `(element, coordinates)` sorted by element.
    #[serde(skip)]
    coords: Vec<(usize, Vec<usize>)>,
}

impl AbelianStructure {
    pub fn order(&self) -> usize {
        self.by_coords.len()
    }

    pub fn exponent(&self) -> usize {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn coordinates(&self, element: usize) -> Option<&[usize]> {
        self.coords
            .binary_search_by_key(&element, |(e, _)| *e)
            .ok()
            .map(|i| self.coords[i].1.as_slice())
    }

    /// Element with the given coordinates (reduced mod the factors).
    pub fn element(&self, coords: &[usize]) -> usize {
        self.by_coords[self.index(coords)]
    }

    fn index(&self, coords: &[usize]) -> usize {
        coords
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&c, &d)| acc * d + c % d)
    }

    /// All coordinate vectors, in mixed-radix order.
    pub fn all_coordinates(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.order()).map(move |mut i| {
            let mut v = vec![0; self.factors.len()];
            for (slot, &d) in v.iter_mut().zip(&self.factors).rev() {
                *slot = i % d;
                i /= d;
            }
            v
        })
    }

    pub fn elements(&self) -> &[usize] {
        &self.by_coords
    }

    pub fn add(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        a.iter().zip(b).zip(&self.factors).map(|((x, y), d)| (x + y) % d).collect()
    }

    pub fn neg(&self, a: &[usize]) -> Vec<usize> {
        a.iter().zip(&self.factors).map(|(x, d)| (d - x % d) % d).collect()
    }

    pub fn scale(&self, a: &[usize], k: usize) -> Vec<usize> {
        a.iter().zip(&self.factors).map(|(x, d)| (x * k) % d).collect()
    }

    /// Structure of a cyclic group of order `n` (or trivial).
    fn from_parts(g: &FiniteGroup, factors: Vec<usize>, generators: Vec<usize>) -> Result<Self, GroupError> {
        let total: usize = factors.iter().product();
        let mut by_coords = Vec::with_capacity(total);
        for i in 0..total {
            let mut rem = i;
            let mut e = 0;
            let mut digits = vec![0; factors.len()];
            for (slot, &d) in digits.iter_mut().zip(&factors).rev() {
                *slot = rem % d;
                rem /= d;
            }
            for (&c, &gen) in digits.iter().zip(&generators) {
                e = g.mul(e, g.pow(gen, c as i64));
            }
            by_coords.push(e);
        }
        let mut coords: Vec<(usize, Vec<usize>)> = by_coords
            .iter()
            .enumerate()
            .map(|(i, &e)| {
                let mut rem = i;
                let mut digits = vec![0; factors.len()];
                for (slot, &d) in digits.iter_mut().zip(&factors).rev() {
                    *slot = rem % d;
                    rem /= d;
                }
                (e, digits)
            })
            .collect();
        coords.sort();
        if coords.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(GroupError::Internal("abelian generators are not independent".into()));
        }
        Ok(Self {
            factors,
            generators,
            by_coords,
            coords,
        })
    }
}

/// Invariant factors and independent generators of an abelian subgroup.
pub fn abelian_invariants(g: &FiniteGroup, s: &SubgroupSet) -> Result<AbelianStructure, GroupError> {
    if !s.abelian {
        return Err(GroupError::NotAbelian);
    }
    let order = s.order();
    let mut primes = Vec::new();
    let mut m = order;
    let mut p = 2;
    while m > 1 {
        if m.is_multiple_of(p) {
            primes.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    // cyclic prime-power summands, per prime, largest first
    let mut per_prime: Vec<Vec<(usize, usize)>> = Vec::new();
    for &p in &primes {
        let sylow: Vec<usize> = s
            .elements
            .iter()
            .copied()
            .filter(|&x| is_power_of(g.element_order(x), p))
            .collect();
        let mut inside = vec![false; g.order()];
        inside[0] = true;
        let mut span = vec![0usize];
        let mut summands = Vec::new();
        while span.len() < sylow.len() {
            // element of largest order modulo the current span
            let (best_x, best_m) = sylow
                .iter()
                .filter(|&&x| !inside[x])
                .map(|&x| (x, order_mod(g, x, &inside)))
                .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
                .expect("sylow subgroup larger than span");
            // lift to an element of exactly that order in the same coset
            let y = span
                .iter()
                .map(|&h| g.mul(best_x, h))
                .filter(|&y| g.element_order(y) == best_m)
                .min()
                .ok_or_else(|| GroupError::Internal("no lift of maximal order".into()))?;
            summands.push((best_m, y));
            let mut next = Vec::with_capacity(span.len() * best_m);
            let mut power = 0;
            for _ in 0..best_m {
                for &h in &span {
                    next.push(g.mul(h, power));
                }
                power = g.mul(power, y);
            }
            for &x in &next {
                inside[x] = true;
            }
            span = next;
        }
        per_prime.push(summands);
    }
    let k = per_prime.iter().map(Vec::len).max().unwrap_or(0);
    let mut factors = Vec::with_capacity(k);
    let mut generators = Vec::with_capacity(k);
    for t in 0..k {
        let mut d = 1;
        let mut gen = 0;
        for summands in &per_prime {
            if let Some(&(m, y)) = summands.get(t) {
                d *= m;
                gen = g.mul(gen, y);
            }
        }
        factors.push(d);
        generators.push(gen);
    }
    factors.reverse();
    generators.reverse();
    let a = AbelianStructure::from_parts(g, factors, generators)?;
    let mut elems = a.by_coords.clone();
    elems.sort_unstable();
    if elems != s.elements {
        return Err(GroupError::Internal("decomposition does not cover the subgroup".into()));
    }
    Ok(a)
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

fn order_mod(g: &FiniteGroup, x: usize, inside: &[bool]) -> usize {
    let mut y = x;
    let mut k = 1;
    while !inside[y] {
        y = g.mul(y, x);
        k += 1;
    }
    k
}

/// Character group of an abelian group: each character is an exponent
/// vector `e`, with value `prod ζ_{d_i}^{e_i a_i}` at coordinates `a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualGroup {
    pub factors: Vec<usize>,
    pub characters: Vec<Vec<usize>>,
}

impl DualGroup {
    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    /// `ψ(a)` as a root of unity.
    pub fn evaluate(&self, psi: &[usize], coords: &[usize]) -> RootOfUnity {
        let n = self.factors.last().copied().unwrap_or(1);
        let exp: usize = psi
            .iter()
            .zip(coords)
            .zip(&self.factors)
            .map(|((&e, &a), &d)| (e * a % d) * (n / d))
            .sum();
        RootOfUnity::new(exp as i64, n as u32)
    }

    /// Index of a character given its exponent vector.
    pub fn index_of(&self, psi: &[usize]) -> usize {
        psi.iter()
            .zip(&self.factors)
            .fold(0, |acc, (&e, &d)| acc * d + e % d)
    }
}

pub fn characters_of_abelian(a: &AbelianStructure) -> DualGroup {
    DualGroup {
        factors: a.factors.clone(),
        characters: a.all_coordinates().collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn whole(g: &FiniteGroup) -> SubgroupSet {
        SubgroupSet::new(g, (0..g.order()).collect()).unwrap()
    }

    #[test]
    fn invariant_factors() {
        let z2 = FiniteGroup::cyclic(2);
        let z4 = FiniteGroup::cyclic(4);
        let z6 = FiniteGroup::cyclic(6);
        let cases = [
            (z4.direct_product(&z4), vec![4, 4]),
            (z2.direct_product(&z2).direct_product(&z2).direct_product(&z2), vec![2, 2, 2, 2]),
            (z6.direct_product(&z4), vec![2, 12]),
            (z2.direct_product(&FiniteGroup::cyclic(3)), vec![6]),
        ];
        for (g, want) in cases {
            let a = abelian_invariants(&g, &whole(&g)).unwrap();
            assert_eq!(a.factors, want);
            for (i, &gen) in a.generators.iter().enumerate() {
                assert_eq!(g.element_order(gen), a.factors[i]);
            }
            for x in 0..g.order() {
                assert_eq!(a.element(a.coordinates(x).unwrap()), x);
            }
        }
    }

    #[test]
    fn trivial_subgroup_has_no_factors() {
        let g = FiniteGroup::cyclic(5);
        let a = abelian_invariants(&g, &SubgroupSet::trivial(&g)).unwrap();
        assert!(a.factors.is_empty());
        assert_eq!(a.order(), 1);
    }

    #[test]
    fn non_abelian_rejected() {
        let z3 = FiniteGroup::cyclic(3);
        let s3 = FiniteGroup::semidirect_product(&z3, &FiniteGroup::cyclic(2), &[vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        assert_eq!(abelian_invariants(&s3, &whole(&s3)), Err(GroupError::NotAbelian));
    }

    #[test]
    fn dual_of_z2() {
        let g = FiniteGroup::cyclic(2);
        let a = abelian_invariants(&g, &whole(&g)).unwrap();
        let d = characters_of_abelian(&a);
        assert_eq!(d.len(), 2);
        let u = a.coordinates(1).unwrap();
        assert_eq!(d.evaluate(&d.characters[1], u), RootOfUnity::MINUS_ONE);
        assert_eq!(d.evaluate(&d.characters[0], u), RootOfUnity::ONE);
    }

    #[test]
    fn dual_sizes_and_pairing() {
        let z4 = FiniteGroup::cyclic(4);
        let g = z4.direct_product(&z4);
        let a = abelian_invariants(&g, &whole(&g)).unwrap();
        assert_eq!(characters_of_abelian(&a).len(), 16);

        let z2 = FiniteGroup::cyclic(2);
        let v = z2.direct_product(&z2);
        let a = abelian_invariants(&v, &whole(&v)).unwrap();
        let d = characters_of_abelian(&a);
        // pairing matrix over exponents mod 2 on the basis characters / basis elements
        let basis_chars = [vec![1, 0], vec![0, 1]];
        let basis_elts = [vec![1, 0], vec![0, 1]];
        let m: Vec<Vec<u32>> = basis_chars
            .iter()
            .map(|c| basis_elts.iter().map(|e| d.evaluate(c, e).numerator).collect())
            .collect();
        let det = (m[0][0] * m[1][1] + m[0][1] * m[1][0]) % 2;
        assert_eq!(det, 1);
        // nondegenerate: only the trivial character is 1 everywhere
        for c in &d.characters {
            let trivial = a.all_coordinates().all(|x| d.evaluate(c, &x).is_one());
            assert_eq!(trivial, c.iter().all(|&e| e == 0));
        }
    }
}
