use serde::Serialize;

use crate::groups::{abelian_invariants, characters_of_abelian, normal_subgroups, AbelianStructure, DualGroup, FiniteGroup, SubgroupSet};

/// A normal abelian subgroup of order `4^m` that carries a `G`-invariant
/// isomorphism `R: A^∨ -> A` with `φ(R(ψ)) ψ(R(φ)) = 1`.
#[derive(Debug, Clone, Serialize)]
pub struct Candidate {
    pub subgroup: SubgroupSet,
    pub structure: AbelianStructure,
    pub central: bool,
    /// Some admissible `R` is anti-symmetric: `φ(R(ψ)) ψ(R(φ)) = 1`.
    pub antisymmetric: bool,
    /// Some admissible `R` is alternating: `φ(R(φ)) = 1`.
    pub alternating: bool,
}

impl Candidate {
    pub fn factors(&self) -> &[usize] {
        &self.structure.factors
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct RigidityEvidence {
    pub candidates: Vec<Candidate>,
    /// Normal abelian subgroups of order `4^m` that were examined.
    pub examined: usize,
}

impl RigidityEvidence {
    /// No candidate at all: every group isocategorical to this one is
    /// isomorphic to it.
    pub fn is_rigid(&self) -> bool {
        self.candidates.is_empty()
    }

    pub fn non_central(&self) -> impl Iterator<Item = &Candidate> {
        self.candidates.iter().filter(|c| !c.central)
    }
}

fn is_power_of_four(mut n: usize) -> bool {
    if n < 4 {
        return false;
    }
    while n.is_multiple_of(4) {
        n /= 4;
    }
    n == 1
}

struct Forms<'a> {
    a: &'a AbelianStructure,
    dual: DualGroup,
    /// `basis_action[g][j]`: exponent vector of `g·e_j`, `e_j` the j-th basis character.
    basis_action: Vec<Vec<Vec<usize>>>,
    /// `conj[g]`: coordinates of `g a_j g^-1` for each generator `a_j`.
    conj: Vec<Vec<Vec<usize>>>,
}

impl<'a> Forms<'a> {
    fn new(g: &FiniteGroup, a: &'a AbelianStructure) -> Self {
        let dual = characters_of_abelian(a);
        let k = a.factors.len();
        let unit = |j: usize| -> Vec<usize> { (0..k).map(|i| usize::from(i == j)).collect() };
        let basis_action = g
            .generators()
            .iter()
            .map(|&s| {
                (0..k)
                    .map(|j| {
                        // (s·e_j)(a_i) = e_j(s^-1 a_i s)
                        (0..k)
                            .map(|i| {
                                let x = g.conj(a.generators[i], s);
                                let v = dual.evaluate(&unit(j), a.coordinates(x).expect("A is normal"));
                                (v.numerator as usize * a.factors[i] / v.order as usize) % a.factors[i]
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let conj = g
            .generators()
            .iter()
            .map(|&s| {
                a.generators
                    .iter()
                    .map(|&x| a.coordinates(g.mul(g.mul(s, x), g.inv(s))).expect("A is normal").to_vec())
                    .collect()
            })
            .collect();
        Self {
            a,
            dual,
            basis_action,
            conj,
        }
    }

    /// `R(φ)` for a character with exponent vector `phi`.
    fn apply(&self, images: &[Vec<usize>], phi: &[usize]) -> Vec<usize> {
        let mut out = vec![0; self.a.factors.len()];
        for (img, &e) in images.iter().zip(phi) {
            out = self.a.add(&out, &self.a.scale(img, e));
        }
        out
    }

    /// `g·x` for `x` in coordinates.
    fn act(&self, g: usize, x: &[usize]) -> Vec<usize> {
        self.apply(&self.conj[g], x)
    }

    fn pairing_exponent(&self, phi: &[usize], x: &[usize]) -> (u32, u32) {
        let v = self.dual.evaluate(phi, x);
        (v.numerator, v.order)
    }

    fn unit(&self, j: usize) -> Vec<usize> {
        (0..self.a.factors.len()).map(|i| usize::from(i == j)).collect()
    }

    /// Checks `B(e_i, e_j) B(e_j, e_i) = 1` (and `B(e_j, e_j) = 1` when
    /// `alternating`) for the newest basis index `j`.
    fn pairs_ok(&self, images: &[Vec<usize>], alternating: bool) -> bool {
        let j = images.len() - 1;
        let ej = self.unit(j);
        for i in 0..=j {
            let ei = self.unit(i);
            let b_ij = self.dual.evaluate(&ei, &images[j]);
            let b_ji = self.dual.evaluate(&ej, &images[i]);
            if !(b_ij * b_ji).is_one() {
                return false;
            }
        }
        !alternating || self.dual.evaluate(&ej, &images[j]).is_one()
    }

    fn is_bijective(&self, images: &[Vec<usize>]) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        for phi in &self.dual.characters {
            seen.insert(self.apply(images, phi));
        }
        seen.len() == self.a.order()
    }

    fn invariant(&self, images: &[Vec<usize>]) -> bool {
        (0..self.conj.len()).all(|g| {
            (0..images.len()).all(|j| self.apply(images, &self.basis_action[g][j]) == self.act(g, &images[j]))
        })
    }

    /// Full check over all pairs of characters.
    fn verify(&self, images: &[Vec<usize>], alternating: bool) -> bool {
        self.dual.characters.iter().all(|phi| {
            let r_phi = self.apply(images, phi);
            if alternating && self.pairing_exponent(phi, &r_phi).1 != 1 {
                return false;
            }
            self.dual.characters.iter().all(|psi| {
                let r_psi = self.apply(images, psi);
                (self.dual.evaluate(phi, &r_psi) * self.dual.evaluate(psi, &r_phi)).is_one()
            })
        })
    }

    fn search(&self, images: &mut Vec<Vec<usize>>, alternating: bool) -> bool {
        let j = images.len();
        if j == self.a.factors.len() {
            return self.is_bijective(images) && self.invariant(images) && self.verify(images, alternating);
        }
        let d = self.a.factors[j];
        for x in self.a.all_coordinates() {
            if self.a.scale(&x, d).iter().any(|&c| c != 0) {
                continue;
            }
            images.push(x);
            if self.pairs_ok(images, alternating) && self.search(images, alternating) {
                return true;
            }
            images.pop();
        }
        false
    }
}

/// Normal abelian subgroups of order `4^m` admitting a skew-symmetric
/// `G`-invariant isomorphism from their character group. An empty result
/// certifies that `G` is categorically rigid.
pub fn cor14_screen(g: &FiniteGroup) -> RigidityEvidence {
    let mut out = RigidityEvidence::default();
    for s in normal_subgroups(g) {
        if !s.abelian || !is_power_of_four(s.order()) {
            continue;
        }
        out.examined += 1;
        let a = abelian_invariants(g, &s).expect("subgroup is abelian");
        let forms = Forms::new(g, &a);
        let alternating = forms.search(&mut Vec::new(), true);
        let antisymmetric = alternating || forms.search(&mut Vec::new(), false);
        if antisymmetric {
            out.candidates.push(Candidate {
                central: s.central,
                subgroup: s,
                structure: a,
                antisymmetric,
                alternating,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_groups_have_no_candidates() {
        for n in [4, 8, 16] {
            let ev = cor14_screen(&FiniteGroup::cyclic(n));
            assert!(ev.is_rigid(), "Z{n}");
            assert!(ev.examined >= 1);
        }
    }

    #[test]
    fn klein_group_admits_a_form() {
        let v = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2));
        let ev = cor14_screen(&v);
        assert_eq!(ev.candidates.len(), 1);
        let c = &ev.candidates[0];
        assert_eq!(c.factors(), &[2, 2]);
        assert!(c.central && c.antisymmetric && c.alternating);
    }

    #[test]
    fn odd_order_is_rigid() {
        for n in [3, 5, 9, 15] {
            let ev = cor14_screen(&FiniteGroup::cyclic(n));
            assert!(ev.is_rigid());
            assert_eq!(ev.examined, 0);
        }
    }

    #[test]
    fn z4_squared_forms() {
        let z4 = FiniteGroup::cyclic(4);
        let g = z4.direct_product(&z4);
        let ev = cor14_screen(&g);
        let full: Vec<_> = ev.candidates.iter().filter(|c| c.subgroup.order() == 16).collect();
        assert_eq!(full.len(), 1);
        assert!(full[0].alternating);
    }
}
