use serde::Serialize;

use super::FiniteGroup;

/// Conjugacy classes in a deterministic order: by element order, then class
/// size, then smallest member. Class 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugacyClasses {
    /// Smallest element of each class.
    pub representatives: Vec<usize>,
    pub class_of: Vec<usize>,
    pub sizes: Vec<usize>,
    pub members: Vec<Vec<usize>>,
    /// Class of the inverses of the class members.
    pub inverse_class: Vec<usize>,
    pub exponent: usize,
    /// `power_map[k][m]` is the class of `x^m` for `x` in class `k`, `m < exponent`.
    pub power_map: Vec<Vec<usize>>,
    /// Element order of the members of each class.
    pub element_orders: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn new(g: &FiniteGroup) -> Self {
        let n = g.order();
        let mut label = vec![usize::MAX; n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if label[x] != usize::MAX {
                continue;
            }
            let id = raw.len();
            label[x] = id;
            let mut orbit = vec![x];
            let mut head = 0;
            while head < orbit.len() {
                let y = orbit[head];
                head += 1;
                for &s in g.generators() {
                    let z = g.conj(y, s);
                    if label[z] == usize::MAX {
                        label[z] = id;
                        orbit.push(z);
                    }
                }
            }
            orbit.sort_unstable();
            raw.push(orbit);
        }
        raw.sort_by_key(|c| (g.element_order(c[0]), c.len(), c[0]));
        let mut class_of = vec![0; n];
        for (k, c) in raw.iter().enumerate() {
            for &x in c {
                class_of[x] = k;
            }
        }
        let representatives: Vec<usize> = raw.iter().map(|c| c[0]).collect();
        let exponent = g.exponent();
        let power_map = representatives
            .iter()
            .map(|&r| {
                let mut out = Vec::with_capacity(exponent);
                let mut y = 0;
                for _ in 0..exponent {
                    out.push(class_of[y]);
                    y = g.mul(y, r);
                }
                out
            })
            .collect();
        Self {
            inverse_class: representatives.iter().map(|&r| class_of[g.inv(r)]).collect(),
            sizes: raw.iter().map(Vec::len).collect(),
            element_orders: representatives.iter().map(|&r| g.element_order(r)).collect(),
            representatives,
            class_of,
            members: raw,
            exponent,
            power_map,
        }
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// Class of `x^m` for `x` in class `k`; `m` may be any integer.
    pub fn power(&self, k: usize, m: i64) -> usize {
        self.power_map[k][m.rem_euclid(self.exponent as i64) as usize]
    }
}
