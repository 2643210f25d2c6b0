use std::collections::BTreeMap;

use super::BasedRing;

/// Largest basis for which fingerprints are computed.
pub const FINGERPRINT_SIZE: usize = 12;

/// Canonical colours of the basis elements of each ring, by joint
/// refinement: a colour is determined by the unit interaction and by the
/// multiset of (colour, colour, constant) over the nonzero products.
fn colours(rings: &[&BasedRing]) -> Vec<Vec<usize>> {
    let initial = |r: &BasedRing, i: usize| -> Vec<u64> {
        let m = r.len();
        let c = &r.constants;
        let mut row_sums: Vec<u64> = (0..m).map(|j| c[i][j].iter().map(|&x| x as u64).sum()).collect();
        row_sums.sort_unstable();
        let mut square: Vec<u64> = c[i][i].iter().map(|&x| x as u64).collect();
        square.sort_unstable();
        let mut v = vec![u64::from(i == r.unit), c[i][i][r.unit] as u64];
        v.push((0..m).filter(|&j| c[i][j][r.unit] > 0).count() as u64);
        v.push(square.iter().filter(|&&x| x > 0).count() as u64);
        v.extend(row_sums);
        v.extend(square);
        v
    };
    let assign = |sigs: Vec<Vec<Vec<u64>>>| -> Vec<Vec<usize>> {
        let table: BTreeMap<&Vec<u64>, usize> = sigs
            .iter()
            .flatten()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(id, s)| (s, id))
            .collect();
        sigs.iter().map(|ring| ring.iter().map(|s| table[s]).collect()).collect()
    };
    let mut col = assign(rings.iter().map(|r| (0..r.len()).map(|i| initial(r, i)).collect()).collect());
    loop {
        let count = |c: &[Vec<usize>]| c.iter().flatten().collect::<std::collections::BTreeSet<_>>().len();
        let before = count(&col);
        let sigs = rings
            .iter()
            .zip(&col)
            .map(|(r, cl)| {
                (0..r.len())
                    .map(|i| {
                        let mut entries: Vec<(u64, u64, u64)> = Vec::new();
                        for j in 0..r.len() {
                            for k in 0..r.len() {
                                let v = r.constants[i][j][k];
                                if v > 0 {
                                    entries.push((cl[j] as u64, cl[k] as u64, v as u64));
                                }
                            }
                        }
                        entries.sort_unstable();
                        let mut s = vec![cl[i] as u64];
                        s.extend(entries.into_iter().flat_map(|(a, b, c)| [a, b, c]));
                        s
                    })
                    .collect()
            })
            .collect();
        let next = assign(sigs);
        if count(&next) == before {
            return next;
        }
        col = next;
    }
}

/// The unique basis element `k` with `b_i b_j = b_k`, if the product is a
/// single basis element with coefficient 1.
fn single(r: &BasedRing, i: usize, j: usize) -> Option<usize> {
    let row = &r.constants[i][j];
    let mut found = None;
    for (k, &v) in row.iter().enumerate() {
        match v {
            0 => {}
            1 if found.is_none() => found = Some(k),
            _ => return None,
        }
    }
    found
}

struct Matcher<'a> {
    a: &'a BasedRing,
    b: &'a BasedRing,
    ca: Vec<usize>,
    cb: Vec<usize>,
    order: Vec<usize>,
}

impl Matcher<'_> {
    /// Assigns `i -> j` and everything forced by single-element products.
    /// Returns the list of new assignments, or `None` on a contradiction.
    fn assign(&self, map: &mut [usize], used: &mut [bool], i: usize, j: usize) -> Option<Vec<usize>> {
        let mut added = Vec::new();
        let mut pending = vec![(i, j)];
        while let Some((x, y)) = pending.pop() {
            if map[x] != usize::MAX {
                if map[x] != y {
                    self.undo(map, used, &added);
                    return None;
                }
                continue;
            }
            if used[y] || self.ca[x] != self.cb[y] {
                self.undo(map, used, &added);
                return None;
            }
            map[x] = y;
            used[y] = true;
            added.push(x);
            let assigned: Vec<usize> = (0..map.len()).filter(|&t| map[t] != usize::MAX).collect();
            for &u in &assigned {
                for &v in &assigned {
                    if self.a.constants[u][v][x] != self.b.constants[map[u]][map[v]][y] {
                        self.undo(map, used, &added);
                        return None;
                    }
                }
            }
            for &s in &assigned {
                for (u, v) in [(x, s), (s, x)] {
                    // constants among assigned elements must agree
                    for &w in &assigned {
                        if self.a.constants[u][v][w] != self.b.constants[map[u]][map[v]][map[w]] {
                            self.undo(map, used, &added);
                            return None;
                        }
                    }
                    match (single(self.a, u, v), single(self.b, map[u], map[v])) {
                        (Some(k), Some(l)) => pending.push((k, l)),
                        (None, None) => {}
                        _ => {
                            self.undo(map, used, &added);
                            return None;
                        }
                    }
                }
            }
        }
        Some(added)
    }

    fn undo(&self, map: &mut [usize], used: &mut [bool], added: &[usize]) {
        for &x in added {
            used[map[x]] = false;
            map[x] = usize::MAX;
        }
    }

    fn search(&self, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let Some(&i) = self.order.iter().find(|&&i| map[i] == usize::MAX) else {
            return true;
        };
        for j in 0..self.b.len() {
            if used[j] || self.cb[j] != self.ca[i] {
                continue;
            }
            if let Some(added) = self.assign(map, used, i, j) {
                if self.search(map, used) {
                    return true;
                }
                self.undo(map, used, &added);
            }
        }
        false
    }
}

/// A basis bijection `σ` with `σ(unit) = unit` preserving all structure
/// constants, if one exists.
pub fn based_ring_isomorphism(a: &BasedRing, b: &BasedRing) -> Option<Vec<usize>> {
    if a.coefficients != b.coefficients || a.len() != b.len() {
        return None;
    }
    let col = colours(&[a, b]);
    let (ca, cb) = (col[0].clone(), col[1].clone());
    let mut sa = ca.clone();
    let mut sb = cb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    // rarest colours first
    let mut freq = BTreeMap::new();
    ca.iter().for_each(|&c| *freq.entry(c).or_insert(0usize) += 1);
    let mut order: Vec<usize> = (0..a.len()).collect();
    order.sort_by_key(|&i| (freq[&ca[i]], ca[i], i));
    let matcher = Matcher { a, b, ca, cb, order };
    let mut map = vec![usize::MAX; a.len()];
    let mut used = vec![false; b.len()];
    matcher.assign(&mut map, &mut used, a.unit, b.unit)?;
    if !matcher.search(&mut map, &mut used) {
        return None;
    }
    let m = a.len();
    let ok = (0..m).all(|i| (0..m).all(|j| (0..m).all(|k| a.constants[i][j][k] == b.constants[map[i]][map[j]][map[k]])));
    ok.then_some(map)
}

/// Lexicographically least serialization of the structure constants over
/// all colour-respecting basis orderings with the unit first. Equal
/// fingerprints mean isomorphic based rings. `None` above
/// [`FINGERPRINT_SIZE`].
pub fn fingerprint(r: &BasedRing) -> Option<String> {
    let m = r.len();
    if m > FINGERPRINT_SIZE {
        return None;
    }
    let col = colours(&[r]).remove(0);
    let mut best: Option<Vec<u32>> = None;
    let mut order = vec![r.unit];
    let mut current = Vec::new();
    block(r, &order, &mut current);
    extend(r, &col, &mut order, &mut current, &mut best);
    let body = best
        .unwrap_or_default()
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",");
    let tag = match r.coefficients {
        super::Coefficients::Z => "Z",
        super::Coefficients::Z2 => "Z2",
    };
    Some(format!("{tag}:{m}:{body}"))
}

/// Appends the constants of all triples whose largest position is the last.
fn block(r: &BasedRing, order: &[usize], out: &mut Vec<u32>) {
    let t = order.len() - 1;
    for i in 0..=t {
        for j in 0..=t {
            for k in 0..=t {
                if i.max(j).max(k) == t {
                    out.push(r.constants[order[i]][order[j]][order[k]]);
                }
            }
        }
    }
}

fn extend(r: &BasedRing, col: &[usize], order: &mut Vec<usize>, current: &mut Vec<u32>, best: &mut Option<Vec<u32>>) {
    if let Some(b) = best {
        let n = current.len();
        if current[..] > b[..n] {
            return;
        }
    }
    if order.len() == r.len() {
        if best.as_ref().is_none_or(|b| current[..] < b[..]) {
            *best = Some(current.clone());
        }
        return;
    }
    let next_colour = (0..r.len()).filter(|x| !order.contains(x)).map(|x| col[x]).min().expect("unplaced");
    for x in 0..r.len() {
        if order.contains(&x) || col[x] != next_colour {
            continue;
        }
        let mark = current.len();
        order.push(x);
        block(r, order, current);
        extend(r, col, order, current, best);
        order.pop();
        current.truncate(mark);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::burnside_dixon;
    use crate::groups::FiniteGroup;
    use crate::witt::{grothendieck_ring, Coefficients};

    fn group_ring(g: &FiniteGroup) -> BasedRing {
        let n = g.order();
        let c = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| u32::from(g.mul(i, j) == k)).collect()).collect())
            .collect();
        BasedRing::new(Coefficients::Z2, (0..n).map(|i| i.to_string()).collect(), 0, c).unwrap()
    }

    #[test]
    fn reflexive_and_relabelled() {
        let a = group_ring(&FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(4)));
        let b = group_ring(&FiniteGroup::cyclic(4).direct_product(&FiniteGroup::cyclic(2)));
        let s = based_ring_isomorphism(&a, &a).unwrap();
        assert_eq!(s[0], 0);
        let t = based_ring_isomorphism(&a, &b).unwrap();
        let mut inv = vec![0; t.len()];
        t.iter().enumerate().for_each(|(i, &j)| inv[j] = i);
        let back = based_ring_isomorphism(&b, &a).unwrap();
        assert_eq!(back.len(), inv.len());
        assert_eq!(fingerprint(&a), fingerprint(&b));
    }

    #[test]
    fn non_isomorphic_group_rings() {
        let a = group_ring(&FiniteGroup::cyclic(4));
        let b = group_ring(&FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2)));
        assert!(based_ring_isomorphism(&a, &b).is_none());
        assert_ne!(fingerprint(&a), fingerprint(&b));
    }

    #[test]
    fn k0_of_z4_and_klein_differ() {
        let a = grothendieck_ring(&burnside_dixon(&FiniteGroup::cyclic(4)).unwrap()).unwrap();
        let v = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2));
        let b = grothendieck_ring(&burnside_dixon(&v).unwrap()).unwrap();
        assert!(based_ring_isomorphism(&a, &b).is_none());
        assert!(based_ring_isomorphism(&b, &b).is_some());
    }
}
