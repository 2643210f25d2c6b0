use serde::Serialize;

use super::{abelian_invariants, derived_subgroup, ConjugacyClasses, FiniteGroup, Quotient, SubgroupSet};

/// The first invariant found to differ between two groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Distinction {
    Order,
    OrderProfile,
    CenterSize,
    ClassCount,
    Abelianization,
    ExhaustedSearch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoOutcome {
    /// `map[x]` is the image of `x`; a verified isomorphism.
    Isomorphic(Vec<usize>),
    NotIsomorphic(Distinction),
}

impl IsoOutcome {
    pub fn map(&self) -> Option<&[usize]> {
        match self {
            IsoOutcome::Isomorphic(m) => Some(m),
            IsoOutcome::NotIsomorphic(_) => None,
        }
    }

    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoOutcome::Isomorphic(_))
    }
}

fn abelianization(g: &FiniteGroup) -> Vec<usize> {
    let d = derived_subgroup(g);
    let q = Quotient::new(g, &d).expect("derived subgroup is normal");
    let whole = SubgroupSet::generated(&q.group, q.group.generators());
    abelian_invariants(&q.group, &whole)
        .expect("abelianization is abelian")
        .factors
}

/// Greedy generating sequence: repeatedly add the element that enlarges
/// the current subgroup the most, preferring high element order.
fn generating_sequence(g: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = g.closure(&[]);
    while span.len() < g.order() {
        let mut inside = vec![false; g.order()];
        span.iter().for_each(|&x| inside[x] = true);
        let mut best: Option<(usize, usize, usize)> = None;
        for x in 0..g.order() {
            if inside[x] {
                continue;
            }
            let mut trial = gens.clone();
            trial.push(x);
            let size = g.closure(&trial).len();
            let key = (size, g.element_order(x), usize::MAX - x);
            if best.is_none_or(|b| key > b) {
                best = Some(key);
            }
        }
        let (_, _, neg) = best.expect("some element outside the span");
        gens.push(usize::MAX - neg);
        span = g.closure(&gens);
    }
    gens
}

struct Search<'a> {
    g: &'a FiniteGroup,
    h: &'a FiniteGroup,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Extends `x -> image` along Cayley-graph edges of the first `k`
    /// generators; `None` on any inconsistency or collision.
    fn extend(&self, images: &[usize]) -> Option<Vec<usize>> {
        let (g, h) = (self.g, self.h);
        let mut map = vec![usize::MAX; g.order()];
        let mut used = vec![false; h.order()];
        map[0] = 0;
        used[0] = true;
        let mut queue = vec![0];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (&s, &t) in self.gens.iter().zip(images) {
                let y = g.mul(x, s);
                let fy = h.mul(map[x], t);
                if map[y] == usize::MAX {
                    if used[fy] {
                        return None;
                    }
                    map[y] = fy;
                    used[fy] = true;
                    queue.push(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        Some(map)
    }

    fn run(&self, images: &mut Vec<usize>) -> Option<Vec<usize>> {
        let partial = self.extend(images)?;
        if images.len() == self.gens.len() {
            return Some(partial);
        }
        for &t in &self.candidates[images.len()] {
            images.push(t);
            if let Some(found) = self.run(images) {
                return Some(found);
            }
            images.pop();
        }
        None
    }
}

/// Decides whether `g` and `h` are isomorphic.
///
/// Cheap invariants are compared first; then generator images are chosen
/// by backtracking, restricted to elements of matching order and class size.
pub fn are_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> IsoOutcome {
    if g.order() != h.order() {
        return IsoOutcome::NotIsomorphic(Distinction::Order);
    }
    if g.order_profile() != h.order_profile() {
        return IsoOutcome::NotIsomorphic(Distinction::OrderProfile);
    }
    if g.center().len() != h.center().len() {
        return IsoOutcome::NotIsomorphic(Distinction::CenterSize);
    }
    let (cg, ch) = (ConjugacyClasses::new(g), ConjugacyClasses::new(h));
    if cg.len() != ch.len() {
        return IsoOutcome::NotIsomorphic(Distinction::ClassCount);
    }
    if abelianization(g) != abelianization(h) {
        return IsoOutcome::NotIsomorphic(Distinction::Abelianization);
    }
    let gens = generating_sequence(g);
    let candidates = gens
        .iter()
        .map(|&s| {
            let key = (g.element_order(s), cg.sizes[cg.class_of[s]]);
            (0..h.order())
                .filter(|&t| (h.element_order(t), ch.sizes[ch.class_of[t]]) == key)
                .collect()
        })
        .collect();
    let search = Search { g, h, gens, candidates };
    match search.run(&mut Vec::new()) {
        Some(map) => {
            debug_assert!((0..g.order()).all(|a| (0..g.order()).all(|b| map[g.mul(a, b)] == h.mul(map[a], map[b]))));
            IsoOutcome::Isomorphic(map)
        }
        None => IsoOutcome::NotIsomorphic(Distinction::ExhaustedSearch),
    }
}
