//! Randomized invariants over small groups built from cyclic factors and
//! random relabelings.

use proptest::prelude::*;
use wittlab::chartab::{burnside_dixon, fs_indicators, lift_to_cyclotomic};
use wittlab::ekg::{verify_cocycle, CocycleData};
use wittlab::groups::{abelian_invariants, are_isomorphic, deform_by_cocycle, normal_subgroups, SubgroupSet};
use wittlab::screen::compare_pair;
use wittlab::FiniteGroup;

fn product(factors: &[usize]) -> FiniteGroup {
    factors.iter().fold(FiniteGroup::trivial(), |g, &n| g.direct_product(&FiniteGroup::cyclic(n)))
}

/// The same group with its elements renamed by `perm` (identity fixed).
fn relabel(g: &FiniteGroup, perm: &[usize]) -> FiniteGroup {
    let n = g.order();
    let mut inv = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            table[perm[a] * n + perm[b]] = perm[g.mul(a, b)] as u32;
        }
    }
    FiniteGroup::from_table(n, table, g.generators().iter().map(|&x| perm[x]).collect(), None).unwrap()
}

fn small_group() -> impl Strategy<Value = FiniteGroup> {
    let d8 = {
        let z4 = FiniteGroup::cyclic(4);
        FiniteGroup::semidirect_product(&z4, &FiniteGroup::cyclic(2), &[vec![0, 1, 2, 3], vec![0, 3, 2, 1]]).unwrap()
    };
    let s3 = FiniteGroup::semidirect_product(&FiniteGroup::cyclic(3), &FiniteGroup::cyclic(2), &[vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
    prop_oneof![
        prop::collection::vec(2usize..=5, 0..=3)
            .prop_filter("order at most 64", |f| f.iter().product::<usize>() <= 64)
            .prop_map(|f| product(&f)),
        Just(d8.clone()),
        Just(s3.clone()),
        (2usize..=3).prop_map(move |n| d8.direct_product(&FiniteGroup::cyclic(n))),
    ]
}

fn relabeled() -> impl Strategy<Value = (FiniteGroup, FiniteGroup)> {
    small_group().prop_flat_map(|g| {
        let n = g.order();
        Just((1..n).collect::<Vec<_>>()).prop_shuffle().prop_map(move |rest| {
            let mut perm = vec![0];
            perm.extend(rest);
            let h = relabel(&g, &perm);
            (g.clone(), h)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn relabeling_preserves_isomorphism_type((g, h) in relabeled()) {
        match are_isomorphic(&g, &h) {
            wittlab::groups::IsoOutcome::Isomorphic(map) => {
                for a in 0..g.order() {
                    for b in 0..g.order() {
                        prop_assert_eq!(map[g.mul(a, b)], h.mul(map[a], map[b]));
                    }
                }
            }
            other => prop_assert!(false, "{:?}", other),
        }
    }

    #[test]
    fn character_table_laws(g in small_group()) {
        let t = burnside_dixon(&g).unwrap();
        prop_assert_eq!(t.degrees.iter().map(|d| d * d).sum::<usize>(), g.order());
        prop_assert_eq!(t.len(), t.classes.len());
        prop_assert_eq!(t.degrees[0], 1);
        let lifted = lift_to_cyclotomic(&t).unwrap();
        let nu = fs_indicators(&t).unwrap();
        for (i, row) in lifted.values.iter().enumerate() {
            prop_assert_eq!(row[0].as_integer(), Some(t.degrees[i] as i64));
            let s: f64 = (0..g.order()).map(|x| row[t.classes.class_of[g.mul(x, x)]].approx().0).sum();
            prop_assert!((s / g.order() as f64 - nu[i] as f64).abs() < 1e-9);
        }
    }

    #[test]
    fn abelian_invariants_multiply_to_the_order(f in prop::collection::vec(2usize..=6, 1..=3)) {
        let g = product(&f);
        let whole = SubgroupSet::generated(&g, g.generators());
        let a = abelian_invariants(&g, &whole).unwrap();
        prop_assert_eq!(a.factors.iter().product::<usize>(), g.order());
        prop_assert!(a.factors.windows(2).all(|w| w[1] % w[0] == 0));
        for x in 0..g.order() {
            let c = a.coordinates(x).unwrap().to_vec();
            prop_assert_eq!(a.element(&c), x);
        }
    }

    #[test]
    fn compare_pair_is_symmetric(g in small_group(), h in small_group()) {
        let a = compare_pair(&g, &h).unwrap();
        let b = compare_pair(&h, &g).unwrap();
        prop_assert_eq!(a.verdict, b.verdict);
        prop_assert_eq!(a.equal, b.equal);
    }

    #[test]
    fn coboundaries_give_isomorphic_deformations(g in small_group(), seed in any::<u64>()) {
        let subs: Vec<_> = normal_subgroups(&g).into_iter().filter(|s| s.abelian && s.order() > 1).collect();
        prop_assume!(!subs.is_empty());
        let a = &subs[seed as usize % subs.len()];
        let c = CocycleData::trivial(&g, a).unwrap();
        let m = c.quotient.order();
        let cochain: Vec<Vec<usize>> = (0..m)
            .map(|q| {
                if q == 0 {
                    return vec![0; c.structure.factors.len()];
                }
                c.structure
                    .factors
                    .iter()
                    .enumerate()
                    .map(|(j, &d)| ((seed >> ((q * 3 + j) % 60)) as usize) % d)
                    .collect()
            })
            .collect();
        let b = c.perturbed_by_coboundary(&cochain).unwrap();
        prop_assert!(verify_cocycle(&b).is_ok());
        let d = deform_by_cocycle(&g, a, &b).unwrap();
        prop_assert!(are_isomorphic(&g, &d).is_isomorphic());
    }
}
