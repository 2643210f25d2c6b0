//! Acceptance criteria 1 to 10. Each test writes one `PASS`/`FAIL` line to
//! stderr (outside the harness capture) and then asserts.

#![allow(clippy::needless_range_loop)]

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use wittlab::chartab::{burnside_dixon, dual_involution, fs_indicator, fs_indicators, fusion_coefficients, lift_to_cyclotomic};
use wittlab::ekg::{izumi_kosaki, CocycleData};
use wittlab::groups::{are_isomorphic, deform_by_cocycle, normal_subgroups, IsoOutcome};
use wittlab::presentations::{parse_group_file, DEFAULT_MAX_COSETS};
use wittlab::screen::{compare_bundles, cor14_screen, invariant_bundle, screen_corpus, Status, Verdict, Witness};
use wittlab::witt::{
    based_ring_isomorphism, double_witt_of_group, grothendieck_ring, rep_g_from_table, vec_z2_fixture, witt_basis,
    witt_ring, BasedRing, VecZ2Braiding,
};
use wittlab::FiniteGroup;

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn corpus(stem: &str) -> FiniteGroup {
    wittlab::load_group(&corpus_dir().join(format!("{stem}.grp"))).unwrap()
}

/// Group together with the elements of its declared generators.
fn corpus_with_gens(stem: &str) -> (FiniteGroup, Vec<usize>) {
    let text = std::fs::read_to_string(corpus_dir().join(format!("{stem}.grp"))).unwrap();
    parse_group_file(&text, stem).unwrap().realize_with_images(DEFAULT_MAX_COSETS).unwrap()
}

fn all_corpus() -> Vec<FiniteGroup> {
    let mut files: Vec<_> = std::fs::read_dir(corpus_dir()).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    files.iter().map(|p| wittlab::load_group(p).unwrap()).collect()
}

/// Collects named checks and reports them as a single criterion line.
struct Criterion {
    id: u32,
    start: Instant,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Criterion {
    fn new(id: u32) -> Self {
        Self {
            id,
            start: Instant::now(),
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        if ok {
            self.notes.push(what);
        } else {
            self.failures.push(what);
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, got: T, want: T) {
        let ok = got == want;
        self.check(ok, format!("{what}: got {got:?}, expected {want:?}"));
    }

    fn finish(mut self, budget: Duration) {
        let elapsed = self.start.elapsed();
        self.check(elapsed <= budget, format!("runtime {elapsed:.2?} within {budget:?}"));
        let line = if self.failures.is_empty() {
            format!("criterion {:2}: PASS ({elapsed:.2?})\n", self.id)
        } else {
            format!("criterion {:2}: FAIL ({elapsed:.2?}): {}\n", self.id, self.failures.join("; "))
        };
        let _ = std::io::stderr().write_all(line.as_bytes());
        assert!(self.failures.is_empty(), "{}", line.trim_end());
    }
}

fn rings(g: &FiniteGroup) -> (BasedRing, BasedRing, Vec<i8>) {
    let t = burnside_dixon(g).unwrap();
    let k0 = grothendieck_ring(&t).unwrap();
    let w = witt_ring(&rep_g_from_table(&t).unwrap()).unwrap().ring.unwrap();
    (k0, w, fs_indicators(&t).unwrap())
}

#[test]
fn criterion_01_d8_q8() {
    let mut c = Criterion::new(1);
    let (kd, wd, nd) = rings(&corpus("d8"));
    let (kq, wq, nq) = rings(&corpus("q8"));
    c.eq("D8 indicators", nd, vec![1, 1, 1, 1, 1]);
    c.eq("Q8 indicators", nq, vec![1, 1, 1, 1, -1]);
    c.eq("Witt basis sizes", (wd.len(), wq.len()), (5, 4));
    c.check(based_ring_isomorphism(&wd, &wq).is_none(), "Witt rings not isomorphic");
    c.check(based_ring_isomorphism(&kd, &kq).is_some(), "K0 rings isomorphic");
    c.finish(Duration::from_secs(1));
}

/// Indicators of the degree-2 characters, keyed by the value at `x`
/// (rounded real part).
fn degree_two_by_value(g: &FiniteGroup, x: usize) -> Vec<(f64, i8)> {
    let t = burnside_dixon(g).unwrap();
    let lifted = lift_to_cyclotomic(&t).unwrap();
    let k = t.classes.class_of[x];
    (0..t.len())
        .filter(|&i| t.degrees[i] == 2)
        .map(|i| (lifted.values[i][k].approx().0, fs_indicator(&t, i).unwrap()))
        .collect()
}

fn nu_where(chars: &[(f64, i8)], value: f64) -> Vec<i8> {
    chars.iter().filter(|(v, _)| (v - value).abs() < 1e-6).map(|&(_, nu)| nu).collect()
}

#[test]
fn criterion_02_order_16() {
    let sqrt2 = 2f64.sqrt();
    let mut c = Criterion::new(2);
    for (pair, left, right, expect_l, expect_r) in [
        ("D16/Q16", "d16", "q16", [1, 1, 1], [1, -1, -1]),
        ("G3/G4", "g3_16", "g4_16", [1, -1, 0], [1, 1, 0]),
    ] {
        c.notes.push(pair.into());
        for (stem, expect) in [(left, expect_l), (right, expect_r)] {
            let (g, gens) = corpus_with_gens(stem);
            let a = gens[0];
            let got = if stem.starts_with("g") {
                // χ(a^2) = 2, ψ(a^2) = -2
                let chars = degree_two_by_value(&g, g.pow(a, 2));
                [nu_where(&chars, 2.0), nu_where(&chars, -2.0), vec![0]]
            } else {
                // χ(a^4) = 2, ψ(a) = √2, κ(a) = -√2
                let at_a4 = degree_two_by_value(&g, g.pow(a, 4));
                let at_a = degree_two_by_value(&g, a);
                [nu_where(&at_a4, 2.0), nu_where(&at_a, sqrt2), nu_where(&at_a, -sqrt2)]
            };
            let want = [vec![expect[0]], vec![expect[1]], vec![expect[2]]];
            c.eq(&format!("{stem} indicators of χ, ψ, κ"), got, want);
        }
        let (_, wl, _) = rings(&corpus(left));
        let (_, wr, _) = rings(&corpus(right));
        c.check(based_ring_isomorphism(&wl, &wr).is_none(), format!("{pair} Witt rings not isomorphic"));
    }
    c.finish(Duration::from_secs(1));
}

#[test]
fn criterion_03_sg32_6_vs_7() {
    let mut c = Criterion::new(3);
    let a = invariant_bundle(&corpus("sg32_6")).unwrap();
    let b = invariant_bundle(&corpus("sg32_7")).unwrap();
    let v = compare_bundles(&a, &b);
    c.check(based_ring_isomorphism(&a.k0, &b.k0).is_some(), "K0 isomorphic");
    c.check(based_ring_isomorphism(&a.witt, &b.witt).is_some(), "Witt isomorphic");
    c.eq("self-dual counts", (a.self_dual, b.self_dual), (7, 7));
    c.eq("elements of order 4", (a.profile.count(4), b.profile.count(4)), (20, 4));
    c.eq("verdict", v.verdict, Verdict::NotIsocategorical(Witness::OrderProfile));
    c.finish(Duration::from_secs(5));
}

/// Conjugacy classes closed under inversion, found by direct conjugation.
fn real_class_count(g: &FiniteGroup) -> usize {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut count = 0;
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let class: Vec<usize> = (0..n).map(|h| g.mul(g.mul(g.inv(h), x), h)).collect();
        class.iter().for_each(|&y| seen[y] = true);
        if class.contains(&g.inv(x)) {
            count += 1;
        }
    }
    count
}

#[test]
fn criterion_04_sg32_27_vs_34() {
    let mut c = Criterion::new(4);
    let a = invariant_bundle(&corpus("sg32_27")).unwrap();
    let b = invariant_bundle(&corpus("sg32_34")).unwrap();
    let v = compare_bundles(&a, &b);
    c.check(v.equal.k0, "K0 isomorphic");
    c.check(v.equal.witt, "Witt isomorphic");
    c.eq("self-dual counts", (a.self_dual, b.self_dual), (10, 10));
    c.eq(
        "self-dual counts vs real classes",
        (a.self_dual, b.self_dual),
        (real_class_count(&a.group), real_class_count(&b.group)),
    );
    c.check(v.equal.profile, "order profiles equal");
    let order16 = |ev: &wittlab::screen::RigidityEvidence| -> Vec<Vec<usize>> {
        ev.non_central().filter(|x| x.subgroup.order() == 16).map(|x| x.factors().to_vec()).collect()
    };
    c.eq("non-central order-16 candidates", (order16(&a.evidence), order16(&b.evidence)), (vec![vec![2, 2, 2, 2]], vec![vec![4, 4]]));
    c.eq("verdict", v.verdict, Verdict::NotIsocategorical(Witness::CandidateSubgroups));
    c.finish(Duration::from_secs(10));
}

#[test]
fn criterion_05_izumi_kosaki() {
    let mut c = Criterion::new(5);
    let ik = izumi_kosaki().unwrap();
    c.eq("orders", (ik.group.order(), ik.deformed.order()), (64, 64));
    c.check(matches!(are_isomorphic(&ik.group, &ik.deformed), IsoOutcome::NotIsomorphic(_)), "not isomorphic");
    let v = compare_bundles(&invariant_bundle(&ik.group).unwrap(), &invariant_bundle(&ik.deformed).unwrap());
    let f = v.equal;
    c.check(f.order && f.k0 && f.witt && f.self_dual && f.profile, format!("all invariants equal: {f:?}"));
    c.eq("verdict", v.verdict, Verdict::Undecided);
    c.finish(Duration::from_secs(30));
}

#[test]
fn criterion_06_pointed_z2_fixtures() {
    let mut c = Criterion::new(6);
    let ids = [VecZ2Braiding::B0, VecZ2Braiding::B1, VecZ2Braiding::BI, VecZ2Braiding::BMinusI];
    let sizes: Vec<usize> = ids.iter().map(|&id| witt_basis(&vec_z2_fixture(id)).len()).collect();
    c.eq("Witt basis sizes", sizes, vec![2, 1, 1, 1]);
    c.check(!vec_z2_fixture(VecZ2Braiding::BI).is_weakly_symmetric(1), "bi: non-unit simple is not weakly symmetric");
    c.finish(Duration::from_millis(100));
}

/// All homomorphisms to the unit circle, as exponents `k` of `exp(2πi k / e)`.
fn brute_force_characters(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let e = g.exponent();
    let n = g.order();
    let gens = g.generators().to_vec();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        // extend along a BFS tree, then check every product
        let mut val = vec![usize::MAX; n];
        val[0] = 0;
        let mut queue = vec![0];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (s, &gen) in gens.iter().enumerate() {
                let y = g.mul(x, gen);
                if val[y] == usize::MAX {
                    val[y] = (val[x] + choice[s]) % e;
                    queue.push(y);
                }
            }
        }
        if (0..n).all(|x| (0..n).all(|y| val[g.mul(x, y)] == (val[x] + val[y]) % e)) {
            out.push(val);
        }
        let mut i = 0;
        loop {
            if i == choice.len() {
                return out;
            }
            choice[i] += 1;
            if choice[i] < e {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn double_oracle(g: &FiniteGroup) -> usize {
    let e = g.exponent();
    let chars = brute_force_characters(g);
    let mut count = 0;
    for x in (0..g.order()).filter(|&x| g.mul(x, x) == 0) {
        for psi in &chars {
            let squares_trivial = psi.iter().all(|&k| (2 * k) % e == 0);
            if squares_trivial && psi[x] == 0 {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn criterion_07_abelian_doubles() {
    let mut c = Criterion::new(7);
    let z2 = FiniteGroup::cyclic(2);
    for (name, g, want) in [
        ("Z2", z2.clone(), 3),
        ("Z3", FiniteGroup::cyclic(3), 1),
        ("Z2xZ2", z2.direct_product(&z2), 10),
    ] {
        let rank = double_witt_of_group(&g).unwrap().rank;
        c.eq(&format!("{name} rank"), rank, want);
        c.eq(&format!("{name} oracle"), double_oracle(&g), want);
    }
    c.finish(Duration::from_millis(100));
}

#[test]
fn criterion_08_rigidity_screen() {
    let groups = all_corpus();
    let mut c = Criterion::new(8);
    let q8 = cor14_screen(&corpus("q8"));
    c.check(q8.is_rigid() && q8.examined > 0, "Q8 rigid");
    for g in groups.iter().filter(|g| g.order() % 2 == 1) {
        let t = Instant::now();
        c.check(cor14_screen(g).is_rigid(), format!("{} rigid", g.name().unwrap_or("?")));
        c.check(t.elapsed() < Duration::from_secs(1), "per-group runtime");
    }
    let g3 = cor14_screen(&corpus("g3_16"));
    c.check(g3.candidates.iter().any(|x| x.factors() == [2, 2]), "G3 has a Klein candidate");
    let budget = Duration::from_secs(1) * (groups.iter().filter(|g| g.order() % 2 == 1).count() as u32 + 2);
    c.finish(budget);
}

#[test]
fn criterion_09_properties() {
    let mut c = Criterion::new(9);
    let groups = all_corpus();
    for g in &groups {
        let name = g.name().unwrap_or("?").to_string();
        let t = burnside_dixon(g).unwrap();
        let f = t.field();
        let cl = &t.classes;
        let n = g.order() as u64;
        // orthogonality: sum_k |C_k| χ_i(k) χ_j(k^-1) = δ_ij |G|
        let mut ortho = true;
        for i in 0..t.len() {
            for j in 0..t.len() {
                let mut s = 0;
                for k in 0..cl.len() {
                    let term = f.mul(t.values[i][k], t.values[j][cl.inverse_class[k]]);
                    s = f.add(s, f.mul(cl.sizes[k] as u64 % t.p, term));
                }
                ortho &= s == if i == j { n % t.p } else { 0 };
            }
        }
        c.check(ortho, format!("{name}: orthogonality"));
        let sum_d2: usize = t.degrees.iter().map(|d| d * d).sum();
        c.eq(&format!("{name}: sum of squared degrees"), sum_d2, g.order());

        let nfus = fusion_coefficients(&t).unwrap();
        let r = t.len();
        let assoc = (0..r).all(|i| {
            (0..r).all(|j| {
                (0..r).all(|k| {
                    (0..r).all(|l| {
                        let lhs: u32 = (0..r).map(|m| nfus[i][j][m] * nfus[m][k][l]).sum();
                        let rhs: u32 = (0..r).map(|m| nfus[j][k][m] * nfus[i][m][l]).sum();
                        lhs == rhs
                    })
                })
            })
        });
        c.check(assoc, format!("{name}: fusion associativity"));

        if g.order() <= 16 {
            let lifted = lift_to_cyclotomic(&t).unwrap();
            let nu = fs_indicators(&t).unwrap();
            for i in 0..r {
                let (mut re, mut im) = (0.0, 0.0);
                for x in 0..g.order() {
                    let (a, b) = lifted.values[i][cl.class_of[g.mul(x, x)]].approx();
                    re += a;
                    im += b;
                }
                let (re, im) = (re / g.order() as f64, im / g.order() as f64);
                let ok = (re - nu[i] as f64).abs() < 1e-9 && im.abs() < 1e-9;
                c.check(ok, format!("{name}: indicator of χ{} matches brute force", i + 1));
            }
        }

        let fd = rep_g_from_table(&t).unwrap();
        let w = witt_ring(&fd).unwrap();
        let ring = w.ring.as_ref().unwrap();
        let literal = w.basis.iter().enumerate().all(|(a, &x)| {
            w.basis.iter().enumerate().all(|(b, &y)| {
                w.basis.iter().enumerate().all(|(cc, &z)| ring.constants[a][b][cc] == nfus[x][y][z] % 2)
            })
        });
        c.check(literal, format!("{name}: Witt constants are fusion mod 2 on the basis"));
        let duals = dual_involution(&t).unwrap();
        c.check(w.basis.iter().all(|&i| duals[i] == i), format!("{name}: basis is self-dual"));

        if g.order() <= 32 {
            for a in normal_subgroups(g).into_iter().filter(|s| s.abelian && s.order() > 1) {
                let data = CocycleData::trivial(g, &a).unwrap();
                let d = deform_by_cocycle(g, &a, &data).unwrap();
                c.check(d.table() == g.table(), format!("{name}: trivial deformation keeps the table"));
            }
        }
    }
    c.finish(Duration::from_secs(60));
}

#[test]
fn criterion_10_bundled_corpus() {
    let mut c = Criterion::new(10);
    let report = screen_corpus(&corpus_dir(), None).unwrap();
    c.eq("file errors", report.errors.len(), 0);
    let ik = ["IK64", "IK64_b"];
    for g in &report.groups {
        let expected_open = ik.contains(&g.name.as_str());
        let ok = if expected_open {
            g.status == Status::Undecided
        } else {
            matches!(g.status, Status::Rigid | Status::Distinguished)
        };
        c.check(ok, format!("{}: {}", g.name, g.status));
    }
    let open: Vec<(String, String)> = report
        .pairs
        .iter()
        .filter(|p| p.verdict.is_undecided())
        .map(|p| (p.left.clone(), p.right.clone()))
        .collect();
    c.eq("undecided pairs", open, vec![("IK64".to_string(), "IK64_b".to_string())]);
    c.finish(Duration::from_secs(60));
}
