use std::path::Path;

use wittlab::screen::{cor14_screen, screen_corpus, screen_corpus_with, ScreenOptions, Status};

fn corpus() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/corpus"))
}

#[test]
fn parallel_and_sequential_reports_are_identical() {
    let par = screen_corpus_with(corpus(), ScreenOptions { order: Some(16), parallel: true }).unwrap();
    let seq = screen_corpus_with(corpus(), ScreenOptions { order: Some(16), parallel: false }).unwrap();
    assert_eq!(par.to_json(), seq.to_json());
    assert_eq!(par.to_human(), seq.to_human());
}

#[test]
fn order_filter_and_ordering() {
    let r = screen_corpus(corpus(), Some(8)).unwrap();
    let names: Vec<_> = r.groups.iter().map(|g| g.name.as_str()).collect();
    assert_eq!(names, ["D8", "Q8", "Z2xZ2xZ2", "Z4xZ2", "Z8"]);
    assert_eq!(r.pairs.len(), 10);
    let dq = r.pairs.iter().find(|p| p.left == "D8" && p.right == "Q8").unwrap();
    assert_eq!(dq.verdict.witness(), Some(wittlab::screen::Witness::WittRing));
}

#[test]
fn order_16_named_pairs() {
    let r = screen_corpus(corpus(), Some(16)).unwrap();
    let witness = |a: &str, b: &str| {
        r.pairs
            .iter()
            .find(|p| (p.left == a && p.right == b) || (p.left == b && p.right == a))
            .and_then(|p| p.verdict.witness())
    };
    assert_eq!(witness("D16", "Q16"), Some(wittlab::screen::Witness::WittRing));
    assert_eq!(witness("G3_16", "G4_16"), Some(wittlab::screen::Witness::WittRing));
}

#[test]
fn rigid_groups_are_reported_rigid() {
    let r = screen_corpus(corpus(), Some(16)).unwrap();
    for line in &r.groups {
        let g = wittlab::load_group(&corpus().join(&line.file)).unwrap();
        assert_eq!(cor14_screen(&g).is_rigid(), line.status == Status::Rigid, "{}", line.name);
    }
}

#[test]
fn every_verdict_carries_a_witness() {
    let r = screen_corpus(corpus(), None).unwrap();
    for p in &r.pairs {
        if let Some(w) = p.verdict.witness() {
            let e = p.equal;
            let flagged = match w {
                wittlab::screen::Witness::Order => !e.order,
                wittlab::screen::Witness::GrothendieckRing => !e.k0,
                wittlab::screen::Witness::WittRing => !e.witt,
                wittlab::screen::Witness::SelfDualCount => !e.self_dual,
                wittlab::screen::Witness::OrderProfile => !e.profile,
                wittlab::screen::Witness::CandidateSubgroups => p.candidates.as_ref().is_some_and(|c| c.disjoint()),
            };
            assert!(flagged, "{} vs {}", p.left, p.right);
        }
    }
}

#[test]
fn json_report_shape() {
    let r = screen_corpus(corpus(), Some(8)).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys, ["errors", "groups", "pairs", "summary"]);
    assert_eq!(v["summary"]["groups"], 5);
    assert_eq!(v["groups"][1]["status"], "rigid");
    assert_eq!(v["pairs"][0]["verdict"]["kind"], "not-isocategorical");
}
