use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use super::{compare_bundles, invariant_bundle, InvariantBundle, PairVerdict};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// The rigidity screen found no candidate subgroup.
    Rigid,
    /// Separated from every other corpus group of the same order.
    Distinguished,
    Undecided,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Rigid => "rigid",
            Status::Distinguished => "distinguished",
            Status::Undecided => "undecided",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateLine {
    pub order: usize,
    pub factors: Vec<usize>,
    pub central: bool,
    pub antisymmetric: bool,
    pub alternating: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupLine {
    pub file: String,
    pub name: String,
    pub order: usize,
    pub classes: usize,
    pub degrees: Vec<usize>,
    pub indicators: Vec<i8>,
    pub self_dual: usize,
    pub witt_rank: usize,
    pub k0_fingerprint: Option<String>,
    pub witt_fingerprint: Option<String>,
    pub candidates: Vec<CandidateLine>,
    /// Every candidate is central.
    pub central_only: bool,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FileError {
    pub file: String,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub groups: usize,
    pub rigid: usize,
    pub distinguished: usize,
    pub undecided: usize,
    pub pairs: usize,
    pub resolved_pairs: usize,
    pub undecided_pairs: usize,
    pub errors: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub groups: Vec<GroupLine>,
    pub pairs: Vec<PairVerdict>,
    pub errors: Vec<FileError>,
    pub summary: Summary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScreenOptions {
    pub order: Option<usize>,
    pub parallel: bool,
}

impl Default for ScreenOptions {
    fn default() -> Self {
        Self {
            order: None,
            parallel: true,
        }
    }
}

/// Screens every `*.grp` file in `dir`.
pub fn screen_corpus(dir: &Path, order: Option<usize>) -> Result<Report, Error> {
    screen_corpus_with(dir, ScreenOptions { order, ..Default::default() })
}

pub fn screen_corpus_with(dir: &Path, opts: ScreenOptions) -> Result<Report, Error> {
    let io = |source| Error::Io {
        path: dir.display().to_string(),
        source,
    };
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(io)?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()
        .map_err(io)?;
    files.retain(|p| p.is_file() && p.extension().is_some_and(|x| x == "grp"));
    files.sort();
    if files.is_empty() {
        return Err(Error::EmptyCorpus(dir.display().to_string()));
    }

    let load = |p: &PathBuf| -> (String, Result<Option<InvariantBundle>, Error>) {
        let file = p.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default();
        let res = crate::load_group(p).and_then(|mut g| {
            if g.name().is_none() {
                g.set_name(p.file_stem().unwrap_or_default().to_string_lossy().into_owned());
            }
            if opts.order.is_some_and(|n| n != g.order()) {
                return Ok(None);
            }
            invariant_bundle(&g).map(Some)
        });
        (file, res)
    };
    let loaded: Vec<_> = if opts.parallel {
        files.par_iter().map(load).collect()
    } else {
        files.iter().map(load).collect()
    };

    let mut bundles = Vec::new();
    let mut errors = Vec::new();
    for (file, res) in loaded {
        match res {
            Ok(Some(b)) => bundles.push((file, b)),
            Ok(None) => {}
            Err(e) => errors.push(FileError {
                file,
                message: e.to_string(),
            }),
        }
    }
    bundles.sort_by(|(fa, a), (fb, b)| (a.order(), &a.name, fa).cmp(&(b.order(), &b.name, fb)));

    let pair_index: Vec<(usize, usize)> = (0..bundles.len())
        .flat_map(|i| (i + 1..bundles.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| bundles[i].1.order() == bundles[j].1.order())
        .collect();
    let compare = |&(i, j): &(usize, usize)| compare_bundles(&bundles[i].1, &bundles[j].1);
    let pairs: Vec<PairVerdict> = if opts.parallel {
        pair_index.par_iter().map(compare).collect()
    } else {
        pair_index.iter().map(compare).collect()
    };

    let mut open = vec![false; bundles.len()];
    for (&(i, j), v) in pair_index.iter().zip(&pairs) {
        if v.verdict.is_undecided() {
            open[i] = true;
            open[j] = true;
        }
    }
    let groups: Vec<GroupLine> = bundles
        .iter()
        .zip(&open)
        .map(|((file, b), &open)| {
            let ev = &b.evidence;
            GroupLine {
                file: file.clone(),
                name: b.name.clone(),
                order: b.order(),
                classes: b.class_count(),
                degrees: b.degrees.clone(),
                indicators: b.indicators.clone(),
                self_dual: b.self_dual,
                witt_rank: b.witt_rank(),
                k0_fingerprint: b.k0_fingerprint.clone(),
                witt_fingerprint: b.witt_fingerprint.clone(),
                candidates: ev
                    .candidates
                    .iter()
                    .map(|c| CandidateLine {
                        order: c.subgroup.order(),
                        factors: c.factors().to_vec(),
                        central: c.central,
                        antisymmetric: c.antisymmetric,
                        alternating: c.alternating,
                    })
                    .collect(),
                central_only: !ev.is_rigid() && ev.non_central().next().is_none(),
                status: if ev.is_rigid() {
                    Status::Rigid
                } else if open {
                    Status::Undecided
                } else {
                    Status::Distinguished
                },
            }
        })
        .collect();

    let count = |s: Status| groups.iter().filter(|g| g.status == s).count();
    let undecided_pairs = pairs.iter().filter(|p| p.verdict.is_undecided()).count();
    let summary = Summary {
        groups: groups.len(),
        rigid: count(Status::Rigid),
        distinguished: count(Status::Distinguished),
        undecided: count(Status::Undecided),
        pairs: pairs.len(),
        resolved_pairs: pairs.len() - undecided_pairs,
        undecided_pairs,
        errors: errors.len(),
    };
    Ok(Report {
        groups,
        pairs,
        errors,
        summary,
    })
}

fn types(c: &[CandidateLine]) -> String {
    if c.is_empty() {
        return "-".into();
    }
    c.iter()
        .map(|c| {
            let f: Vec<String> = c.factors.iter().map(ToString::to_string).collect();
            let mut s = format!("({})", f.join(","));
            if c.central {
                s.push('c');
            }
            if !c.alternating {
                s.push('\'');
            }
            s
        })
        .collect::<Vec<_>>()
        .join(" ")
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_human(&self) -> String {
        let mut s = String::new();
        let w = self.groups.iter().map(|g| g.name.chars().count()).max().unwrap_or(4).max(4);
        let _ = writeln!(s, "{:>5}  {:w$}  {:>7}  {:>9}  {:>4}  {:14}  candidates", "order", "name", "classes", "self-dual", "witt", "status");
        for g in &self.groups {
            let mut status = g.status.to_string();
            if g.central_only {
                status.push('*');
            }
            let _ = writeln!(
                s,
                "{:>5}  {:w$}  {:>7}  {:>9}  {:>4}  {:14}  {}",
                g.order,
                g.name,
                g.classes,
                g.self_dual,
                g.witt_rank,
                status,
                types(&g.candidates)
            );
        }
        if !self.pairs.is_empty() {
            s.push('\n');
            for p in &self.pairs {
                let v = match p.verdict.witness() {
                    Some(w) => format!("not isocategorical ({w})"),
                    None => "undecided".into(),
                };
                let note = match &p.candidates {
                    Some(c) if c.central_excluded && p.verdict.witness().is_some() => "  [central candidates excluded]",
                    _ => "",
                };
                let _ = writeln!(s, "{} vs {}: {v}{note}", p.left, p.right);
            }
        }
        for e in &self.errors {
            let _ = writeln!(s, "error: {}: {}", e.file, e.message);
        }
        let m = &self.summary;
        let _ = writeln!(
            s,
            "\n{} groups: {} rigid, {} distinguished, {} undecided; {} pairs: {} resolved, {} undecided; {} errors",
            m.groups, m.rigid, m.distinguished, m.undecided, m.pairs, m.resolved_pairs, m.undecided_pairs, m.errors
        );
        s.push_str("c = central, ' = anti-symmetric but not alternating, * = only central candidates\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_directory_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        assert!(matches!(screen_corpus(dir.path(), None), Err(Error::EmptyCorpus(_))));
    }

    #[test]
    fn malformed_file_is_reported_and_skipped() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("a.grp"), "group \"Z3\" presentation { gens a; rel a^3; }\n").unwrap();
        std::fs::write(dir.path().join("b.grp"), "group oops\n").unwrap();
        let r = screen_corpus(dir.path(), None).unwrap();
        assert_eq!(r.groups.len(), 1);
        assert_eq!(r.errors.len(), 1);
        assert_eq!(r.errors[0].file, "b.grp");
        assert_eq!(r.groups[0].status, Status::Rigid);
    }
}
