//! The `wittlab` command-line front end.
//!
//! Every subcommand prints a human-readable report by default; `--json`
//! switches to pretty-printed JSON whose keys appear in a fixed order.
//! Exit codes: 0 success, 1 usage error, 2 unreadable or malformed input,
//! 3 computation error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::chartab::{burnside_dixon, fs_indicators, lift_to_cyclotomic};
use crate::ekg::{izumi_kosaki, verify_cocycle};
use crate::groups::are_isomorphic;
use crate::presentations::{parse_group_file, parse_word, GroupFile, DEFAULT_MAX_COSETS};
use crate::screen::{compare_bundles, invariant_bundle, screen_corpus_with, ScreenOptions};
use crate::witt::{double_witt_of_group, fingerprint, rep_g_fusion_data, rep_g_u_fusion_data, witt_ring};
use crate::{Error, FiniteGroup};

#[derive(Debug, Parser)]
#[command(name = "wittlab", version, about = "Witt rings and isocategoricity screens for finite groups")]
pub struct Cli {
    /// Coset table limit for presentations.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_COSETS)]
    pub max_cosets: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a group file, print it in canonical form and its order.
    Parse {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Character table with Frobenius–Schur indicators.
    Chartab {
        file: PathBuf,
        /// Print the table over F_p instead of the cyclotomic lift.
        #[arg(long)]
        modp: bool,
        #[arg(long)]
        json: bool,
    },
    /// Witt ring of Rep(G), or of Rep(G, u) for a central involution u.
    Witt {
        file: PathBuf,
        /// Word in the generators giving u (permutation generators are g1, g2, ...).
        #[arg(long, value_name = "WORD")]
        u: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Witt group of the Drinfeld double of an abelian group.
    Double {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Compare two groups.
    Compare {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Screen every *.grp file in a directory.
    Screen {
        dir: PathBuf,
        /// Only groups of this order.
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        json: bool,
        /// Compute bundles on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Build the order-64 Izumi–Kosaki pair.
    Ik {
        /// Write both groups as permutation group files into this directory.
        #[arg(long, value_name = "DIR")]
        emit: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let help = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = if help {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return if help { 0 } else { 1 };
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn read_file(path: &Path) -> Result<GroupFile, Error> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(parse_group_file(&text, &path.display().to_string())?)
}

fn load(path: &Path, max_cosets: usize) -> Result<FiniteGroup, Error> {
    let mut g = read_file(path)?.realize(max_cosets)?;
    if g.name().is_none() {
        g.set_name(path.file_stem().unwrap_or_default().to_string_lossy().into_owned());
    }
    Ok(g)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn name_of(g: &FiniteGroup) -> String {
    g.name().unwrap_or("G").to_string()
}

/// Runs a parsed command and returns what it prints on success.
pub fn execute(cli: &Cli) -> Result<String, Error> {
    let max = cli.max_cosets;
    match &cli.command {
        Command::Parse { file, json: as_json } => {
            let gf = read_file(file)?;
            let g = gf.realize(max)?;
            if *as_json {
                #[derive(Serialize)]
                struct Out<'a> {
                    file: &'a GroupFile,
                    order: usize,
                }
                return Ok(json(&Out {
                    file: &gf,
                    order: g.order(),
                }));
            }
            Ok(format!("{gf}# order {}\n", g.order()))
        }
        Command::Chartab { file, modp, json: as_json } => chartab(&load(file, max)?, *modp, *as_json),
        Command::Witt { file, u, json: as_json } => {
            let gf = read_file(file)?;
            let (mut g, images) = gf.realize_with_images(max)?;
            if g.name().is_none() {
                g.set_name(file.file_stem().unwrap_or_default().to_string_lossy().into_owned());
            }
            let u = match u {
                Some(word) => {
                    let w = parse_word(word, &gf.generator_names()).map_err(|e| Error::Usage(format!("--u: {}", e.kind)))?;
                    Some(w.evaluate(&g, &images))
                }
                None => None,
            };
            witt(&g, u, *as_json)
        }
        Command::Double { file, json: as_json } => {
            let g = load(file, max)?;
            let d = double_witt_of_group(&g)?;
            if *as_json {
                return Ok(json(&d));
            }
            let factors: Vec<String> = d.factors.iter().map(|f| format!("Z{f}")).collect();
            let a = if factors.is_empty() { "1".to_string() } else { factors.join(" x ") };
            let mut s = format!("{}: A = {a}\nWitt group rank {} over Z2, group only\n", name_of(&g), d.rank);
            for (a, psi) in &d.pairs {
                s.push_str(&format!("  g = {a:?}, ψ = {psi:?}\n"));
            }
            Ok(s)
        }
        Command::Compare { left, right, json: as_json } => {
            let a = invariant_bundle(&load(left, max)?)?;
            let b = invariant_bundle(&load(right, max)?)?;
            let v = compare_bundles(&a, &b);
            if *as_json {
                return Ok(json(&v));
            }
            let f = &v.equal;
            let mut s = format!("{} vs {}\n", v.left, v.right);
            for (label, ok) in [
                ("order", f.order),
                ("Grothendieck ring", f.k0),
                ("Witt ring", f.witt),
                ("self-dual count", f.self_dual),
                ("order profile", f.profile),
            ] {
                s.push_str(&format!("  {label:18} {}\n", if ok { "equal" } else { "differs" }));
            }
            if let Some(c) = &v.candidates {
                s.push_str(&format!("  candidates         {:?} vs {:?}", c.left, c.right));
                if c.central_excluded {
                    s.push_str(" (central candidates excluded)");
                }
                s.push('\n');
            }
            match v.verdict.witness() {
                Some(w) => s.push_str(&format!("not isocategorical: {w}\n")),
                None => s.push_str("undecided\n"),
            }
            Ok(s)
        }
        Command::Screen {
            dir,
            order,
            json: as_json,
            sequential,
        } => {
            let r = screen_corpus_with(
                dir,
                ScreenOptions {
                    order: *order,
                    parallel: !sequential,
                },
            )?;
            Ok(if *as_json {
                let mut s = r.to_json();
                s.push('\n');
                s
            } else {
                r.to_human()
            })
        }
        Command::Ik { emit, json: as_json } => {
            let ik = izumi_kosaki()?;
            verify_cocycle(&ik.cocycle)?;
            let iso = are_isomorphic(&ik.group, &ik.deformed);
            let v = compare_bundles(&invariant_bundle(&ik.group)?, &invariant_bundle(&ik.deformed)?);
            let mut written = Vec::new();
            if let Some(dir) = emit {
                std::fs::create_dir_all(dir).map_err(|source| Error::Io {
                    path: dir.display().to_string(),
                    source,
                })?;
                for (g, stem) in [(&ik.group, "ik64"), (&ik.deformed, "ik64_b")] {
                    let path = dir.join(format!("{stem}.grp"));
                    std::fs::write(&path, GroupFile::regular(g).to_string()).map_err(|source| Error::Io {
                        path: path.display().to_string(),
                        source,
                    })?;
                    written.push(path.display().to_string());
                }
            }
            if *as_json {
                #[derive(Serialize)]
                struct Out<'a> {
                    orders: [usize; 2],
                    cocycle_valid: bool,
                    isomorphic: bool,
                    distinguished_by: Option<crate::groups::Distinction>,
                    comparison: &'a crate::screen::PairVerdict,
                    written: Vec<String>,
                }
                return Ok(json(&Out {
                    orders: [ik.group.order(), ik.deformed.order()],
                    cocycle_valid: true,
                    isomorphic: iso.is_isomorphic(),
                    distinguished_by: match iso {
                        crate::groups::IsoOutcome::NotIsomorphic(d) => Some(d),
                        crate::groups::IsoOutcome::Isomorphic(_) => None,
                    },
                    comparison: &v,
                    written,
                }));
            }
            let mut s = format!(
                "{}: order {}\n{}: order {}\ncocycle: valid\nisomorphic: {}\ncomparison: {}\n",
                name_of(&ik.group),
                ik.group.order(),
                name_of(&ik.deformed),
                ik.deformed.order(),
                if iso.is_isomorphic() { "yes" } else { "no" },
                match v.verdict.witness() {
                    Some(w) => format!("not isocategorical ({w})"),
                    None => "undecided, every invariant agrees".into(),
                }
            );
            for w in written {
                s.push_str(&format!("wrote {w}\n"));
            }
            Ok(s)
        }
    }
}

fn chartab(g: &FiniteGroup, modp: bool, as_json: bool) -> Result<String, Error> {
    let t = burnside_dixon(g)?;
    let nu = fs_indicators(&t)?;
    let c = &t.classes;
    let lifted = if modp { None } else { Some(lift_to_cyclotomic(&t)?) };
    let cells: Vec<Vec<String>> = (0..t.len())
        .map(|i| match &lifted {
            Some(l) => l.values[i].iter().map(ToString::to_string).collect(),
            None => t.values[i].iter().map(ToString::to_string).collect(),
        })
        .collect();
    if as_json {
        #[derive(Serialize)]
        struct Class {
            representative: usize,
            size: usize,
            order: usize,
        }
        #[derive(Serialize)]
        struct Character {
            degree: usize,
            indicator: i8,
            values: Vec<String>,
        }
        #[derive(Serialize)]
        struct Out {
            name: String,
            order: usize,
            prime: u64,
            primitive_root: u64,
            modp: bool,
            classes: Vec<Class>,
            characters: Vec<Character>,
        }
        return Ok(json(&Out {
            name: name_of(g),
            order: g.order(),
            prime: t.p,
            primitive_root: t.z,
            modp,
            classes: (0..c.len())
                .map(|k| Class {
                    representative: c.representatives[k],
                    size: c.sizes[k],
                    order: c.element_orders[k],
                })
                .collect(),
            characters: cells
                .into_iter()
                .enumerate()
                .map(|(i, values)| Character {
                    degree: t.degrees[i],
                    indicator: nu[i],
                    values,
                })
                .collect(),
        }));
    }
    let mut header = vec!["".to_string(), "ν2".to_string()];
    header.extend((0..c.len()).map(|k| format!("{}/{}", c.element_orders[k], c.sizes[k])));
    let mut rows = vec![header];
    for (i, r) in cells.into_iter().enumerate() {
        let mut row = vec![format!("χ{}", i + 1), match nu[i] {
            0 => "0".to_string(),
            v => format!("{v:+}"),
        }];
        row.extend(r);
        rows.push(row);
    }
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|j| rows.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
        .collect();
    let mut s = format!("{}: order {}, {} classes, p = {}", name_of(g), g.order(), c.len(), t.p);
    s.push_str(if modp { " (values mod p)\n" } else { "\n" });
    s.push_str("columns: element order/class size\n");
    for r in rows {
        let line: Vec<String> = r.iter().zip(&widths).map(|(x, &w)| format!("{x:>w$}")).collect();
        s.push_str(line.join("  ").trim_end());
        s.push('\n');
    }
    Ok(s)
}

fn witt(g: &FiniteGroup, u: Option<usize>, as_json: bool) -> Result<String, Error> {
    let fd = match u {
        Some(u) => rep_g_u_fusion_data(g, u)?,
        None => rep_g_fusion_data(g)?,
    };
    let w = witt_ring(&fd)?;
    let fp = w.ring.as_ref().and_then(fingerprint);
    if as_json {
        #[derive(Serialize)]
        struct Out<'a> {
            name: String,
            u: Option<usize>,
            labels: &'a [String],
            d: Vec<String>,
            basis: &'a [usize],
            rank: usize,
            constants: Option<&'a Vec<Vec<Vec<u32>>>>,
            fingerprint: Option<String>,
        }
        return Ok(json(&Out {
            name: name_of(g),
            u,
            labels: &fd.labels,
            d: fd.d.iter().map(ToString::to_string).collect(),
            basis: &w.basis,
            rank: w.rank(),
            constants: w.ring.as_ref().map(|r| &r.constants),
            fingerprint: fp,
        }));
    }
    let mut s = format!("{}: {} simples, Witt rank {}\n", name_of(g), fd.rank(), w.rank());
    for i in 0..fd.rank() {
        let role = if w.basis.contains(&i) {
            "basis"
        } else if fd.dual[i] != i {
            "not self-dual"
        } else {
            "d = -1"
        };
        s.push_str(&format!("  {:4} dual {:4} d {:>3}  {role}\n", fd.labels[i], fd.labels[fd.dual[i]], fd.d[i].to_string()));
    }
    if let Some(r) = &w.ring {
        s.push_str("products mod 2:\n");
        for a in 0..r.len() {
            for b in a..r.len() {
                let terms: Vec<&str> = (0..r.len())
                    .filter(|&c| r.constants[a][b][c] % 2 == 1)
                    .map(|c| r.labels[c].as_str())
                    .collect();
                let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
                s.push_str(&format!("  {} · {} = {rhs}\n", r.labels[a], r.labels[b]));
            }
        }
    }
    if let Some(fp) = fp {
        s.push_str(&format!("fingerprint {fp}\n"));
    }
    Ok(s)
}
