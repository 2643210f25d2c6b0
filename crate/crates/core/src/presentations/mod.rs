//! Group descriptions and their realization as concrete finite groups.
//!
//! A group file holds either a finite presentation or a list of permutation
//! generators:
//!
//! ```text
//! # dihedral group of order 8
//! group "D8" presentation {
//!     gens a b;
//!     rel a^4;
//!     rel b^2;
//!     rel b^-1 a b = a^-1;
//! }
//!
//! group "S3" permutations degree 3 {
//!     gen (1 2);
//!     gen (1 2 3);
//! }
//! ```
//!
//! A bare list of `gens`/`rel` items without a header is read as an
//! unnamed presentation. Besides plain generator powers, words may contain
//! commutators `[u, v]`, which expand to `u^-1 v^-1 u v`, and the literal
//! `1` for the empty word.

mod parser;
mod todd_coxeter;

use std::fmt;

use serde::Serialize;

use crate::groups::{FiniteGroup, GroupError};

pub use parser::{parse_group_file, parse_word, ParseError, ParseErrorKind};
pub use todd_coxeter::{coset_enumeration, EnumerationError, DEFAULT_MAX_COSETS};

/// A letter of a word: generator index and exponent `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Self { generator, inverse }
    }

    pub fn inv(self) -> Self {
        Self {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    /// Column of the coset table: `2g` for `g`, `2g + 1` for `g^-1`.
    pub(crate) fn column(self) -> usize {
        2 * self.generator + usize::from(self.inverse)
    }
}

/// A word in the generators, kept freely reduced.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        let mut w = Word(Vec::with_capacity(letters.len()));
        for l in letters {
            w.push(l);
        }
        w
    }

    /// `g^e` for a nonzero exponent.
    pub fn power(generator: usize, exponent: i64) -> Self {
        let letter = Letter::new(generator, exponent < 0);
        Word(vec![letter; exponent.unsigned_abs() as usize])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn push(&mut self, l: Letter) {
        if self.0.last() == Some(&l.inv()) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn append(&mut self, other: &Word) {
        for &l in &other.0 {
            self.push(l);
        }
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn pow(&self, exponent: i64) -> Word {
        let base = if exponent < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::default();
        for _ in 0..exponent.unsigned_abs() {
            out.append(&base);
        }
        out
    }

    /// `u^-1 v^-1 u v`.
    pub fn commutator(u: &Word, v: &Word) -> Word {
        let mut out = u.inverse();
        out.append(&v.inverse());
        out.append(u);
        out.append(v);
        out
    }

    /// Evaluates the word on a concrete group, given the images of the generators.
    pub fn evaluate(&self, group: &FiniteGroup, images: &[usize]) -> usize {
        self.0.iter().fold(0, |acc, l| {
            let g = images[l.generator];
            let g = if l.inverse { group.inv(g) } else { g };
            group.mul(acc, g)
        })
    }

    /// Renders the word with run-length exponents, e.g. `b^-1 a b a`.
    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        WordDisplay { word: self, names }
    }
}

struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = &self.word.0;
        if letters.is_empty() {
            return write!(f, "1");
        }
        let mut i = 0;
        let mut first = true;
        while i < letters.len() {
            let l = letters[i];
            let mut run = 1;
            while i + run < letters.len() && letters[i + run] == l {
                run += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let name = &self.names[l.generator];
            let exp = if l.inverse { -(run as i64) } else { run as i64 };
            if exp == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{exp}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// A finite presentation `<gens | relators>`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

/// Maximum number of generators a presentation may declare.
pub const MAX_GENERATORS: usize = 8;

impl Presentation {
    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }
}

/// Permutation generators on `{1..degree}`, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PermGenSet {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

impl PermGenSet {
    /// Builds a generator set, checking that every generator is a bijection.
    pub fn new(degree: usize, generators: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        for (i, g) in generators.iter().enumerate() {
            let mut seen = vec![false; degree];
            if g.len() != degree || g.iter().any(|&x| x >= degree || std::mem::replace(&mut seen[x], true)) {
                return Err(GroupError::NotAPermutation { index: i });
            }
        }
        Ok(Self { degree, generators })
    }
}

/// The two kinds of group description.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupSource {
    Presentation(Presentation),
    Permutations(PermGenSet),
}

/// A parsed group file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupFile {
    pub name: Option<String>,
    pub source: GroupSource,
}

impl GroupFile {
    /// Realizes the description as a Cayley-table group.
    pub fn realize(&self, max_cosets: usize) -> Result<FiniteGroup, crate::Error> {
        let mut group = match &self.source {
            GroupSource::Presentation(p) => coset_enumeration(p, max_cosets)?,
            GroupSource::Permutations(p) => FiniteGroup::from_permutations(p)?,
        };
        if let Some(name) = &self.name {
            group.set_name(name.clone());
        }
        Ok(group)
    }
}

impl GroupFile {
    /// The left regular representation of `g` on the points `1..=|G|`, one
    /// permutation per generator of `g`.
    pub fn regular(g: &FiniteGroup) -> Self {
        let generators = g
            .generators()
            .iter()
            .map(|&s| (0..g.order()).map(|x| g.mul(s, x)).collect())
            .collect();
        Self {
            name: g.name().map(str::to_string),
            source: GroupSource::Permutations(PermGenSet {
                degree: g.order(),
                generators,
            }),
        }
    }

    /// Generator names: declared names for presentations, `g1, g2, ...`
    /// for permutation generators.
    pub fn generator_names(&self) -> Vec<String> {
        match &self.source {
            GroupSource::Presentation(p) => p.generators.clone(),
            GroupSource::Permutations(p) => (1..=p.generators.len()).map(|i| format!("g{i}")).collect(),
        }
    }

    /// [`GroupFile::realize`], also returning the element of each generator.
    pub fn realize_with_images(&self, max_cosets: usize) -> Result<(FiniteGroup, Vec<usize>), crate::Error> {
        let (mut group, images) = match &self.source {
            GroupSource::Presentation(p) => {
                let g = coset_enumeration(p, max_cosets)?;
                let images = g.generators()[..p.generator_count()].to_vec();
                (g, images)
            }
            GroupSource::Permutations(p) => FiniteGroup::from_permutations_with_images(p)?,
        };
        if let Some(name) = &self.name {
            group.set_name(name.clone());
        }
        Ok((group, images))
    }
}

impl fmt::Display for GroupFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.name.as_deref().unwrap_or("unnamed");
        match &self.source {
            GroupSource::Presentation(p) => {
                writeln!(f, "group {name:?} presentation {{")?;
                if !p.generators.is_empty() {
                    writeln!(f, "    gens {};", p.generators.join(" "))?;
                }
                for r in &p.relators {
                    writeln!(f, "    rel {};", r.display(&p.generators))?;
                }
            }
            GroupSource::Permutations(p) => {
                writeln!(f, "group {name:?} permutations degree {} {{", p.degree)?;
                for g in &p.generators {
                    writeln!(f, "    gen {};", cycle_notation(g))?;
                }
            }
        }
        writeln!(f, "}}")
    }
}

/// Disjoint cycle notation, 1-based; the identity prints as `(1)`.
pub fn cycle_notation(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            first = false;
            out.push_str(&(x + 1).to_string());
            x = perm[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("(1)");
    }
    out
}
