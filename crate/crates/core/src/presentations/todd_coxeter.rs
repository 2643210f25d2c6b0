//! HLT coset enumeration over the trivial subgroup, with lookahead when the
//! table fills up.

use std::collections::VecDeque;

use thiserror::Error;

use super::{Letter, Presentation};
use crate::groups::{FiniteGroup, GroupError};

pub const DEFAULT_MAX_COSETS: usize = 65_536;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("max_cosets must be at least 1")]
    ZeroBound,
    #[error("coset enumeration exceeded {0} cosets (group too large or infinite)")]
    TooManyCosets(usize),
    #[error(transparent)]
    Group(#[from] GroupError),
}

struct CosetTable {
    width: usize,
    rows: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    queue: VecDeque<u32>,
}

impl CosetTable {
    fn new(generators: usize) -> Self {
        let width = 2 * generators;
        Self {
            width,
            rows: vec![NONE; width],
            parent: vec![0],
            live: 1,
            queue: VecDeque::new(),
        }
    }

    fn len(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.rows[c as usize * self.width + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.rows[c as usize * self.width + x] = d;
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> u32 {
        let d = self.parent.len() as u32;
        self.parent.push(d);
        self.rows.extend(std::iter::repeat_n(NONE, self.width));
        self.live += 1;
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        d
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (keep, kill) = if a < b { (a, b) } else { (b, a) };
        self.parent[kill as usize] = keep;
        self.live -= 1;
        self.queue.push_back(kill);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        while let Some(g) = self.queue.pop_front() {
            for x in 0..self.width {
                let d = self.get(g, x);
                if d == NONE {
                    continue;
                }
                self.set(g, x, NONE);
                if self.get(d, x ^ 1) == g {
                    self.set(d, x ^ 1, NONE);
                }
                let mu = self.rep(g);
                let nu = self.rep(d);
                let mx = self.get(mu, x);
                if mx != NONE {
                    self.merge(nu, mx);
                } else {
                    let nx = self.get(nu, x ^ 1);
                    if nx != NONE {
                        self.merge(mu, nx);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, x ^ 1, mu);
                    }
                }
            }
        }
    }

    /// Scans `word` at coset `c`, defining new cosets where needed. Returns
    /// `false` if the table is full.
    fn scan_and_fill(&mut self, c: u32, word: &[usize], max: usize) -> bool {
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = word.len();
        loop {
            while i < j && self.get(f, word[i]) != NONE {
                f = self.get(f, word[i]);
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return true;
            }
            while j > i && self.get(b, word[j - 1] ^ 1) != NONE {
                b = self.get(b, word[j - 1] ^ 1);
                j -= 1;
            }
            if j < i + 1 {
                self.coincidence(f, b);
                return true;
            }
            if j == i + 1 {
                let x = word[i];
                self.set(f, x, b);
                self.set(b, x ^ 1, f);
                return true;
            }
            if self.len() >= max {
                return false;
            }
            self.define(f, word[i]);
        }
    }

    /// Scans without defining; deductions and coincidences only.
    fn scan(&mut self, c: u32, word: &[usize]) {
        let mut f = c;
        let mut i = 0usize;
        let mut j = word.len();
        while i < j && self.get(f, word[i]) != NONE {
            f = self.get(f, word[i]);
            i += 1;
        }
        if i == j {
            if f != c {
                self.coincidence(f, c);
            }
            return;
        }
        let mut b = c;
        while j > i && self.get(b, word[j - 1] ^ 1) != NONE {
            b = self.get(b, word[j - 1] ^ 1);
            j -= 1;
        }
        if j < i + 1 {
            self.coincidence(f, b);
        } else if j == i + 1 {
            let x = word[i];
            self.set(f, x, b);
            self.set(b, x ^ 1, f);
        }
    }

    fn lookahead(&mut self, relators: &[Vec<usize>]) {
        let mut c = 0u32;
        while (c as usize) < self.len() {
            for r in relators {
                if !self.is_live(c) {
                    break;
                }
                self.scan(c, r);
            }
            c += 1;
        }
    }

    /// Drops dead cosets, renumbering the live ones in order. Returns the
    /// new number of `c` (or of the first live coset after it).
    fn compact(&mut self, c: u32) -> u32 {
        let mut map = vec![NONE; self.len()];
        let mut next = 0u32;
        for k in 0..self.len() as u32 {
            if self.is_live(k) {
                map[k as usize] = next;
                next += 1;
            }
        }
        let mut rows = Vec::with_capacity(next as usize * self.width);
        for k in 0..self.len() as u32 {
            if !self.is_live(k) {
                continue;
            }
            for x in 0..self.width {
                let d = self.get(k, x);
                rows.push(if d == NONE { NONE } else { map[d as usize] });
            }
        }
        let new_c = (c as usize..self.len())
            .find(|&k| map[k] != NONE)
            .map_or(next, |k| map[k]);
        self.rows = rows;
        self.parent = (0..next).collect();
        self.live = next as usize;
        new_c
    }
}

/// Enumerates the cosets of the trivial subgroup, producing the regular
/// representation of the presented group as a Cayley table.
///
/// Element indices follow the standardized coset order (breadth-first from
/// the identity over `g1, g1^-1, g2, ...`), so the result is deterministic.
pub fn coset_enumeration(p: &Presentation, max_cosets: usize) -> Result<FiniteGroup, EnumerationError> {
    if max_cosets == 0 {
        return Err(EnumerationError::ZeroBound);
    }
    let ngens = p.generator_count();
    if ngens == 0 {
        return Ok(FiniteGroup::trivial());
    }
    let relators: Vec<Vec<usize>> = p
        .relators
        .iter()
        .map(|r| r.letters().iter().map(|l| l.column()).collect())
        .collect();
    let mut t = CosetTable::new(ngens);
    let mut c = 0u32;
    while (c as usize) < t.len() {
        if t.is_live(c) {
            let mut full = false;
            for r in &relators {
                if !t.is_live(c) {
                    break;
                }
                if !t.scan_and_fill(c, r, max_cosets) {
                    full = true;
                    break;
                }
            }
            if !full && t.is_live(c) {
                for x in 0..t.width {
                    if t.get(c, x) == NONE {
                        if t.len() >= max_cosets {
                            full = true;
                            break;
                        }
                        t.define(c, x);
                    }
                }
            }
            if full {
                t.lookahead(&relators);
                c = t.compact(c);
                if t.len() >= max_cosets {
                    return Err(EnumerationError::TooManyCosets(max_cosets));
                }
                continue;
            }
        }
        c += 1;
    }
    c = t.compact(0);
    debug_assert_eq!(c, 0);
    Ok(regular_group(&t, ngens)?)
}

/// Standardizes the completed table and builds the Cayley table.
fn regular_group(t: &CosetTable, ngens: usize) -> Result<FiniteGroup, GroupError> {
    let n = t.len();
    let width = t.width;
    // breadth-first renumbering
    let mut order = vec![NONE; n];
    let mut bfs = Vec::with_capacity(n);
    let mut tree: Vec<(u32, usize)> = Vec::with_capacity(n);
    order[0] = 0;
    bfs.push(0u32);
    tree.push((NONE, 0));
    let mut head = 0;
    while head < bfs.len() {
        let c = bfs[head];
        head += 1;
        for x in 0..width {
            let d = t.get(c, x);
            if order[d as usize] == NONE {
                order[d as usize] = bfs.len() as u32;
                bfs.push(d);
                tree.push((order[c as usize], x));
            }
        }
    }
    let act = |c: usize, x: usize| order[t.get(bfs[c], x) as usize] as usize;
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        table[a * n] = a as u32;
    }
    // a * c = (a * parent(c)) acted on by the tree letter of c
    for (c, &(parent, x)) in tree.iter().enumerate().skip(1) {
        for a in 0..n {
            let ap = table[a * n + parent as usize] as usize;
            table[a * n + c] = act(ap, x) as u32;
        }
    }
    let generators = (0..ngens).map(|g| act(0, Letter::new(g, false).column())).collect();
    FiniteGroup::from_table(n, table, generators, None)
}
