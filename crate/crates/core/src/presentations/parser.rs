use thiserror::Error;

use super::{GroupFile, GroupSource, PermGenSet, Presentation, Word, MAX_GENERATORS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{file}:{line}:{column}: {kind}")]
pub struct ParseError {
    pub file: String,
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty group file")]
    Empty,
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unterminated string")]
    UnterminatedString,
    #[error("expected {expected}, found {found}")]
    Expected { expected: String, found: String },
    #[error("undeclared generator `{0}`")]
    UndeclaredGenerator(String),
    #[error("generator `{0}` declared twice")]
    DuplicateGenerator(String),
    #[error("invalid generator name `{0}` (expected [a-z][a-z0-9]*)")]
    BadIdentifier(String),
    #[error("too many generators (at most {MAX_GENERATORS})")]
    TooManyGenerators,
    #[error("exponent 0 is not allowed")]
    ZeroExponent,
    #[error("integer out of range")]
    IntegerRange,
    #[error("`{0}` is not allowed in a {1} block")]
    WrongItem(String, &'static str),
    #[error("point {point} is outside degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} appears twice in a permutation")]
    RepeatedPoint(usize),
}

const KEYWORDS: [&str; 3] = ["gens", "rel", "gen"];

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Str(String),
    Sym(char),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(i) => format!("`{i}`"),
            Tok::Str(s) => format!("{s:?}"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::Eof => "end of file".to_string(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn tokens(mut self) -> Result<Vec<Token>, (usize, usize, ParseErrorKind)> {
        let mut out = Vec::new();
        loop {
            while let Some(&c) = self.chars.peek() {
                if c == '#' {
                    while let Some(&c) = self.chars.peek() {
                        if c == '\n' {
                            break;
                        }
                        self.bump();
                    }
                } else if c.is_whitespace() {
                    self.bump();
                } else {
                    break;
                }
            }
            let (line, column) = (self.line, self.column);
            let Some(&c) = self.chars.peek() else {
                out.push(Token { tok: Tok::Eof, line, column });
                return Ok(out);
            };
            let tok = if c.is_ascii_alphabetic() || c == '_' {
                let mut s = String::new();
                while let Some(&c) = self.chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        s.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                Tok::Ident(s)
            } else if c.is_ascii_digit() || c == '-' {
                let mut s = String::new();
                if c == '-' {
                    s.push(c);
                    self.bump();
                    if !self.chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                        return Err((line, column, ParseErrorKind::UnexpectedChar('-')));
                    }
                }
                while let Some(&c) = self.chars.peek() {
                    if c.is_ascii_digit() {
                        s.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                Tok::Int(s.parse().map_err(|_| (line, column, ParseErrorKind::IntegerRange))?)
            } else if c == '"' {
                self.bump();
                let mut s = String::new();
                loop {
                    match self.bump() {
                        Some('"') => break,
                        Some('\n') | None => return Err((line, column, ParseErrorKind::UnterminatedString)),
                        Some(c) => s.push(c),
                    }
                }
                Tok::Str(s)
            } else if "{};^()=[],".contains(c) {
                self.bump();
                Tok::Sym(c)
            } else {
                return Err((line, column, ParseErrorKind::UnexpectedChar(c)));
            };
            out.push(Token { tok, line, column });
        }
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Mode {
    Presentation,
    Permutations(usize),
}

struct Parser<'a> {
    file: &'a str,
    toks: Vec<Token>,
    pos: usize,
    gens: Vec<String>,
    relators: Vec<Word>,
    perms: Vec<Vec<usize>>,
}

type PResult<T> = Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn error_at(&self, tok: &Token, kind: ParseErrorKind) -> ParseError {
        ParseError {
            file: self.file.to_string(),
            line: tok.line,
            column: tok.column,
            kind,
        }
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        self.error_at(&self.toks[self.pos], kind)
    }

    fn expected(&self, what: &str) -> ParseError {
        self.error(ParseErrorKind::Expected {
            expected: what.to_string(),
            found: self.peek().describe(),
        })
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> PResult<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(self.expected(&format!("`{c}`")))
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> PResult<()> {
        match self.peek() {
            Tok::Ident(s) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.expected(&format!("`{kw}`"))),
        }
    }

    fn expect_int(&mut self) -> PResult<i64> {
        match *self.peek() {
            Tok::Int(i) => {
                self.pos += 1;
                Ok(i)
            }
            _ => Err(self.expected("integer")),
        }
    }

    fn file(mut self) -> PResult<GroupFile> {
        if *self.peek() == Tok::Eof {
            return Err(self.error(ParseErrorKind::Empty));
        }
        let header = matches!(self.peek(), Tok::Ident(s) if s == "group");
        if !header {
            self.items(Mode::Presentation, false)?;
            return Ok(GroupFile {
                name: None,
                source: GroupSource::Presentation(Presentation {
                    generators: self.gens,
                    relators: self.relators,
                }),
            });
        }
        self.pos += 1;
        let name = match self.next() {
            Token { tok: Tok::Str(s), .. } => s,
            t => {
                return Err(self.error_at(
                    &t,
                    ParseErrorKind::Expected {
                        expected: "group name string".into(),
                        found: t.tok.describe(),
                    },
                ))
            }
        };
        let mode = match self.peek().clone() {
            Tok::Ident(s) if s == "presentation" => {
                self.pos += 1;
                Mode::Presentation
            }
            Tok::Ident(s) if s == "permutations" => {
                self.pos += 1;
                self.expect_keyword("degree")?;
                let d = self.expect_int()?;
                if d < 1 {
                    return Err(self.expected("positive degree"));
                }
                Mode::Permutations(d as usize)
            }
            _ => return Err(self.expected("`presentation` or `permutations`")),
        };
        self.expect_sym('{')?;
        self.items(mode, true)?;
        self.expect_sym('}')?;
        if *self.peek() != Tok::Eof {
            return Err(self.expected("end of file"));
        }
        let source = match mode {
            Mode::Presentation => GroupSource::Presentation(Presentation {
                generators: self.gens,
                relators: self.relators,
            }),
            Mode::Permutations(degree) => GroupSource::Permutations(PermGenSet {
                degree,
                generators: self.perms,
            }),
        };
        Ok(GroupFile { name: Some(name), source })
    }

    fn items(&mut self, mode: Mode, braced: bool) -> PResult<()> {
        loop {
            let tok = self.toks[self.pos].clone();
            match &tok.tok {
                Tok::Eof if !braced => return Ok(()),
                Tok::Sym('}') if braced => return Ok(()),
                Tok::Ident(kw) if kw == "gens" || kw == "rel" || kw == "gen" => {
                    let block = match mode {
                        Mode::Presentation => "presentation",
                        Mode::Permutations(_) => "permutations",
                    };
                    match (kw.as_str(), mode) {
                        ("gens", Mode::Presentation) => {
                            self.pos += 1;
                            self.gens_item()?;
                        }
                        ("rel", Mode::Presentation) => {
                            self.pos += 1;
                            self.rel_item()?;
                        }
                        ("gen", Mode::Permutations(d)) => {
                            self.pos += 1;
                            self.gen_item(d)?;
                        }
                        _ => return Err(self.error_at(&tok, ParseErrorKind::WrongItem(kw.clone(), block))),
                    }
                }
                _ => return Err(self.expected("`gens`, `rel` or `gen`")),
            }
        }
    }

    fn gens_item(&mut self) -> PResult<()> {
        let mut any = false;
        while let Tok::Ident(name) = self.peek().clone() {
            if KEYWORDS.contains(&name.as_str()) {
                break;
            }
            let valid = name.starts_with(|c: char| c.is_ascii_lowercase())
                && name.chars().all(|c| c.is_ascii_lowercase() || c.is_ascii_digit());
            if !valid {
                return Err(self.error(ParseErrorKind::BadIdentifier(name)));
            }
            if self.gens.contains(&name) {
                return Err(self.error(ParseErrorKind::DuplicateGenerator(name)));
            }
            if self.gens.len() == MAX_GENERATORS {
                return Err(self.error(ParseErrorKind::TooManyGenerators));
            }
            self.gens.push(name);
            self.pos += 1;
            any = true;
        }
        if !any {
            return Err(self.expected("generator name"));
        }
        self.expect_sym(';')
    }

    fn rel_item(&mut self) -> PResult<()> {
        let lhs = self.word()?;
        let rel = if self.eat_sym('=') {
            let rhs = self.word()?;
            let mut r = lhs;
            r.append(&rhs.inverse());
            r
        } else {
            lhs
        };
        self.expect_sym(';')?;
        if !rel.is_empty() {
            self.relators.push(rel);
        }
        Ok(())
    }

    fn word(&mut self) -> PResult<Word> {
        let mut w = Word::default();
        let mut any = false;
        loop {
            let factor = match self.peek().clone() {
                Tok::Ident(name) => {
                    let Some(g) = self.gens.iter().position(|x| *x == name) else {
                        return Err(self.error(ParseErrorKind::UndeclaredGenerator(name)));
                    };
                    self.pos += 1;
                    Word::power(g, 1)
                }
                Tok::Int(1) => {
                    self.pos += 1;
                    Word::default()
                }
                Tok::Sym('[') => {
                    self.pos += 1;
                    let u = self.word()?;
                    self.expect_sym(',')?;
                    let v = self.word()?;
                    self.expect_sym(']')?;
                    Word::commutator(&u, &v)
                }
                _ => break,
            };
            let factor = if self.eat_sym('^') {
                let e = self.expect_int()?;
                if e == 0 {
                    self.pos -= 1;
                    return Err(self.error(ParseErrorKind::ZeroExponent));
                }
                factor.pow(e)
            } else {
                factor
            };
            w.append(&factor);
            any = true;
        }
        if !any {
            return Err(self.expected("word"));
        }
        Ok(w)
    }

    fn gen_item(&mut self, degree: usize) -> PResult<()> {
        let mut perm: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        let mut any = false;
        while self.eat_sym('(') {
            let mut cycle = Vec::new();
            while let Tok::Int(i) = *self.peek() {
                if i < 1 || i as usize > degree {
                    return Err(self.error(ParseErrorKind::PointOutOfRange {
                        point: i.max(0) as usize,
                        degree,
                    }));
                }
                let p = i as usize - 1;
                if std::mem::replace(&mut used[p], true) {
                    return Err(self.error(ParseErrorKind::RepeatedPoint(i as usize)));
                }
                cycle.push(p);
                self.pos += 1;
            }
            if cycle.is_empty() {
                return Err(self.expected("point"));
            }
            self.expect_sym(')')?;
            for k in 0..cycle.len() {
                perm[cycle[k]] = cycle[(k + 1) % cycle.len()];
            }
            any = true;
        }
        if !any {
            return Err(self.expected("`(`"));
        }
        self.expect_sym(';')?;
        self.perms.push(perm);
        Ok(())
    }
}

/// Parses a group file. `file_name` is only used in error messages.
pub fn parse_group_file(text: &str, file_name: &str) -> Result<GroupFile, ParseError> {
    let lexer = Lexer {
        chars: text.chars().peekable(),
        line: 1,
        column: 1,
    };
    let toks = lexer.tokens().map_err(|(line, column, kind)| ParseError {
        file: file_name.to_string(),
        line,
        column,
        kind,
    })?;
    Parser {
        file: file_name,
        toks,
        pos: 0,
        gens: Vec::new(),
        relators: Vec::new(),
        perms: Vec::new(),
    }
    .file()
}

/// Parses a single word over the given generator names, e.g. `a^2 b` or
/// `[a, b]`.
pub fn parse_word(text: &str, generators: &[String]) -> Result<Word, ParseError> {
    let name = "<word>";
    let lexer = Lexer {
        chars: text.chars().peekable(),
        line: 1,
        column: 1,
    };
    let toks = lexer.tokens().map_err(|(line, column, kind)| ParseError {
        file: name.to_string(),
        line,
        column,
        kind,
    })?;
    let mut p = Parser {
        file: name,
        toks,
        pos: 0,
        gens: generators.to_vec(),
        relators: Vec::new(),
        perms: Vec::new(),
    };
    let w = p.word()?;
    if *p.peek() != Tok::Eof {
        return Err(p.expected("end of word"));
    }
    Ok(w)
}
