//! Group expressions such as `C2 x D16` or `E(3,2) x table:g.txt`.
//!
//! ```text
//! expr := term ('x' term)*
//! term := 'C' INT | 'D' INT | 'Q' INT | 'E(' INT ',' INT ')' | 'table:' PATH
//! ```
//!
//! `D` and `Q` take the group order. Letters are case-insensitive and
//! whitespace is ignored, except inside a table path, which runs to the next
//! ` x ` separator or the end of the input.

use std::fmt;
use std::str::FromStr;

use elemorder_core::abelian::AbelianGroup;
use elemorder_core::numcore::{is_prime, Natural};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Cyclic(u64),
    Dihedral(u64),
    Dicyclic(u64),
    ElemAbelian(u64, u32),
    Table(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupExpr {
    terms: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("term {term}: {msg}")]
    Parameter { term: String, msg: String },
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Cyclic(k) => write!(f, "C{k}"),
            Term::Dihedral(n) => write!(f, "D{n}"),
            Term::Dicyclic(n) => write!(f, "Q{n}"),
            Term::ElemAbelian(p, k) => write!(f, "E({p},{k})"),
            Term::Table(path) => write!(f, "table:{path}"),
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl Term {
    fn check(self) -> Result<Term, ParseError> {
        let bad = |msg: &str| ParseError::Parameter {
            term: self.to_string(),
            msg: msg.into(),
        };
        match self {
            Term::Cyclic(0) => Err(bad("cyclic order must be positive")),
            Term::Dihedral(n) if n < 4 || n % 2 == 1 => {
                Err(bad("dihedral order must be even and at least 4"))
            }
            Term::Dicyclic(n) if n < 8 || n % 4 != 0 => {
                Err(bad("dicyclic order must be a multiple of 4 and at least 8"))
            }
            Term::ElemAbelian(p, _) if !is_prime(p) => Err(bad("first argument must be prime")),
            Term::ElemAbelian(_, 0) => Err(bad("rank must be positive")),
            Term::Table(ref p) if p.is_empty() => Err(bad("empty path")),
            t => Ok(t),
        }
    }

    /// Uses only the symbolic abelian engine.
    pub fn is_abelian_symbolic(&self) -> bool {
        matches!(self, Term::Cyclic(_) | Term::ElemAbelian(..))
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.eq_ignore_ascii_case(&want) => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(c) => self.err(format!("expected '{want}', found '{c}'")),
            None => self.err(format!("expected '{want}', found end of input")),
        }
    }

    /// Digits, with interior whitespace ignored.
    fn int(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        let mut any = false;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(c as u64 - '0' as u64))
                        .ok_or(ParseError::Syntax {
                            pos: start,
                            msg: "integer too large".into(),
                        })?;
                    self.pos += 1;
                    any = true;
                }
                _ => break,
            }
        }
        if !any {
            return self.err("expected an integer");
        }
        Ok(value)
    }

    fn starts_with_ci(&self, word: &str) -> bool {
        self.src[self.pos..]
            .get(..word.len())
            .is_some_and(|head| head.eq_ignore_ascii_case(word))
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        self.skip_ws();
        if self.starts_with_ci("table:") {
            self.pos += "table:".len();
            let rest = &self.src[self.pos..];
            let end = find_separator(rest).unwrap_or(rest.len());
            let path = rest[..end].trim().to_string();
            self.pos += end;
            return Term::Table(path).check();
        }
        let Some(c) = self.peek() else {
            return self.err("expected a term, found end of input");
        };
        self.pos += c.len_utf8();
        let term = match c.to_ascii_uppercase() {
            'C' => Term::Cyclic(self.int()?),
            'D' => Term::Dihedral(self.int()?),
            'Q' => Term::Dicyclic(self.int()?),
            'E' => {
                self.expect('(')?;
                let p = self.int()?;
                self.expect(',')?;
                let k = self.int()?;
                self.expect(')')?;
                let k = u32::try_from(k).map_err(|_| ParseError::Syntax {
                    pos: self.pos,
                    msg: "rank too large".into(),
                })?;
                Term::ElemAbelian(p, k)
            }
            _ => {
                self.pos -= c.len_utf8();
                return self.err(format!("unknown term starting with '{c}'"));
            }
        };
        term.check()
    }
}

/// Offset of the first whitespace-delimited `x` in a table path.
fn find_separator(s: &str) -> Option<usize> {
    let b = s.as_bytes();
    (1..b.len().saturating_sub(1)).find(|&i| {
        (b[i] == b'x' || b[i] == b'X')
            && b[i - 1].is_ascii_whitespace()
            && b[i + 1].is_ascii_whitespace()
    })
}

pub fn parse_group(text: &str) -> Result<GroupExpr, ParseError> {
    let mut cur = Cursor { src: text, pos: 0 };
    let mut terms = vec![cur.term()?];
    loop {
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some('x' | 'X' | '×') => {
                cur.pos += cur.peek().unwrap().len_utf8();
                terms.push(cur.term()?);
            }
            Some(c) => return cur.err(format!("expected 'x' or end of input, found '{c}'")),
        }
    }
    Ok(GroupExpr { terms })
}

impl FromStr for GroupExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_group(s)
    }
}

impl GroupExpr {
    pub fn new(terms: Vec<Term>) -> Result<Self, ParseError> {
        if terms.is_empty() {
            return Err(ParseError::Syntax {
                pos: 0,
                msg: "empty product".into(),
            });
        }
        let terms = terms
            .into_iter()
            .map(Term::check)
            .collect::<Result<_, _>>()?;
        Ok(GroupExpr { terms })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_abelian_symbolic(&self) -> bool {
        self.terms.iter().all(Term::is_abelian_symbolic)
    }

    /// The symbolic group, when every term is cyclic or elementary abelian.
    pub fn to_abelian(&self) -> Option<AbelianGroup> {
        let mut acc = AbelianGroup::trivial();
        for t in &self.terms {
            let a = match *t {
                Term::Cyclic(k) => AbelianGroup::cyclic(k).ok()?,
                Term::ElemAbelian(p, k) => AbelianGroup::elementary(p, k).ok()?,
                _ => return None,
            };
            acc = acc.product(&a);
        }
        Some(acc)
    }

    /// Order of the product, or `None` when a table term has to be read
    /// first.
    pub fn order(&self) -> Option<Natural> {
        let mut n = Natural::one();
        for t in &self.terms {
            let f = match *t {
                Term::Cyclic(k) | Term::Dihedral(k) | Term::Dicyclic(k) => Natural::from(k),
                Term::ElemAbelian(p, k) => Natural::from(p).pow(k),
                Term::Table(_) => return None,
            };
            n = n * f;
        }
        Some(n)
    }
}
