//! Parser for `setM` arguments:
//!
//! ```text
//! mset   = term { ("U" | "+" | "-") term } ;
//! term   = interval | points | "R" | "empty" ;
//! interval = ("(" | "[") bound "," bound (")" | "]") ;
//! points = "{" [ rational { "," rational } ] "}" ;
//! bound  = rational | "inf" | "+inf" | "-inf" ;
//! ```
//!
//! Operators apply left to right. `-` only accepts point sets.

use std::collections::BTreeSet;

use distalg_core::scalar::parse_rational;
use distalg_core::{Bound, Interval, MSet, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{col}: {message}")]
pub struct MSetSyntaxError {
    /// 1-based column within the set expression.
    pub col: usize,
    pub message: String,
}

enum Term {
    Set(MSet),
    Points(Vec<Rational>),
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn col(&self) -> usize {
        self.src[..self.pos].chars().count() + 1
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, MSetSyntaxError> {
        Err(MSetSyntaxError { col: self.col(), message: message.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), MSetSyntaxError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(format!("expected `{c}`"))
        }
    }

    /// Longest run of characters that can belong to a number or keyword.
    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let mut len = 0;
        for (i, c) in rest.char_indices() {
            let sign_ok = i == 0 && (c == '-' || c == '+');
            if !(c.is_ascii_alphanumeric() || c == '/' || sign_ok) {
                break;
            }
            len = i + c.len_utf8();
        }
        self.pos += len;
        &rest[..len]
    }

    fn rational(&mut self) -> Result<Rational, MSetSyntaxError> {
        let start = self.pos;
        let w = self.word();
        parse_rational(w).or_else(|_| {
            self.pos = start;
            self.skip_ws();
            self.error(format!("expected a rational number, found {:?}", w))
        })
    }

    fn bound(&mut self) -> Result<Bound, MSetSyntaxError> {
        let start = self.pos;
        match self.word() {
            "inf" | "+inf" => Ok(Bound::PosInf),
            "-inf" => Ok(Bound::NegInf),
            _ => {
                self.pos = start;
                Ok(Bound::Finite(self.rational()?))
            }
        }
    }

    fn term(&mut self) -> Result<Term, MSetSyntaxError> {
        match self.peek() {
            Some(open @ ('(' | '[')) => {
                self.pos += 1;
                let lo = self.bound()?;
                self.expect(',')?;
                let hi = self.bound()?;
                let hi_closed = match self.peek() {
                    Some(')') => false,
                    Some(']') => true,
                    _ => return self.error("expected `)` or `]`"),
                };
                self.pos += 1;
                if lo > hi {
                    return self.error(format!("interval bounds out of order: {lo} > {hi}"));
                }
                let iv = Interval::new(lo, hi, open == '[', hi_closed);
                Ok(Term::Set(MSet::from_intervals([iv])))
            }
            Some('{') => {
                self.pos += 1;
                let mut pts = Vec::new();
                if !self.eat('}') {
                    loop {
                        pts.push(self.rational()?);
                        if self.eat('}') {
                            break;
                        }
                        self.expect(',')?;
                    }
                }
                Ok(Term::Points(pts))
            }
            Some(_) => {
                let start = self.pos;
                match self.word() {
                    "R" => Ok(Term::Set(MSet::real_line())),
                    "empty" => Ok(Term::Set(MSet::empty())),
                    _ => {
                        self.pos = start;
                        self.error("expected an interval, `{...}`, `R` or `empty`")
                    }
                }
            }
            None => self.error("expected an interval, `{...}`, `R` or `empty`"),
        }
    }
}

fn union(m: MSet, t: Term) -> MSet {
    match t {
        Term::Points(ps) => ps.into_iter().fold(m, MSet::add_point),
        Term::Set(s) => {
            // later unions override earlier removals
            let mut intervals = m.intervals().to_vec();
            intervals.extend(s.intervals().iter().cloned());
            let added: BTreeSet<Rational> = m.added().union(s.added()).cloned().collect();
            let removed = m.removed().iter().filter(|p| !s.contains(p)).cloned().collect();
            MSet::from_parts(intervals, added, removed)
        }
    }
}

pub fn parse_mset(src: &str) -> Result<MSet, MSetSyntaxError> {
    let mut cur = Cursor { src, pos: 0 };
    let mut m = match cur.term()? {
        Term::Set(s) => s,
        Term::Points(ps) => MSet::points(ps),
    };
    loop {
        match cur.peek() {
            None => return Ok(m),
            Some('U' | '+') => {
                cur.pos += 1;
                m = union(m, cur.term()?);
            }
            Some('-') => {
                cur.pos += 1;
                let at = cur.pos;
                match cur.term()? {
                    Term::Points(ps) => m = ps.into_iter().fold(m, MSet::remove_point),
                    Term::Set(_) => {
                        cur.pos = at;
                        cur.skip_ws();
                        return cur.error("only point sets `{...}` can be removed");
                    }
                }
            }
            Some(_) => return cur.error("expected `U`, `+`, `-` or end of set"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use distalg_core::scalar::{int, rat};

    #[test]
    fn forms() {
        let m = parse_mset("[0,1)").unwrap();
        assert!(m.contains(&int(0)) && !m.contains(&int(1)));
        let m = parse_mset("R - {0, 1/3}").unwrap();
        assert!(!m.contains(&int(0)) && !m.contains(&rat(1, 3)) && m.contains(&int(5)));
        let m = parse_mset("{1/3}").unwrap();
        assert!(m.contains(&rat(1, 3)) && !m.contains(&int(0)));
        let m = parse_mset("(-inf, 0] U (1, inf) + {1/2}").unwrap();
        assert!(m.contains(&int(0)) && m.contains(&rat(1, 2)) && !m.contains(&int(1)) && m.contains(&int(2)));
        assert!(!parse_mset("empty").unwrap().contains(&int(0)));
        let m = parse_mset("[0,1] - {1/2} U [0,1]").unwrap();
        assert!(m.contains(&rat(1, 2)));
    }

    #[test]
    fn display_parses_back() {
        for src in ["[0,1) U {3} - {1/2}", "R", "empty", "(-inf,-1/2]", "{0,1}", "R - {0}"] {
            let m = parse_mset(src).unwrap();
            let again = parse_mset(&m.to_string()).unwrap();
            for k in -8..=8 {
                let x = rat(k, 4);
                assert_eq!(m.contains(&x), again.contains(&x), "{src} at {x}");
            }
        }
    }

    #[test]
    fn errors() {
        assert_eq!(parse_mset("R - [0,1]").unwrap_err().col, 5);
        assert!(parse_mset("[1,0]").is_err());
        assert!(parse_mset("[0,1").is_err());
        assert!(parse_mset("").is_err());
        assert!(parse_mset("{a}").is_err());
    }
}
