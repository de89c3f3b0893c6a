//! Text syntax for bundle expressions.
//!
//! ```text
//! expr := term ('+' term)*
//! term := atom ('*' atom)*
//! atom := 'Q' | 'S' | 'T' | 'triv(' INT ')' | 'L[' INT (',' INT)* ']'
//!       | 'dual(' expr ')' | 'det(' expr ')' | 'sym(' INT ',' expr ')'
//!       | 'wedge(' INT ',' expr ')' | '(' expr ')'
//! ```
//!
//! `*` is the tensor product and binds tighter than `+` (direct sum). Both
//! associate to the left.

use std::fmt;
use std::str::FromStr;

use super::BundleExpr;
use crate::error::{Error, Result};
use crate::rootsys::Weight;

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

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

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.err(format!("expected '{c}', found '{found}'")),
                None => self.err(format!("expected '{c}', found end of input")),
            }
        }
    }

    fn ident(&mut self) -> &'a str {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let sign = usize::from(rest.starts_with('-'));
        let digits = rest[sign..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len() - sign);
        if digits == 0 {
            return self.err("expected an integer");
        }
        let text = &rest[..sign + digits];
        let value = text
            .parse()
            .or_else(|_| self.err(format!("integer {text} out of range")))?;
        self.pos += sign + digits;
        Ok(value)
    }

    fn count(&mut self) -> Result<usize> {
        let at = self.pos;
        let v = self.int()?;
        usize::try_from(v).or_else(|_| {
            self.pos = at;
            self.err(format!("expected a non-negative integer, found {v}"))
        })
    }

    fn expr(&mut self) -> Result<BundleExpr> {
        let mut acc = self.term()?;
        while self.eat('+') {
            let rhs = self.term()?;
            acc = BundleExpr::Sum(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BundleExpr> {
        let mut acc = self.atom()?;
        while self.eat('*') {
            let rhs = self.atom()?;
            acc = BundleExpr::Tensor(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<BundleExpr> {
        if self.eat('(') {
            let e = self.expr()?;
            self.expect(')')?;
            return Ok(e);
        }
        let start = self.pos;
        let name = self.ident();
        let e = match name {
            "Q" => BundleExpr::TautQuot,
            "S" => BundleExpr::TautSub,
            "T" => BundleExpr::Tangent,
            "L" => {
                self.expect('[')?;
                let mut coeffs = vec![self.int()?];
                while self.eat(',') {
                    coeffs.push(self.int()?);
                }
                self.expect(']')?;
                BundleExpr::Line(Weight::new(coeffs))
            }
            "triv" => {
                self.expect('(')?;
                let r = self.count()?;
                self.expect(')')?;
                BundleExpr::Trivial(r)
            }
            "dual" | "det" => {
                self.expect('(')?;
                let inner = Box::new(self.expr()?);
                self.expect(')')?;
                if name == "dual" {
                    BundleExpr::Dual(inner)
                } else {
                    BundleExpr::Det(inner)
                }
            }
            "sym" | "wedge" => {
                self.expect('(')?;
                let k = self.count()?;
                self.expect(',')?;
                let inner = Box::new(self.expr()?);
                self.expect(')')?;
                if name == "sym" {
                    BundleExpr::Sym(k, inner)
                } else {
                    BundleExpr::Wedge(k, inner)
                }
            }
            "" => {
                return match self.peek() {
                    Some(c) => self.err(format!("unexpected '{c}'")),
                    None => self.err("unexpected end of input"),
                }
            }
            other => {
                self.pos = start;
                self.skip_ws();
                return self.err(format!("unknown constructor '{other}'"));
            }
        };
        Ok(e)
    }
}

/// Parses a bundle expression.
pub fn parse(src: &str) -> Result<BundleExpr> {
    let mut p = Parser { src, pos: 0 };
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        return p.err(format!("trailing input starting at '{c}'"));
    }
    Ok(e)
}

impl FromStr for BundleExpr {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

impl fmt::Display for BundleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use BundleExpr::*;
        match self {
            TautQuot => f.write_str("Q"),
            TautSub => f.write_str("S"),
            Tangent => f.write_str("T"),
            Trivial(r) => write!(f, "triv({r})"),
            Line(w) => {
                f.write_str("L[")?;
                for (i, c) in w.coeffs().iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("]")
            }
            Dual(e) => write!(f, "dual({e})"),
            Det(e) => write!(f, "det({e})"),
            Sym(k, e) => write!(f, "sym({k},{e})"),
            Wedge(k, e) => write!(f, "wedge({k},{e})"),
            Sum(a, b) => {
                write!(f, "{a}+")?;
                match **b {
                    Sum(..) => write!(f, "({b})"),
                    _ => write!(f, "{b}"),
                }
            }
            Tensor(a, b) => {
                match **a {
                    Sum(..) => write!(f, "({a})*")?,
                    _ => write!(f, "{a}*")?,
                }
                match **b {
                    Sum(..) | Tensor(..) => write!(f, "({b})"),
                    _ => write!(f, "{b}"),
                }
            }
        }
    }
}
