//! Text syntax for monomial ideals.
//!
//! ```text
//! ideal  := "(" [mono {"," mono}] ")"
//! mono   := "1" | factor {"*" factor}
//! factor := name ["^" posint]
//! ```
//!
//! Whitespace is ignored. A variable repeated inside one monomial multiplies.

use crate::error::{Error, Result};
use crate::ring::{Monomial, MonomialIdeal, RingContext};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ctx: &'a RingContext,
    alias_t: Option<usize>,
}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { offset, message: message.into() })
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(got) if got == c => {
                self.pos += 1;
                Ok(())
            }
            Some(got) => err(self.pos, format!("expected '{}', found '{}'", c as char, got as char)),
            None => err(self.pos, format!("expected '{}', found end of input", c as char)),
        }
    }

    fn ident(&mut self) -> Result<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let ok_first = |c: u8| c.is_ascii_alphabetic() || c == b'_';
        match self.src.get(start) {
            Some(&c) if ok_first(c) => {}
            Some(&c) => return err(start, format!("expected a variable, found '{}'", c as char)),
            None => return err(start, "expected a variable, found end of input"),
        }
        let mut end = start + 1;
        while end < self.src.len() && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_') {
            end += 1;
        }
        self.pos = end;
        // the source came from a &str and identifiers are ASCII
        Ok((start, std::str::from_utf8(&self.src[start..end]).expect("ascii")))
    }

    fn posint(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.src.get(start) {
                Some(&c) => err(start, format!("expected an exponent, found '{}'", c as char)),
                None => err(start, "expected an exponent, found end of input"),
            };
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        match digits.parse::<u32>() {
            Ok(0) => err(start, "exponent 0 is not allowed"),
            Ok(e) => Ok(e),
            Err(_) => err(start, "exponent too large"),
        }
    }

    fn mono(&mut self) -> Result<Monomial> {
        let n = self.ctx.nvars();
        if self.peek() == Some(b'1') {
            self.pos += 1;
            return Ok(Monomial::one(n));
        }
        let mut exps = vec![0u32; n];
        loop {
            let (at, name) = self.ident()?;
            let index = match (self.ctx.index_of(name), self.alias_t) {
                (Some(i), _) => i,
                (None, Some(i)) if name == "t" => i,
                _ => return err(at, format!("undeclared variable '{name}'")),
            };
            let e = if self.peek() == Some(b'^') {
                self.pos += 1;
                self.posint()?
            } else {
                1
            };
            let at_exp = self.pos;
            exps[index] = match exps[index].checked_add(e) {
                Some(v) => v,
                None => return err(at_exp, "exponent too large"),
            };
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok(Monomial::new(exps));
            }
        }
    }

    fn ideal(&mut self) -> Result<Vec<Monomial>> {
        self.expect(b'(')?;
        let mut gens = Vec::new();
        if self.peek() == Some(b')') {
            self.pos += 1;
        } else {
            loop {
                gens.push(self.mono()?);
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    Some(c) => return err(self.pos, format!("expected ',' or ')', found '{}'", c as char)),
                    None => return err(self.pos, "expected ',' or ')', found end of input"),
                }
            }
        }
        if let Some(c) = self.peek() {
            return err(self.pos, format!("trailing input starting with '{}'", c as char));
        }
        Ok(gens)
    }
}

/// Parse `text` over the declared variables of `ctx`.
///
/// In a four-variable ring whose last variable is not called `t`, the name
/// `t` is accepted for it.
pub fn parse_ideal(text: &str, ctx: &RingContext) -> Result<MonomialIdeal> {
    let alias_t = (ctx.nvars() == 4 && ctx.index_of("t").is_none()).then_some(3);
    let mut p = Parser { src: text.as_bytes(), pos: 0, ctx, alias_t };
    let gens = p.ideal()?;
    MonomialIdeal::new(ctx, gens)
}

/// Parse a comma-separated variable list such as `x,y,z`.
pub fn parse_vars(text: &str) -> Result<RingContext> {
    let names: Vec<&str> = text.split(',').map(str::trim).collect();
    RingContext::new(names)
}

/// Variable names appearing in `text`, in order of first appearance.
fn identifiers(text: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].is_ascii_alphabetic() || bytes[i] == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let name = &text[start..i];
            if !out.iter().any(|n| n == name) {
                out.push(name.to_string());
            }
        } else {
            i += 1;
        }
    }
    out
}

/// The default ring for an expression without declared variables: `x,y,z`
/// if those suffice, otherwise `x,y,z,w` (or `x,y,z,t` when `t` is used).
pub fn infer_context(text: &str) -> Result<RingContext> {
    let used = identifiers(text);
    let within = |allowed: &[&str]| used.iter().all(|u| allowed.contains(&u.as_str()));
    if within(&["x", "y", "z"]) {
        RingContext::standard(3)
    } else if within(&["x", "y", "z", "w"]) {
        RingContext::standard(4)
    } else if within(&["x", "y", "z", "t"]) {
        RingContext::new(["x", "y", "z", "t"])
    } else {
        Err(Error::InvalidContext(format!(
            "cannot infer variables for {text:?}; pass them explicitly"
        )))
    }
}

/// Parse with explicit variables if given, else infer them.
pub fn parse_with(text: &str, vars: Option<&str>) -> Result<MonomialIdeal> {
    let ctx = match vars {
        Some(v) => parse_vars(v)?,
        None => infer_context(text)?,
    };
    parse_ideal(text, &ctx)
}
