//! Recursive-descent parser for the generator word language.
//!
//! ```text
//! expr   := factor { "*" factor }
//! factor := atom [ "^" ( atom | "-1" | integer ) ]
//! atom   := "id" | "t[" addr "|" addr "]" | name "(" args ")"
//!         | "[" expr "," expr "]" | "pre(" addr "," expr ")" | "(" expr ")"
//! ```

use super::ast::{Arg, GenExpr, GenName, NamedGen};
use crate::cantor::{Address, Word};
use crate::error::{Error, Result};

pub fn parse(text: &str, n: usize) -> Result<GenExpr> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, n };
    let e = p.expr()?;
    p.ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

/// Parses a relation file: a header `n=<arity>`, then one `lhs = rhs` per line.
/// `#` starts a comment.
pub fn parse_relation_file(text: &str) -> Result<(usize, Vec<(GenExpr, GenExpr)>)> {
    let mut n = None;
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let at_line = |e: Error| match e {
            Error::Parse { pos, msg } => Error::Parse { pos, msg: format!("line {}: {msg}", lineno + 1) },
            other => other,
        };
        let Some(arity) = n else {
            let value = line
                .strip_prefix("n")
                .map(str::trim_start)
                .and_then(|r| r.strip_prefix('='))
                .ok_or_else(|| at_line(Error::Parse { pos: 0, msg: "expected header n=<arity>".into() }))?;
            let arity: usize = value
                .trim()
                .parse()
                .map_err(|_| at_line(Error::Parse { pos: 0, msg: format!("bad arity {value:?}") }))?;
            if arity < 2 {
                return Err(Error::BadArity(arity));
            }
            n = Some(arity);
            continue;
        };
        let (lhs, rhs) = line
            .split_once('=')
            .ok_or_else(|| at_line(Error::Parse { pos: 0, msg: "expected lhs = rhs".into() }))?;
        let l = parse(lhs, arity).map_err(at_line)?;
        let r = parse(rhs, arity).map_err(|e| match e {
            Error::Parse { pos, msg } => at_line(Error::Parse { pos: pos + lhs.len() + 1, msg }),
            other => other,
        })?;
        out.push((l, r));
    }
    let n = n.ok_or(Error::Parse { pos: 0, msg: "missing header n=<arity>".into() })?;
    Ok((n, out))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<GenExpr> {
        let mut factors = vec![self.factor()?];
        while self.eat(b'*') {
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 { factors.pop().expect("one factor") } else { GenExpr::Product(factors) })
    }

    fn factor(&mut self) -> Result<GenExpr> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        match self.peek() {
            Some(c) if c == b'-' || c.is_ascii_digit() => {
                let k = self.integer()?;
                Ok(if k == -1 { base.inv() } else { base.pow(k) })
            }
            _ => Ok(base.conj(self.atom()?)),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        s.parse().map_err(|_| Error::Parse { pos: start, msg: format!("bad integer {s:?}") })
    }

    fn ident(&mut self) -> String {
        self.ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_alphabetic) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<GenExpr> {
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'[') => {
                self.pos += 1;
                let g = self.expr()?;
                self.expect(b',')?;
                let h = self.expr()?;
                self.expect(b']')?;
                Ok(g.comm(h))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let name = self.ident();
                if name == "id" {
                    return Ok(GenExpr::Id);
                }
                if name == "t" && self.src.get(self.pos) == Some(&b'[') {
                    self.pos += 1;
                    let a = self.address()?;
                    self.expect(b'|')?;
                    let b = self.address()?;
                    self.expect(b']')?;
                    return Ok(GenExpr::Transposition(a, b));
                }
                if name == "pre" {
                    self.expect(b'(')?;
                    let d = self.address()?;
                    self.expect(b',')?;
                    let e = self.expr()?;
                    self.expect(b')')?;
                    return Ok(e.localize(&d));
                }
                let gen: GenName =
                    name.parse().map_err(|_| Error::Parse { pos: start, msg: format!("unknown name {name:?}") })?;
                self.expect(b'(')?;
                let mut args = Vec::new();
                if !self.eat(b')') {
                    loop {
                        args.push(self.arg()?);
                        if self.eat(b')') {
                            break;
                        }
                        self.expect(b',')?;
                    }
                }
                Ok(GenExpr::Named(NamedGen { name: gen, args }))
            }
            Some(c) => Err(self.err(format!("unexpected character '{}'", c as char))),
        }
    }

    fn arg(&mut self) -> Result<Arg> {
        if self.peek() == Some(b'(') {
            Ok(Arg::Addr(self.address()?))
        } else {
            Ok(Arg::Int(self.integer()?))
        }
    }

    fn address(&mut self) -> Result<Address> {
        self.expect(b'(')?;
        let start = self.pos;
        let mut coords = Vec::new();
        loop {
            coords.push(self.word()?);
            if self.eat(b')') {
                break;
            }
            self.expect(b',')?;
        }
        if coords.len() != self.n {
            return Err(if coords.len() < 2 {
                Error::Parse { pos: start, msg: format!("address needs at least 2 coordinates, got {}", coords.len()) }
            } else {
                Error::ArityMismatch { left: self.n, right: coords.len() }
            });
        }
        Ok(Address::new(coords))
    }

    fn word(&mut self) -> Result<Word> {
        self.ws();
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
            return Ok(Word::empty());
        }
        let start = self.pos;
        let mut w = Word::empty();
        while let Some(&c) = self.src.get(self.pos) {
            match c {
                b'0' => w.push(false),
                b'1' => w.push(true),
                _ => break,
            }
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a binary word or '-'"));
        }
        Ok(w)
    }
}
