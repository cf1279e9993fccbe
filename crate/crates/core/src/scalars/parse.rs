use super::{Polynomial, Rational};
use crate::error::{Error, Result};

/// Parses the polynomial grammar: rational constants, `a1..ar`, `w1..wr`,
/// `+ - * ^` and parentheses, e.g. `a1*(a1+a2)` or `2*w1-1/3`.
///
/// `weights[i]` is the expansion of ϖ_{i+1} in simple-root variables.
pub fn parse_polynomial(s: &str, rank: usize, weights: &[Polynomial]) -> Result<Polynomial> {
    let mut p = Parser { s: s.as_bytes(), pos: 0, rank, weights };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    rank: usize,
    weights: &'a [Polynomial],
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse { pos: start, msg: "number too large".into() })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = if self.peek() == Some(b'-') {
            self.pos += 1;
            -self.term()?
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc += &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc -= &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.number()?;
            if e > 64 {
                return Err(self.err("exponent too large"));
            }
            return Ok(base.pow(e as u32));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.number()?;
                    if d == 0 {
                        return Err(self.err("zero denominator"));
                    }
                    return Ok(Polynomial::constant(Rational::new(n, d)));
                }
                Ok(Polynomial::integer(n))
            }
            Some(c @ (b'a' | b'w')) => {
                let at = self.pos;
                self.pos += 1;
                let i = self.number()? as usize;
                if i == 0 || i > self.rank {
                    return Err(Error::Parse { pos: at, msg: format!("variable index {i} out of range 1..={}", self.rank) });
                }
                Ok(if c == b'a' { Polynomial::var(i) } else { self.weights[i - 1].clone() })
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}
