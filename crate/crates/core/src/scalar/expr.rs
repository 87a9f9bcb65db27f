//! Parser for coefficient expressions such as `q^-1 + (1 - q^-2)`.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := '-' factor | atom ('^' int)?
//! atom   := 'q' | uint | '(' expr ')'
//! int    := '-'? [0-9]+
//! ```
//!
//! This accepts everything in the braiding file grammar (where `int '/' int`
//! denotes a rational constant) plus unary minus and division of arbitrary
//! factors, which makes `Display` output of [`RatFunc`] round-trip.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::RatFunc;
use crate::error::{Error, Result};

pub fn parse_coeff(text: &str) -> Result<RatFunc> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse { line: 1, column: self.pos + 1, message: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.factor()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.factor()?;
                    acc = acc.checked_div(&d).map_err(|_| Error::Parse {
                        line: 1,
                        column: at + 1,
                        message: "division by zero".into(),
                    })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RatFunc> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            let e = self.int()?;
            let e: i32 = e.try_into().map_err(|_| self.error("exponent out of range"))?;
            return base.pow(e).map_err(|_| Error::Parse {
                line: 1,
                column: at + 1,
                message: "negative power of zero".into(),
            });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                Ok(RatFunc::q())
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits()?;
                Ok(RatFunc::from_rational(BigRational::from_integer(n)))
            }
            Some(_) => Err(self.error("expected 'q', an integer or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn int(&mut self) -> Result<i64> {
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let n = self.digits()?;
        let n: i64 = n.try_into().map_err(|_| self.error("integer out of range"))?;
        Ok(if neg { -n } else { n })
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_examples() {
        let a = parse_coeff("q^-1 + (1 - q^-2)").unwrap();
        let b = parse_coeff("1 + q^-1 - q^-2").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_coeff("1/2 * q").unwrap() + parse_coeff("1/2*q").unwrap(), RatFunc::q());
        assert_eq!(parse_coeff("-q^2").unwrap(), -RatFunc::q_pow(2));
        assert_eq!(parse_coeff("(1+q)^2").unwrap(), parse_coeff("1 + 2*q + q^2").unwrap());
        assert_eq!(parse_coeff("-3").unwrap(), RatFunc::from_int(-3));
    }

    #[test]
    fn reports_position() {
        match parse_coeff("q + * 2") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_coeff("(q + 1").is_err());
        assert!(parse_coeff("q q").is_err());
        assert!(parse_coeff("1/0").is_err());
    }
}
