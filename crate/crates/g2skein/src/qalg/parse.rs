//! Parser for the textual polynomial grammar, extended with `[n]` q-integer
//! tokens, parentheses and quotients so relation coefficients can be written
//! the way they are usually printed, e.g. `-[3][8]/[4]` or
//! `(q^10-q^6-q^4)[4][6]/([2][12])`.

use num::bigint::BigInt;
use num::rational::BigRational;

use super::poly::{qint, LaurentPoly};
use super::{QalgError, RatFunc};

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser { bytes: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn err(&self, what: &str) -> QalgError {
        QalgError::Parse(format!("{} at byte {}", what, self.pos))
    }

    fn integer(&mut self) -> Result<i64, QalgError> {
        self.skip_ws();
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        let v: i64 = s.parse().map_err(|_| self.err("integer overflow"))?;
        Ok(if neg { -v } else { v })
    }

    fn expr(&mut self) -> Result<RatFunc, QalgError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc, QalgError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.bump();
                    let d = self.factor()?;
                    if d.is_zero() {
                        return Err(QalgError::DivisionByZero);
                    }
                    acc = &acc / &d;
                }
                // implicit multiplication: [ ( q or a digit
                Some(b'[') | Some(b'(') | Some(b'q') => {
                    acc = &acc * &self.factor()?;
                }
                Some(c) if c.is_ascii_digit() => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power_suffix(&mut self, base: RatFunc) -> Result<RatFunc, QalgError> {
        if self.peek() == Some(b'^') {
            self.bump();
            let e = self.integer()?;
            base.pow(e)
        } else {
            Ok(base)
        }
    }

    fn factor(&mut self) -> Result<RatFunc, QalgError> {
        match self.peek() {
            Some(b'-') => {
                self.bump();
                Ok(-&self.factor()?)
            }
            Some(b'q') => {
                self.bump();
                let e = if self.peek() == Some(b'^') {
                    self.bump();
                    self.integer()?
                } else {
                    1
                };
                Ok(RatFunc::qpow(e))
            }
            Some(b'[') => {
                self.bump();
                let n = self.integer()?;
                if self.bump() != Some(b']') {
                    return Err(self.err("expected ]"));
                }
                let p = RatFunc::from_poly(qint(n)?);
                self.power_suffix(p)
            }
            Some(b'(') => {
                self.bump();
                let inner = self.expr()?;
                if self.bump() != Some(b')') {
                    return Err(self.err("expected )"));
                }
                self.power_suffix(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let r = RatFunc::monomial(0, BigRational::from_integer(BigInt::from(n)));
                self.power_suffix(r)
            }
            _ => Err(self.err("expected factor")),
        }
    }
}

/// Parse a rational-function expression.
pub fn parse_ratfunc(s: &str) -> Result<RatFunc, QalgError> {
    let mut p = Parser::new(s);
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

/// Parse a Laurent polynomial; quotients must cancel exactly.
pub fn parse_laurent(s: &str) -> Result<LaurentPoly, QalgError> {
    parse_ratfunc(s)?.into_poly().ok_or(QalgError::InexactDivision)
}

/// Shorthand used throughout the relation and projector tables.
pub fn rf(s: &str) -> RatFunc {
    parse_ratfunc(s).unwrap_or_else(|e| panic!("bad coefficient {s:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::super::poly::qint;
    use super::*;
    use num::rational::BigRational;
    use num::One;

    #[test]
    fn roundtrip_display() {
        for s in ["q^3 + 2 - q^-1", "3/2*q^2 - q", "0", "1", "-q^5 + 1/3"] {
            let p = parse_laurent(s).unwrap();
            assert_eq!(p.to_string(), s);
        }
    }

    #[test]
    fn qintegers_and_quotients() {
        let p = parse_laurent("[2]").unwrap();
        assert_eq!(p, qint(2).unwrap());
        let f = parse_ratfunc("[2][7][12]/([4][6])").unwrap();
        assert_eq!(
            f.eval_at(&BigRational::one()).unwrap(),
            BigRational::from_integer(7.into())
        );
        let g = parse_ratfunc("-[3][8]/[4]").unwrap();
        assert_eq!(
            g.eval_at(&BigRational::one()).unwrap(),
            BigRational::from_integer((-6).into())
        );
        let h = parse_ratfunc("(q^10-q^6-q^4)[4][6]/([2][12])").unwrap();
        assert!(!h.is_zero());
        assert!(parse_ratfunc("[3]^2[4][6]/([2][12])").is_ok());
    }

    #[test]
    fn one_is_mul_unit() {
        let a = rf("q^2[3]/[5]");
        assert_eq!(&a * &rf("1"), a);
    }
}
