//! Polynomial expressions over `x` and `y`.
//!
//! ```text
//! sum      := signed (('+' | '-') signed)*
//! signed   := ('-' | '+') signed | product
//! product  := power ('*' power)*
//! power    := atom ('^' exponent)?
//! exponent := INT ('^' exponent)?
//! atom     := INT ('/' INT)? | 'x' | 'y' | '(' sum ')'
//! ```

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact_algebra::{BivariatePoly, Rational};
use crate::{Error, QBiPoly, Result};

const MAX_EXPONENT: u64 = 1 << 12;

pub fn parse_poly(src: &str) -> Result<QBiPoly> {
    let mut p = Parser { src: src.as_bytes(), pos: 0 };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty expression"));
    }
    let v = p.sum()?;
    p.skip_ws();
    if !p.at_end() {
        let msg = match p.peek() {
            Some(c) if c.is_ascii_alphanumeric() || c == b'(' => {
                "implicit multiplication is not allowed; use '*'".to_string()
            }
            Some(c) => format!("unexpected character '{}'", c as char),
            None => "unexpected end".to_string(),
        };
        return Err(p.error(&msg));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax {
            offset: self.pos,
            message: msg.to_string(),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<QBiPoly> {
        let mut acc = self.signed()?;
        loop {
            if self.eat(b'+') {
                acc = acc + self.signed()?;
            } else if self.eat(b'-') {
                acc = acc - self.signed()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn signed(&mut self) -> Result<QBiPoly> {
        if self.eat(b'-') {
            return Ok(-self.signed()?);
        }
        if self.eat(b'+') {
            return self.signed();
        }
        self.product()
    }

    fn product(&mut self) -> Result<QBiPoly> {
        let mut acc = self.power()?;
        while self.eat(b'*') {
            acc = acc * self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<QBiPoly> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.exponent()?;
            return Ok(base.pow(e as u32));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let n = self
            .integer()
            .ok_or_else(|| self.error("exponent must be a nonnegative integer"))?;
        let base: u64 = u64::try_from(&n)
            .ok()
            .filter(|&v| v <= MAX_EXPONENT)
            .ok_or_else(|| Error::Syntax {
                offset: start,
                message: "exponent too large".into(),
            })?;
        if self.eat(b'^') {
            let e = self.exponent()?;
            let v = (e <= 64)
                .then(|| base.checked_pow(e as u32))
                .flatten()
                .filter(|&v| v <= MAX_EXPONENT)
                .ok_or_else(|| Error::Syntax {
                    offset: start,
                    message: "exponent too large".into(),
                })?;
            return Ok(v);
        }
        Ok(base)
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    fn atom(&mut self) -> Result<QBiPoly> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer().expect("digit present");
                let mut v = Rational::from_integer(n);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self
                        .integer()
                        .ok_or_else(|| self.error("expected denominator after '/'"))?;
                    if d.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    v = v / Rational::from_integer(d);
                }
                Ok(BivariatePoly::constant(v))
            }
            Some(b'x') => {
                self.pos += 1;
                self.no_identifier_tail(b'x')?;
                Ok(BivariatePoly::x())
            }
            Some(b'y') => {
                self.pos += 1;
                self.no_identifier_tail(b'y')?;
                Ok(BivariatePoly::y())
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.sum()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                Err(self.error(&format!("unknown variable '{}'; only x and y are allowed", c as char)))
            }
            Some(c) => Err(self.error(&format!("unexpected character '{}'", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn no_identifier_tail(&self, v: u8) -> Result<()> {
        match self.peek() {
            Some(c) if c.is_ascii_alphanumeric() || c == b'_' => Err(Error::Syntax {
                offset: self.pos - 1,
                message: format!(
                    "unknown identifier starting with '{}'; use '*' between factors",
                    v as char
                ),
            }),
            _ => Ok(()),
        }
    }
}

/// Parse a comma separated pair of rationals such as `1,0` or `-1/2, 3`.
pub fn parse_rational_pair(src: &str) -> Result<(Rational, Rational)> {
    let parts: Vec<&str> = src.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::Syntax {
            offset: 0,
            message: "expected two comma separated numbers".into(),
        });
    }
    Ok((parse_rational(parts[0])?, parse_rational(parts[1])?))
}

pub fn parse_rational(src: &str) -> Result<Rational> {
    let p = parse_poly(src)?;
    if !p.is_constant() {
        return Err(Error::Syntax {
            offset: 0,
            message: "expected a number".into(),
        });
    }
    Ok(p.coeff(0, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::scalar::{int, rat};

    #[test]
    fn reads_sparse_terms() {
        let f = parse_poly("x^2*y + x").unwrap();
        let terms: Vec<_> = f.terms().map(|(e, c)| (*e, c.clone())).collect();
        assert_eq!(terms, vec![((1, 0), int(1)), ((2, 1), int(1))]);
    }

    #[test]
    fn degree_six_example_expands() {
        let f = parse_poly("(x - y^2)*((x - y^2)*(y^2 + 1) - 1)").unwrap();
        assert_eq!(f.degree(), Some(6));
        assert_eq!(f.top_form(), BivariatePoly::term(int(1), 0, 6));
    }

    #[test]
    fn degree_four_example() {
        let f = parse_poly("x^2 + (x*y - 1)^2").unwrap();
        assert_eq!(f.degree(), Some(4));
        assert_eq!(f.top_form(), BivariatePoly::term(int(1), 2, 2));
    }

    #[test]
    fn precedence_and_rationals() {
        assert_eq!(parse_poly("-x^2").unwrap(), -BivariatePoly::term(int(1), 2, 0));
        assert_eq!(parse_poly("2^3^2").unwrap(), BivariatePoly::constant(int(512)));
        assert_eq!(
            parse_poly("-3/2*x + 1").unwrap(),
            BivariatePoly::term(rat(-3, 2), 1, 0) + BivariatePoly::constant(int(1))
        );
    }

    #[test]
    fn errors_carry_offsets() {
        let e = parse_poly("2x").unwrap_err();
        assert!(matches!(e, Error::Syntax { offset: 1, .. }));
        let e = parse_poly("x + z").unwrap_err();
        assert!(matches!(e, Error::Syntax { offset: 4, .. }));
        let e = parse_poly("(x + y").unwrap_err();
        assert!(matches!(e, Error::Syntax { offset: 6, .. }));
        assert!(parse_poly("x^-1").is_err());
        assert!(parse_poly("x/2").is_err());
        assert!(parse_poly("").is_err());
    }

    #[test]
    fn pair_parsing() {
        assert_eq!(parse_rational_pair("1,-1/2").unwrap(), (int(1), rat(-1, 2)));
    }
}
