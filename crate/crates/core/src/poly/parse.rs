//! Recursive-descent parser for the polynomial text format.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := uint | uint '/' uint | 'x' | 'y' | '(' expr ')'
//! ```
//!
//! Whitespace is insignificant and multiplication is always explicit. The
//! optional leading minus lets printed polynomials with a negative leading
//! coefficient parse back.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Poly, PolyError};
use crate::rational::Rational;

pub fn parse_polynomial(text: &str) -> Result<Poly, PolyError> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.src.len() {
        return Err(parser.syntax("unexpected trailing input"));
    }
    Ok(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax(&self, msg: &str) -> PolyError {
        PolyError::Syntax {
            offset: self.pos,
            message: msg.to_string(),
        }
    }

    fn expr(&mut self) -> Result<Poly, PolyError> {
        let negate = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
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

    fn term(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, PolyError> {
        let base = self.base()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let at = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some(b'-') => return Err(PolyError::NegativeExponentAt { offset: at }),
            Some(c) if c.is_ascii_digit() => {}
            _ => return Err(self.syntax("expected exponent")),
        }
        let e = self.uint()?;
        if matches!(self.peek(), Some(b'/') | Some(b'.')) {
            return Err(PolyError::NonIntegerExponent { offset: at });
        }
        let e = u32::try_from(&e).map_err(|_| PolyError::Syntax {
            offset: at,
            message: "exponent too large".into(),
        })?;
        Ok(base.pow(e))
    }

    fn base(&mut self) -> Result<Poly, PolyError> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(Poly::x())
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(Poly::y())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.syntax("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()?;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let at = {
                        self.skip_ws();
                        self.pos
                    };
                    if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                        return Err(self.syntax("expected denominator"));
                    }
                    let den = self.uint()?;
                    if den.is_zero() {
                        return Err(PolyError::Syntax {
                            offset: at,
                            message: "zero denominator".into(),
                        });
                    }
                    Ok(Poly::constant(Rational::new(num, den)))
                } else {
                    Ok(Poly::constant(Rational::from_integer(num)))
                }
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => Err(PolyError::UnknownVariable {
                offset: self.pos,
                name: self.identifier(),
            }),
            Some(_) => Err(self.syntax("unexpected character")),
            None => Err(self.syntax("unexpected end of input")),
        }
    }

    fn identifier(&self) -> String {
        let rest = &self.src[self.pos..];
        let len = rest
            .iter()
            .take_while(|c| c.is_ascii_alphanumeric() || **c == b'_')
            .count();
        String::from_utf8_lossy(&rest[..len]).into_owned()
    }

    fn uint(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digit string"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn transcription() {
        let p = parse_polynomial("x^3 + y^2").unwrap();
        assert_eq!(p, Poly::from_terms([(rat(1), 3, 0), (rat(1), 0, 2)]));
        assert!(parse_polynomial("0").unwrap().is_zero());
        assert!(parse_polynomial(" 0 * x ").unwrap().is_zero());
    }

    #[test]
    fn expands_products() {
        let p = parse_polynomial("(x - y)*(x + y)").unwrap();
        assert_eq!(p, Poly::from_terms([(rat(1), 2, 0), (rat(-1), 0, 2)]));
        let q = parse_polynomial("3/4*(x+1)^2").unwrap();
        assert_eq!(
            q,
            Poly::from_terms([(ratio(3, 4), 2, 0), (ratio(3, 2), 1, 0), (ratio(3, 4), 0, 0)])
        );
    }

    #[test]
    fn leading_minus() {
        assert_eq!(parse_polynomial("-x + y").unwrap(), parse_polynomial("y - x").unwrap());
        assert_eq!(parse_polynomial("(-x)^2").unwrap(), parse_polynomial("x^2").unwrap());
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(
            parse_polynomial("x + z"),
            Err(PolyError::UnknownVariable {
                offset: 4,
                name: "z".into()
            })
        );
        assert_eq!(
            parse_polynomial("x^-2"),
            Err(PolyError::NegativeExponentAt { offset: 2 })
        );
        assert_eq!(
            parse_polynomial("x^1/2"),
            Err(PolyError::NonIntegerExponent { offset: 2 })
        );
        assert!(matches!(
            parse_polynomial("2x"),
            Err(PolyError::Syntax { offset: 1, .. })
        ));
        assert!(matches!(
            parse_polynomial("(x + y"),
            Err(PolyError::Syntax { offset: 6, .. })
        ));
        assert!(matches!(parse_polynomial(""), Err(PolyError::Syntax { offset: 0, .. })));
        assert!(matches!(parse_polynomial("1/0"), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse_polynomial("x + + y"), Err(PolyError::Syntax { .. })));
    }
}
