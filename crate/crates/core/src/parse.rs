//! Parser for the polynomial text grammar.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | '+' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'x' index | '(' expr ')'
//! ```
//!
//! Coefficients are integers; `/` is accepted only with a nonzero constant
//! divisor so that printed rational coefficients read back in.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::polynomial::Polynomial;

pub fn parse_polynomial<F: Field>(input: &str, field: F, num_vars: usize) -> Result<Polynomial<F>> {
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
        field,
        num_vars,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a, F: Field> {
    src: &'a [u8],
    pos: usize,
    field: F,
    num_vars: usize,
}

impl<F: Field> Parser<'_, F> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
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

    fn digits(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn expr(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.unary()?;
                    if !d.is_unit() {
                        return Err(Error::Parse {
                            pos: at,
                            msg: "division only by a nonzero constant".into(),
                        });
                    }
                    let inv = self
                        .field
                        .inv(&d.terms()[0].1)
                        .ok_or_else(|| self.err("division by zero"))?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial<F>> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial<F>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e: u32 = self
                .digits()?
                .parse()
                .map_err(|_| self.err("exponent too large"))?;
            if e > u16::MAX as u32 {
                return Err(self.err("exponent too large"));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial<F>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'x') => {
                self.pos += 1;
                let start = self.pos;
                let idx: usize = self
                    .digits()?
                    .parse()
                    .map_err(|_| self.err("bad variable index"))?;
                if idx >= self.num_vars {
                    return Err(Error::Parse {
                        pos: start,
                        msg: format!("variable x{idx} outside x0..x{}", self.num_vars.saturating_sub(1)),
                    });
                }
                Ok(Polynomial::var(self.field.clone(), self.num_vars, idx))
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.digits()?.parse().expect("digits parse as BigInt");
                let c = self.field.from_bigint(&n);
                Ok(Polynomial::constant(self.field.clone(), self.num_vars, c))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use proptest::prelude::*;

    #[test]
    fn parses_reference_example() {
        let p = parse_polynomial("3*x0^2*x4 - x1*x2", Rationals, 5).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.to_string(), "3*x0^2*x4 - x1*x2");
    }

    #[test]
    fn whitespace_and_parentheses() {
        let a = parse_polynomial(" ( x0 + x1 ) * (x0-x1) ", Rationals, 2).unwrap();
        let b = parse_polynomial("x0^2-x1^2", Rationals, 2).unwrap();
        assert_eq!(a, b);
        let c = parse_polynomial("-(x0 - 2)^2", Rationals, 1).unwrap();
        assert_eq!(c.to_string(), "-x0^2 + 4*x0 - 4");
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_polynomial("x3", Rationals, 3), Err(Error::Parse { .. })));
        assert!(parse_polynomial("x0 +", Rationals, 1).is_err());
        assert!(parse_polynomial("x0 x1", Rationals, 2).is_err());
        assert!(parse_polynomial("x0 / x1", Rationals, 2).is_err());
        assert!(parse_polynomial("x0 / 0", Rationals, 2).is_err());
        assert!(parse_polynomial("y0", Rationals, 2).is_err());
        assert!(parse_polynomial("(x0", Rationals, 2).is_err());
    }

    #[test]
    fn coefficients_reduce_mod_p() {
        let f = PrimeField::new(7).unwrap();
        let p = parse_polynomial("9*x0 + 14", f, 1).unwrap();
        assert_eq!(p.to_string(), "2*x0");
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial<Rationals>> {
        let term = (-20i64..20, proptest::collection::vec(0u16..3, 3));
        proptest::collection::vec(term, 0..6).prop_map(|ts| {
            let f = Rationals;
            Polynomial::from_terms(
                f,
                3,
                ts.into_iter().map(|(c, e)| {
                    (crate::monomial::Monomial::from_exponents(e), f.from_i64(c))
                }),
            )
        })
    }

    proptest! {
        #[test]
        fn display_parses_back(p in arb_poly(), d in 1i64..5) {
            let p = p.scale(&Rationals.inv(&Rationals.from_i64(d)).unwrap());
            let back = parse_polynomial(&p.to_string(), Rationals, 3).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
