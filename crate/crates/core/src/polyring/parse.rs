//! Recursive-descent parser for polynomial text.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := '-' unary | '+' unary | power
//! power   := primary ('^' integer)?
//! primary := integer ('/' integer)? | identifier | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::{Polynomial, Vars};
use super::Rational;
use crate::error::{Error, Result};

/// Parses `text` as a polynomial in the declared variables.
pub fn parse_poly(text: &str, vars: &Vars) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        vars,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err(format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(out)
}

/// Parses a rational literal such as `3`, `-2/5` or ` 7 / 4 `.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let bad = || Error::Syntax {
        pos: 0,
        msg: format!("invalid rational `{text}`"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Syntax {
            pos: 0,
            msg: "zero denominator".into(),
        });
    }
    Ok(Rational::new(n, d))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a Vars,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.primary()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.err("expected a non-negative integer exponent"));
            }
            let e: u32 = digits.parse().map_err(|_| Error::Syntax {
                pos: start,
                msg: "exponent too large".into(),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn primary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().expect("digits");
                let mut value = Rational::from_integer(num);
                // `a/b` is only a rational literal; there is no general division
                let save = self.pos;
                if self.eat(b'/') {
                    self.skip_ws();
                    let d = self.digits();
                    if d.is_empty() {
                        self.pos = save;
                        return Err(self.err("expected integer denominator after `/`"));
                    }
                    let den: BigInt = d.parse().expect("digits");
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    value /= Rational::from_integer(den);
                }
                Ok(Polynomial::constant(self.vars, value))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Polynomial::var(self.vars, name).map_err(|_| Error::UndeclaredVariable {
                    name: name.to_string(),
                    pos: start,
                })
            }
            Some(c) => Err(self.err(format!("unexpected `{}`", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::make_vars;

    #[test]
    fn sum_of_powers() {
        let v = make_vars(&["x", "y"]);
        let p = parse_poly("x^2+y^3", &v).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.to_string(), "y^3 + x^2");
    }

    #[test]
    fn zero_literal() {
        let v = make_vars(&["x"]);
        assert!(parse_poly("0", &v).unwrap().is_zero());
        assert!(parse_poly("x - x", &v).unwrap().is_zero());
    }

    #[test]
    fn rational_literals_and_unary_minus() {
        let v = make_vars(&["x"]);
        let p = parse_poly("-3/4*x^2 + 1/2", &v).unwrap();
        assert_eq!(p.to_string(), "-3/4*x^2 + 1/2");
        let q = parse_poly("-x^2", &v).unwrap();
        assert_eq!(q.to_string(), "-x^2");
    }

    #[test]
    fn errors_carry_positions() {
        let v = make_vars(&["x", "y"]);
        match parse_poly("x + z", &v) {
            Err(Error::UndeclaredVariable { name, pos }) => {
                assert_eq!(name, "z");
                assert_eq!(pos, 4);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_poly("x +", &v),
            Err(Error::Syntax { pos: 3, .. })
        ));
        assert!(matches!(parse_poly("(x", &v), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("x^", &v), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse_poly("2x", &v),
            Err(Error::Syntax { pos: 1, .. })
        ));
        assert!(matches!(parse_poly("1/0", &v), Err(Error::Syntax { .. })));
    }

    #[test]
    fn rational_strings() {
        assert_eq!(
            parse_rational("-2/4").unwrap(),
            Rational::new((-1).into(), 2.into())
        );
        assert_eq!(
            parse_rational("7").unwrap(),
            Rational::from_integer(7.into())
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }
}
