//! Exact polynomial arithmetic over the rationals.

mod monomial;
mod parse;
mod poly;
mod univariate;

pub use monomial::{cmp_grevlex, cmp_local, Monomial};
pub use parse::{parse_poly, parse_rational};
pub use poly::{bareiss_det, jacobian_det, make_vars, ArithOp, Polynomial, Vars};
pub use univariate::{unipoly_det, UniPoly};

/// Exact rational numbers, always in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for `n / d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Parses a comma-separated list of polynomials.
pub fn parse_poly_list(text: &str, vars: &Vars) -> crate::Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(parse_piece(&text[start..i], start, vars)?);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(parse_piece(&text[start..], start, vars)?);
    Ok(out)
}

fn parse_piece(piece: &str, offset: usize, vars: &Vars) -> crate::Result<Polynomial> {
    use crate::Error;
    parse_poly(piece, vars).map_err(|e| match e {
        Error::Syntax { pos, msg } => Error::Syntax {
            pos: pos + offset,
            msg,
        },
        Error::UndeclaredVariable { name, pos } => Error::UndeclaredVariable {
            name,
            pos: pos + offset,
        },
        other => other,
    })
}
