//! Jantzen filtrations of one-parameter families of symmetric forms.
//!
//! A family `G(t)` with `det G ≢ 0` is diagonalized by congruence over the
//! power series ring `ℚ[[t]]`: `G ~ diag(t^e_k u_k(t))` with units `u_k`.
//! The filtration level `K_i` is spanned by the values at `t = 0` of the
//! diagonalizing basis vectors with `e_k >= i`, and the level signature
//! `tau_i` is the sum of the signs `u_k(0)` over `e_k = i`. For small
//! `t > 0` the signature of `G(t)` is `sum tau_i`, and for small `t < 0` it
//! is `sum (-1)^i tau_i`.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bilinear::inertia;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::polyring::{parse_rational, unipoly_det, Polynomial, Rational, UniPoly};

/// Symmetric matrix whose entries are polynomials in the parameter `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFamily {
    entries: Vec<Vec<UniPoly>>,
}

impl MatrixFamily {
    pub fn new(entries: Vec<Vec<UniPoly>>) -> Result<Self> {
        let n = entries.len();
        if let Some(row) = entries.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: row.len(),
            });
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate().take(i) {
                if *e != entries[j][i] {
                    return Err(Error::Malformed(format!(
                        "family is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(MatrixFamily { entries })
    }

    /// Constant family.
    pub fn constant(m: &Matrix) -> Result<Self> {
        let n = m.nrows();
        Self::new(
            (0..n)
                .map(|i| {
                    (0..m.ncols())
                        .map(|j| UniPoly::constant(m[(i, j)].clone()))
                        .collect()
                })
                .collect(),
        )
    }

    /// Family from integer coefficient lists, `rows[i][j]` low degree first.
    pub fn from_int_coeffs(rows: &[&[&[i64]]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|c| UniPoly::from_ints(c)).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &UniPoly {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<UniPoly>] {
        &self.entries
    }

    pub fn eval(&self, t: &Rational) -> Matrix {
        Matrix::from_rows(
            self.entries
                .iter()
                .map(|r| r.iter().map(|p| p.eval(t)).collect())
                .collect(),
        )
    }

    pub fn det(&self) -> UniPoly {
        unipoly_det(self.entries.clone())
    }

    /// `P^T G P` for a constant matrix `P`.
    pub fn congruence(&self, p: &Matrix) -> Self {
        let n = self.size();
        let k = p.ncols();
        let mut out = vec![vec![UniPoly::zero(); k]; k];
        for (a, row) in out.iter_mut().enumerate() {
            for (b, slot) in row.iter_mut().enumerate() {
                let mut acc = UniPoly::zero();
                for i in 0..n {
                    if p[(i, a)].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        if p[(j, b)].is_zero() {
                            continue;
                        }
                        acc = &acc + &self.entries[i][j].scale(&(&p[(i, a)] * &p[(j, b)]));
                    }
                }
                *slot = acc;
            }
        }
        MatrixFamily { entries: out }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: FamilyJson = serde_json::from_str(text)
            .map_err(|e| Error::Malformed(format!("family JSON: {e}")))?;
        if raw.entries.len() != raw.size {
            return Err(Error::DimensionMismatch {
                expected: raw.size,
                found: raw.entries.len(),
            });
        }
        let entries = raw
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|coeffs| {
                        coeffs
                            .iter()
                            .map(RatJson::to_rational)
                            .collect::<Result<Vec<_>>>()
                            .map(UniPoly::new)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }

    pub fn to_json(&self) -> String {
        let raw = FamilyJson {
            size: self.size(),
            entries: self
                .entries
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|p| {
                            p.coeffs()
                                .iter()
                                .map(|c| RatJson::Str(format!("{}/{}", c.numer(), c.denom())))
                                .collect()
                        })
                        .collect()
                })
                .collect(),
        };
        serde_json::to_string(&raw).expect("family serializes")
    }
}

impl fmt::Display for MatrixFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct FamilyJson {
    size: usize,
    entries: Vec<Vec<Vec<RatJson>>>,
}

/// A rational in JSON: `"n/d"` strings, plus bare integers on input.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RatJson {
    Int(i64),
    Str(String),
}

impl RatJson {
    fn to_rational(&self) -> Result<Rational> {
        match self {
            RatJson::Int(n) => Ok(Rational::from_integer((*n).into())),
            RatJson::Str(s) => {
                parse_rational(s).map_err(|_| Error::Malformed(format!("bad rational `{s}`")))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JantzenResult {
    /// `K_0 ⊇ K_1 ⊇ ... ⊇ K_(e+1) = 0` where `e` is the largest exponent.
    pub levels: Vec<Subspace>,
    /// `tau_0, ..., tau_e`.
    pub taus: Vec<i64>,
    pub tau_plus: i64,
    pub tau_minus: i64,
    /// Orders of vanishing of the diagonal entries, in pivot order.
    pub exponents: Vec<usize>,
}

impl JantzenResult {
    pub fn level_dims(&self) -> Vec<usize> {
        self.levels.iter().map(Subspace::dim).collect()
    }

    /// `tau_i`, or 0 beyond the last level.
    pub fn tau(&self, i: usize) -> i64 {
        self.taus.get(i).copied().unwrap_or(0)
    }
}

pub fn jantzen_filtration(g: &MatrixFamily) -> Result<JantzenResult> {
    let n = g.size();
    let det = g.det();
    let d = det.valuation().ok_or(Error::IdenticallyDegenerate)?;
    // every exponent is at most ord(det), so series mod t^(d+1) suffice
    let prec = d + 1;
    let mut w: Vec<Vec<UniPoly>> = g
        .entries
        .iter()
        .map(|r| r.iter().map(|p| p.truncate(prec)).collect())
        .collect();
    let mut basis = Matrix::identity(n);
    let mut active: Vec<usize> = (0..n).collect();
    let mut pivots: Vec<(usize, usize, i64)> = Vec::new();

    while !active.is_empty() {
        let vmin = active
            .iter()
            .flat_map(|&i| active.iter().map(move |&j| (i, j)))
            .filter_map(|(i, j)| w[i][j].valuation())
            .min()
            .expect("nonzero determinant leaves a nonzero entry");
        let p = match active
            .iter()
            .copied()
            .find(|&i| w[i][i].valuation() == Some(vmin))
        {
            Some(p) => p,
            None => {
                let (i, j) = active
                    .iter()
                    .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && w[i][j].valuation() == Some(vmin))
                    .expect("minimum is attained");
                // e_i -> e_i + e_j; the new diagonal entry has valuation vmin
                for &k in &active {
                    w[i][k] = &w[i][k] + &w[j][k];
                }
                for &k in &active {
                    w[k][i] = &w[k][i] + &w[k][j];
                }
                for r in 0..n {
                    let add = basis[(r, j)].clone();
                    basis[(r, i)] += add;
                }
                i
            }
        };
        let unit = w[p][p].shift_down(vmin);
        let inv = unit.inv_trunc(prec - vmin);
        active.retain(|&k| k != p);
        for &k in &active {
            let factor = w[k][p].shift_down(vmin).mul_trunc(&inv, prec - vmin);
            if factor.is_zero() {
                continue;
            }
            for &l in &active {
                let delta = factor.mul_trunc(&w[p][l], prec);
                w[k][l] = &w[k][l] - &delta;
            }
            w[k][p] = UniPoly::zero();
            w[p][k] = UniPoly::zero();
            let f0 = factor.coeff(0);
            if !f0.is_zero() {
                for r in 0..n {
                    let sub = &f0 * &basis[(r, p)];
                    basis[(r, k)] -= sub;
                }
            }
        }
        let sign = if unit.coeff(0).is_positive() { 1 } else { -1 };
        pivots.push((p, vmin, sign));
    }

    let emax = pivots.iter().map(|&(_, e, _)| e).max().unwrap_or(0);
    let mut taus = vec![0i64; emax + 1];
    for &(_, e, s) in &pivots {
        taus[e] += s;
    }
    let levels = (0..=emax + 1)
        .map(|i| {
            let cols: Vec<_> = pivots
                .iter()
                .filter(|&&(_, e, _)| e >= i)
                .map(|&(k, _, _)| basis.column(k))
                .collect();
            Subspace::span(n, &cols)
        })
        .collect();
    let tau_plus = taus.iter().sum();
    let tau_minus = taus
        .iter()
        .enumerate()
        .map(|(i, t)| if i % 2 == 0 { *t } else { -t })
        .sum();
    Ok(JantzenResult {
        levels,
        taus,
        tau_plus,
        tau_minus,
        exponents: pivots.iter().map(|&(_, e, _)| e).collect(),
    })
}

/// Signature of `G(t0)`, which must be nondegenerate.
pub fn evaluate_signature(g: &MatrixFamily, t0: &Rational) -> Result<i64> {
    if t0.is_zero() {
        return Err(Error::Malformed("evaluation point must be nonzero".into()));
    }
    let r = inertia(&g.eval(t0));
    if r.n_zero > 0 {
        return Err(Error::DegenerateAtPoint(t0.to_string()));
    }
    Ok(r.signature)
}

/// `(c, nu)` for `f = c x^nu`, after checking the shape of the input.
fn monomial_base(f: &Polynomial) -> Result<(Rational, usize)> {
    if f.nvars() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: f.nvars(),
        });
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("order at the origin"));
    }
    if !f.constant_term().is_zero() {
        return Err(Error::ZeroOrder);
    }
    let mut terms = f.terms();
    match (terms.next(), terms.next()) {
        (Some((m, c)), None) => Ok((c.clone(), m.degree() as usize)),
        _ => Err(Error::NonMonomialBase(f.to_string())),
    }
}

/// Order of vanishing at 0 of a nonzero polynomial in one variable.
fn order(p: &Polynomial, what: &'static str) -> Result<usize> {
    if p.nvars() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: p.nvars(),
        });
    }
    p.order()
        .map(|o| o as usize)
        .ok_or(Error::ZeroPolynomial(what))
}

/// Gram family of the relative form `(a, b) -> L_t(f1 a b)` on
/// `ℚ[x] / (f - t)` localized at the origin, for `f = c x^nu`.
///
/// The basis is `1, x, ..., x^(nu-1)` with `x^nu = t / c`, and `L_t` reads
/// the coefficient of `x^(nu-1)`, negated when `c < 0` so that `L_0(f') > 0`.
pub fn univariate_relative_family(f: &Polynomial, f1: &Polynomial) -> Result<MatrixFamily> {
    let (c, nu) = monomial_base(f)?;
    if f1.vars() != f.vars() {
        return Err(Error::RingMismatch);
    }
    let inv_c = c.recip();
    let flip = c.is_negative();
    let entry = |s: usize| -> UniPoly {
        // coefficient of x^(nu-1) in f1 * x^s after x^nu -> t/c
        let mut acc = UniPoly::zero();
        for (m, a) in f1.terms() {
            let e = m.degree() as usize + s;
            if e % nu == nu - 1 {
                let q = e / nu;
                let mut coeff = a * num_traits::pow(inv_c.clone(), q);
                if flip {
                    coeff = -coeff;
                }
                acc = &acc + &UniPoly::monomial(coeff, q);
            }
        }
        acc
    };
    MatrixFamily::new(
        (0..nu)
            .map(|i| (0..nu).map(|j| entry(i + j)).collect())
            .collect(),
    )
}

/// Dimensions of the filtration levels predicted by the colon ideals
/// `(f^m : f1) = (x^max(am - b, 0))` for `f = x^a u`, `f1 = x^b v`:
/// `dim K_m = max(a - max(am - b, 0), 0)`. Listed from `K_0` up to and
/// including the first zero level.
pub fn univariate_colon_flag(f: &Polynomial, f1: &Polynomial) -> Result<Vec<usize>> {
    let a = order(f, "order at the origin")?;
    if a == 0 {
        return Err(Error::ZeroOrder);
    }
    let b = order(f1, "order at the origin")?;
    let mut dims = vec![a];
    let mut m = 1;
    loop {
        let c = (a * m).saturating_sub(b);
        let d = a.saturating_sub(c);
        dims.push(d);
        if d == 0 {
            return Ok(dims);
        }
        m += 1;
    }
}

/// The same dimensions through the shift relation between consecutive colon
/// ideals: `dim K_m = a + c_(m-1) - c_m` with `c_m = max(am - b, 0)`.
pub fn colon_flag_by_shift(a: usize, b: usize) -> Vec<usize> {
    let c = |m: usize| (a * m).saturating_sub(b);
    let mut dims = vec![a];
    let mut m = 1;
    loop {
        let d = (a + c(m - 1)).saturating_sub(c(m));
        dims.push(d);
        if d == 0 {
            return dims;
        }
        m += 1;
    }
}
