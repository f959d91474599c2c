//! Independent oracles for the integration tests: univariate polynomials
//! over the rationals, Sturm sequences, root isolation, and signed preimage
//! counts in one and two variables. Nothing here calls into the engine's
//! algebra; the library is only used to parse polynomials.

#![allow(dead_code)]

use std::collections::BTreeMap;

use flagsig::polyring::{make_vars, parse_poly, Polynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Upoly(pub Vec<Q>);

impl Upoly {
    pub fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Upoly(c)
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Upoly::new(c.iter().map(|&n| q(n, 1)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn deg(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.0.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Upoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * q(i as i64, 1))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let get = |p: &Self, i: usize| p.0.get(i).cloned().unwrap_or_else(Q::zero);
        Upoly::new((0..n).map(|i| get(self, i) - get(other, i)).collect())
    }

    pub fn shift_const(&self, c: &Q) -> Self {
        self.sub(&Upoly::new(vec![c.clone()]))
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.deg().expect("division by zero polynomial");
        let lead = d.0[dd].clone();
        let mut r = self.0.clone();
        let mut quo = vec![Q::zero(); r.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap() / &lead;
            for (i, dc) in d.0.iter().enumerate() {
                r[k + i] -= &c * dc;
            }
            quo[k] = c;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (Upoly::new(quo), Upoly::new(r))
    }

    pub fn monic(&self) -> Self {
        match self.0.last() {
            Some(l) => Upoly::new(self.0.iter().map(|c| c / l).collect()),
            None => self.clone(),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn squarefree(&self) -> Self {
        let g = self.gcd(&self.derivative());
        if g.deg() == Some(0) {
            self.clone()
        } else {
            self.divrem(&g).0
        }
    }
}

fn sign(x: &Q) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Sturm sequence of a squarefree polynomial.
pub fn sturm(p: &Upoly) -> Vec<Upoly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            return seq;
        }
        let r = seq[n - 2].divrem(&seq[n - 1]).1;
        // scale by a positive constant to keep coefficients small
        let r = match r.0.last() {
            Some(l) => Upoly::new(r.0.iter().map(|c| -c / l.abs()).collect()),
            None => r,
        };
        seq.push(r);
    }
}

fn variations(seq: &[Upoly], x: &Q) -> usize {
    let signs: Vec<i32> = seq
        .iter()
        .map(|p| sign(&p.eval(x)))
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct roots in `(a, b]`.
pub fn count_roots(seq: &[Upoly], a: &Q, b: &Q) -> usize {
    variations(seq, a) - variations(seq, b)
}

/// Isolating intervals `(lo, hi)` for the roots of `p` in `(lo, hi)`, each
/// with `p(lo) p(hi) < 0`, refined to width at most `2^-bits`.
pub fn isolate(p: &Upoly, lo: &Q, hi: &Q, bits: u32) -> Vec<(Q, Q)> {
    let p = p.squarefree();
    let seq = sturm(&p);
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone())];
    let two = q(2, 1);
    while let Some((a, b)) = stack.pop() {
        let n = count_roots(&seq, &a, &b);
        if n == 0 {
            continue;
        }
        let mid = (&a + &b) / &two;
        if n == 1 && !p.eval(&b).is_zero() && !p.eval(&a).is_zero() {
            out.push((a, b));
            continue;
        }
        if p.eval(&mid).is_zero() {
            // nudge the split point off the root
            let eps = (&b - &a) / q(1000, 1);
            stack.push((a, &mid - &eps));
            stack.push((&mid - &eps, &mid + &eps));
            stack.push((&mid + &eps, b));
        } else {
            stack.push((a, mid.clone()));
            stack.push((mid, b));
        }
    }
    let width = Q::new(BigInt::one(), BigInt::one() << bits);
    out.into_iter()
        .map(|(mut a, mut b)| {
            let sa = sign(&p.eval(&a));
            while &b - &a > width {
                let m = (&a + &b) / &two;
                let sm = sign(&p.eval(&m));
                if sm == 0 {
                    return (m.clone(), m);
                }
                if sm == sa {
                    a = m;
                } else {
                    b = m;
                }
            }
            (a, b)
        })
        .collect()
}

fn mid(iv: &(Q, Q)) -> Q {
    (&iv.0 + &iv.1) / q(2, 1)
}

/// Local degree of `p` at 0: signed count of the preimages of `value` in
/// `(-delta, delta)`. `value` must be regular.
pub fn degree_1d(p: &Upoly, delta: &Q, value: &Q) -> i64 {
    let shifted = p.shift_const(value);
    assert_eq!(
        shifted.gcd(&p.derivative()).deg(),
        Some(0),
        "value is not regular"
    );
    let dp = p.derivative();
    isolate(&shifted, &-delta.clone(), delta, 60)
        .iter()
        .map(|iv| sign(&dp.eval(&mid(iv))) as i64)
        .sum()
}

/// Polynomial in two variables, keyed by `(i, j)` for `x^i y^j`.
pub type Bpoly = BTreeMap<(u32, u32), Q>;

pub fn to_bpoly(p: &Polynomial) -> Bpoly {
    assert_eq!(p.nvars(), 2);
    p.terms()
        .map(|(m, c)| ((m.exponents()[0], m.exponents()[1]), c.clone()))
        .collect()
}

pub fn parse_bpoly(text: &str) -> Bpoly {
    to_bpoly(&parse_poly(text, &make_vars(&["x", "y"])).unwrap())
}

pub fn parse_upoly(text: &str) -> Upoly {
    let p = parse_poly(text, &make_vars(&["x"])).unwrap();
    let deg = p
        .terms()
        .map(|(m, _)| m.exponents()[0] as usize)
        .max()
        .unwrap_or(0);
    let mut c = vec![Q::zero(); deg + 1];
    for (m, v) in p.terms() {
        c[m.exponents()[0] as usize] = v.clone();
    }
    Upoly::new(c)
}

pub fn beval(p: &Bpoly, x: &Q, y: &Q) -> Q {
    p.iter()
        .map(|(&(i, j), c)| {
            c * num_traits::pow(x.clone(), i as usize) * num_traits::pow(y.clone(), j as usize)
        })
        .sum()
}

fn bderiv(p: &Bpoly, var: usize) -> Bpoly {
    let mut out = Bpoly::new();
    for (&(i, j), c) in p {
        let e = if var == 0 { i } else { j };
        if e > 0 {
            let key = if var == 0 { (i - 1, j) } else { (i, j - 1) };
            out.insert(key, c * q(e as i64, 1));
        }
    }
    out
}

fn shift(p: &Bpoly, c: &Q) -> Bpoly {
    let mut out = p.clone();
    let e = out.entry((0, 0)).or_insert_with(Q::zero);
    *e -= c;
    out
}

fn swap(p: &Bpoly) -> Bpoly {
    p.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect()
}

fn total_degree(p: &Bpoly) -> usize {
    p.keys().map(|&(i, j)| (i + j) as usize).max().unwrap_or(0)
}

/// Coefficients in `y` of `p(x0, y)`, padded to the formal `y`-degree.
fn specialize(p: &Bpoly, x0: &Q) -> Vec<Q> {
    let dy = p.keys().map(|&(_, j)| j as usize).max().unwrap_or(0);
    let mut c = vec![Q::zero(); dy + 1];
    for (&(i, j), v) in p {
        c[j as usize] += v * num_traits::pow(x0.clone(), i as usize);
    }
    c
}

fn det(mut m: Vec<Vec<Q>>) -> Q {
    let n = m.len();
    let mut d = Q::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Q::zero();
        };
        if piv != col {
            m.swap(piv, col);
            d = -d;
        }
        d *= &m[col][col];
        for r in col + 1..n {
            let f = &m[r][col] / &m[col][col];
            if f.is_zero() {
                continue;
            }
            let (top, bottom) = m.split_at_mut(r);
            for (dst, src) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *dst -= &f * src;
            }
        }
    }
    d
}

/// Sylvester resultant of two coefficient lists with formal degrees.
fn sylvester(a: &[Q], b: &[Q]) -> Q {
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    if size == 0 {
        return Q::one();
    }
    let mut s = vec![vec![Q::zero(); size]; size];
    for r in 0..n {
        for (k, c) in a.iter().rev().enumerate() {
            s[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in b.iter().rev().enumerate() {
            s[n + r][r + k] = c.clone();
        }
    }
    det(s)
}

/// `Res_y(p, q)` as a polynomial in `x`, by evaluation and interpolation.
pub fn resultant_y(p: &Bpoly, r: &Bpoly) -> Upoly {
    let bound = total_degree(p) * total_degree(r) + 1;
    let xs: Vec<Q> = (0..=bound as i64).map(|k| q(k, 1)).collect();
    let ys: Vec<Q> = xs
        .iter()
        .map(|x| sylvester(&specialize(p, x), &specialize(r, x)))
        .collect();
    interpolate(&xs, &ys)
}

fn interpolate(xs: &[Q], ys: &[Q]) -> Upoly {
    let mut acc = Upoly::new(vec![]);
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        let mut basis = Upoly::new(vec![yi.clone()]);
        for (j, xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            let d = xi - xj;
            // basis *= (x - xj) / d
            let mut next = vec![Q::zero(); basis.0.len() + 1];
            for (k, c) in basis.0.iter().enumerate() {
                next[k + 1] += c / &d;
                next[k] -= c * xj / &d;
            }
            basis = Upoly::new(next);
        }
        acc = acc.sub(&Upoly::new(basis.0.iter().map(|c| -c).collect()));
    }
    acc
}

/// Local degree at 0 of the plane map `(p, r)`: signed count of preimages of
/// `(a, b)` in the box `(-delta, delta)^2`. Preimages are found from the
/// roots of the two resultants, paired by the residual at their midpoints.
/// Returns `None` when the value does not look regular (shared coordinates,
/// unmatched roots or a vanishing Jacobian), so the caller can retry.
pub fn degree_2d(p: &Bpoly, r: &Bpoly, delta: &Q, a: &Q, b: &Q) -> Option<i64> {
    let (pa, rb) = (shift(p, a), shift(r, b));
    let rx = resultant_y(&pa, &rb);
    let ry = resultant_y(&swap(&pa), &swap(&rb));
    if rx.is_zero() || ry.is_zero() {
        return None;
    }
    let one = q(1, 1);
    let xs = isolate(&rx, &-delta.clone(), delta, 60);
    let ys = isolate(&ry, &-one.clone(), &one, 60);
    let jac = |x: &Q, y: &Q| {
        beval(&bderiv(p, 0), x, y) * beval(&bderiv(r, 1), x, y)
            - beval(&bderiv(p, 1), x, y) * beval(&bderiv(r, 0), x, y)
    };
    let mut used = vec![false; ys.len()];
    let mut total = 0;
    for xi in &xs {
        let xm = mid(xi);
        let residual = |yi: &(Q, Q)| {
            let ym = mid(yi);
            (beval(&pa, &xm, &ym).abs() + beval(&rb, &xm, &ym).abs())
                .to_f64()
                .unwrap_or(f64::INFINITY)
        };
        let best = (0..ys.len()).min_by(|&i, &j| residual(&ys[i]).total_cmp(&residual(&ys[j])));
        let Some(k) = best.filter(|&k| residual(&ys[k]) < 1e-9) else {
            // a real x whose partner y is complex or far away
            continue;
        };
        if used[k] {
            return None;
        }
        used[k] = true;
        let ym = mid(&ys[k]);
        if ym.abs() >= *delta {
            continue;
        }
        let s = sign(&jac(&xm, &ym));
        if s == 0 {
            return None;
        }
        total += s as i64;
    }
    Some(total)
}

/// A small random rational value `n / 2^bits` with `n` in `1..=999` and a
/// random sign.
pub fn small_value<R: Rng>(rng: &mut R, bits: u32) -> Q {
    let n: i64 = rng.gen_range(1..=999);
    let s = if rng.gen_bool(0.5) { 1 } else { -1 };
    Q::new(BigInt::from(s * n), BigInt::one() << bits)
}

/// Signed count `sum sign(f1(r) f'(r))` over the real roots `r` of `f = t`
/// in `(-delta, delta)`: the signature of the residue form with weight `f1`
/// on the fibre over `t`.
pub fn signed_roots(f: &Upoly, f1: &Upoly, t: &Q, delta: &Q) -> i64 {
    let df = f.derivative();
    let f1_seq = if f1.deg().unwrap_or(0) > 0 {
        Some(sturm(&f1.squarefree()))
    } else {
        None
    };
    isolate(&f.shift_const(t), &-delta.clone(), delta, 40)
        .into_iter()
        .map(|(mut a, mut b)| {
            // shrink until f1 has no root in the interval
            let g = f.shift_const(t);
            while f1_seq
                .as_ref()
                .is_some_and(|s| count_roots(s, &a, &b) > 0 || f1.eval(&a).is_zero())
            {
                let m = (&a + &b) / q(2, 1);
                if sign(&g.eval(&m)) == sign(&g.eval(&a)) {
                    a = m;
                } else {
                    b = m;
                }
            }
            let m = mid(&(a, b));
            (sign(&f1.eval(&m)) * sign(&df.eval(&m))) as i64
        })
        .sum()
}
