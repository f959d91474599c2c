//! Symmetric bilinear forms on the algebra and their inertia.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::algebra::{AlgebraElement, LinearFunctional, Subspace, ZeroDimAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{unit_vec, Matrix, Vector};

/// A symmetric Gram matrix together with a short description of the space
/// it lives on.
#[derive(Clone, Debug, PartialEq)]
pub struct SymForm {
    gram: Matrix,
    carrier: String,
}

impl SymForm {
    pub fn new(gram: Matrix, carrier: impl Into<String>) -> Self {
        assert!(gram.is_symmetric(), "Gram matrix must be symmetric");
        SymForm {
            gram,
            carrier: carrier.into(),
        }
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn carrier(&self) -> &str {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.gram.nrows()
    }

    pub fn signature(&self) -> SignatureReport {
        signature(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SignatureReport {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
    pub signature: i64,
    pub rank: usize,
}

impl SignatureReport {
    fn from_counts(n_plus: usize, n_minus: usize, n_zero: usize) -> Self {
        SignatureReport {
            n_plus,
            n_minus,
            n_zero,
            signature: n_plus as i64 - n_minus as i64,
            rank: n_plus + n_minus,
        }
    }
}

/// Gram matrix of `(a, b) -> L(weight * a * b)` on the given vectors.
pub fn form_on(
    alg: &ZeroDimAlgebra,
    l: &LinearFunctional,
    weight: &AlgebraElement,
    reps: &[Vector],
) -> Matrix {
    let g = alg.pairing_matrix(l);
    let b = Matrix::from_columns(alg.dim(), reps);
    let wb = alg.mult_matrix(weight).mul(&b);
    wb.transpose().mul(&g).mul(&b)
}

/// The form `L(weight * a * b)` on the canonical basis of `carrier`.
pub fn gram_form(
    alg: &ZeroDimAlgebra,
    l: &LinearFunctional,
    weight: &AlgebraElement,
    carrier: &Subspace,
) -> SymForm {
    let desc = if carrier.dim() == alg.dim() {
        "algebra".to_string()
    } else {
        format!("subspace of dimension {}", carrier.dim())
    };
    SymForm::new(form_on(alg, l, weight, carrier.basis()), desc)
}

/// Inertia of a symmetric rational matrix by congruence diagonalization.
pub fn inertia(gram: &Matrix) -> SignatureReport {
    let n = gram.nrows();
    let mut g = gram.clone();
    let mut active: Vec<usize> = (0..n).collect();
    let (mut plus, mut minus) = (0, 0);
    loop {
        // diagonal pivot with the largest numerator, lowest index on ties
        let pivot = active
            .iter()
            .copied()
            .filter(|&i| !g[(i, i)].is_zero())
            .max_by(
                |&a, &b| match g[(a, a)].numer().abs().cmp(&g[(b, b)].numer().abs()) {
                    Ordering::Equal => b.cmp(&a),
                    o => o,
                },
            );
        if let Some(p) = pivot {
            let d = g[(p, p)].clone();
            if d.is_positive() {
                plus += 1;
            } else {
                minus += 1;
            }
            active.retain(|&i| i != p);
            for &k in &active {
                let factor = &g[(k, p)] / &d;
                if factor.is_zero() {
                    continue;
                }
                for &l in &active {
                    let delta = &factor * &g[(p, l)];
                    g[(k, l)] -= delta;
                }
            }
            continue;
        }
        let off = active
            .iter()
            .flat_map(|&i| active.iter().map(move |&j| (i, j)))
            .find(|&(i, j)| i < j && !g[(i, j)].is_zero());
        match off {
            // e_i -> e_i + e_j, e_j -> e_i - e_j makes both diagonal
            // entries nonzero (2 g_ij and -2 g_ij)
            Some((i, j)) => {
                for &k in &active {
                    let (a, b) = (g[(i, k)].clone(), g[(j, k)].clone());
                    g[(i, k)] = &a + &b;
                    g[(j, k)] = a - b;
                }
                for &k in &active {
                    let (a, b) = (g[(k, i)].clone(), g[(k, j)].clone());
                    g[(k, i)] = &a + &b;
                    g[(k, j)] = a - b;
                }
            }
            None => return SignatureReport::from_counts(plus, minus, active.len()),
        }
    }
}

pub fn signature(f: &SymForm) -> SignatureReport {
    inertia(&f.gram)
}

/// Signature of the form `L(a b)` on the whole algebra.
pub fn el_signature(alg: &ZeroDimAlgebra) -> i64 {
    let l = alg.default_functional();
    gram_form(alg, &l, &alg.one(), &Subspace::full(alg.dim()))
        .signature()
        .signature
}

/// Canonical representatives of `A / sub`, taken from the monomial basis.
pub fn quotient_representatives(alg: &ZeroDimAlgebra, sub: &Subspace) -> Vec<Vector> {
    let n = alg.dim();
    let units: Vec<Vector> = (0..n).map(|i| unit_vec(n, i)).collect();
    sub.extend_greedy(&units)
}

/// Order-0 form `L(h a b)` on `B / Ann(h)`, with the default functional.
pub fn order0_form(alg: &ZeroDimAlgebra, h: &AlgebraElement) -> Result<SymForm> {
    order0_form_with(alg, &alg.default_functional(), h)
}

pub fn order0_form_with(
    alg: &ZeroDimAlgebra,
    l: &LinearFunctional,
    h: &AlgebraElement,
) -> Result<SymForm> {
    if h.is_zero() {
        return Ok(SymForm::new(Matrix::zeros(0, 0), "zero quotient"));
    }
    // the socle generator of B / Ann(h) is any x with h x = J
    if alg.mult_matrix(h).solve(alg.jacobian().coords()).is_none() {
        return Err(Error::SocleDivisionFailure);
    }
    let reps = quotient_representatives(alg, &alg.ann(h));
    let form = SymForm::new(
        form_on(alg, l, h, &reps),
        format!("quotient by Ann(h), dimension {}", reps.len()),
    );
    if form.signature().n_zero > 0 {
        return Err(Error::DegeneracyViolation { level: 0 });
    }
    Ok(form)
}

pub fn order0_signature(alg: &ZeroDimAlgebra, h: &AlgebraElement) -> Result<i64> {
    Ok(order0_form(alg, h)?.signature().signature)
}
