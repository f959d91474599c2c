//! The kernel-image flag of a nilpotent element, its order-m forms and the
//! primitive (Jordan block) decomposition.
//!
//! For `f` in the maximal ideal with `f^(l+1) = 0` the flag is
//! `K_0 = A`, `K_m = Ann(f) ∩ (f^(m-1))` for `m >= 1`, ending in
//! `K_(l+2) = 0`. On `K_m / K_(m+1)` the pairing `(a, b) -> L(a/f^(m-1) * b)`
//! is nondegenerate and its signature does not depend on `L`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{AlgebraElement, LinearFunctional, Subspace, ZeroDimAlgebra};
use crate::bilinear::{form_on, inertia, quotient_representatives, SymForm};
use crate::error::{Error, Result};
use crate::linalg::{unit_vec, Matrix, Vector};

/// Seed for the functionals used to cross-check signatures when the caller
/// does not supply one.
pub const DEFAULT_CHECK_SEED: u64 = 0x5eed;

/// Number of extra random functionals tried by [`flag_signatures`].
pub const DEFAULT_TRIALS: usize = 3;

#[derive(Clone, Debug, PartialEq)]
pub struct Flag {
    /// `K_0, K_1, ..., K_(l+2)`.
    pub levels: Vec<Subspace>,
    pub ell: usize,
}

impl Flag {
    pub fn dims(&self) -> Vec<usize> {
        self.levels.iter().map(Subspace::dim).collect()
    }

    /// `dim K_m - dim K_(m+1)` for `m = 0 ..= l+1`.
    pub fn quotient_dims(&self) -> Vec<usize> {
        self.levels
            .windows(2)
            .map(|w| w[0].dim() - w[1].dim())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PrimitiveDecomposition {
    /// `P_1, ..., P_(l+1)`.
    pub spaces: Vec<Subspace>,
    /// `n_j = dim P_j`: the number of Jordan blocks of size `j`.
    pub block_counts: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlagSignatures {
    /// `sigma_m` for `m = 0 ..= l+1`.
    pub sigma: Vec<i64>,
    /// `dim K_m / K_(m+1)` for the same range.
    pub quotient_dims: Vec<usize>,
    pub ell: usize,
}

impl FlagSignatures {
    /// Sum of `sigma_m` over `m >= 1`.
    pub fn k_plus(&self) -> i64 {
        self.sigma.iter().skip(1).sum()
    }

    /// Sum of `(-1)^m sigma_m` over `m >= 1`.
    pub fn k_minus(&self) -> i64 {
        self.sigma
            .iter()
            .enumerate()
            .skip(1)
            .map(|(m, s)| if m % 2 == 0 { *s } else { -s })
            .sum()
    }

    /// Sum of `sigma_m` over odd `m`.
    pub fn odd_sum(&self) -> i64 {
        self.sigma
            .iter()
            .enumerate()
            .filter(|(m, _)| m % 2 == 1)
            .map(|(_, s)| s)
            .sum()
    }
}

pub fn build_flag(alg: &ZeroDimAlgebra, f: &AlgebraElement) -> Result<Flag> {
    let ell = alg.nilpotency_index(f)?;
    let n = alg.dim();
    let ann = alg.ann(f);
    let mut levels = vec![Subspace::full(n)];
    for m in 1..=ell + 1 {
        levels.push(ann.intersect(&alg.ideal_of(f, m - 1)));
    }
    levels.push(Subspace::zero(n));
    Ok(Flag { levels, ell })
}

/// A solution `x` of `f^(m-1) x = a`: the echelon solution with all free
/// coordinates zero.
pub fn divide_by_power(
    alg: &ZeroDimAlgebra,
    f: &AlgebraElement,
    m: usize,
    a: &AlgebraElement,
) -> Result<AlgebraElement> {
    let power = m.saturating_sub(1);
    alg.mult_matrix(f)
        .pow(power)
        .solve(a.coords())
        .map(AlgebraElement::new)
        .ok_or(Error::NotDivisible { power })
}

/// Representatives of one flag quotient, stored so that the Gram matrix for
/// any functional is `left^T G_L right`.
struct Level {
    left: Matrix,
    right: Matrix,
}

impl Level {
    fn gram(&self, g: &Matrix) -> Matrix {
        self.left.transpose().mul(g).mul(&self.right)
    }
}

fn levels(alg: &ZeroDimAlgebra, f: &AlgebraElement, flag: &Flag) -> Result<Vec<Level>> {
    let n = alg.dim();
    let mf = alg.mult_matrix(f);
    let mut out = Vec::new();
    // m = 0: L(f a b) on A / Ann(f)
    let reps = quotient_representatives(alg, &flag.levels[1]);
    let right = Matrix::from_columns(n, &reps);
    out.push(Level {
        left: mf.mul(&right),
        right,
    });
    for m in 1..=flag.ell + 1 {
        let reps = flag.levels[m + 1].complement_in(&flag.levels[m]);
        let divided: Vec<Vector> = reps
            .iter()
            .map(|r| {
                divide_by_power(alg, f, m, &AlgebraElement::new(r.clone()))
                    .map(AlgebraElement::into_coords)
            })
            .collect::<Result<_>>()?;
        out.push(Level {
            left: Matrix::from_columns(n, &divided),
            right: Matrix::from_columns(n, &reps),
        });
    }
    Ok(out)
}

/// The nondegenerate form induced on `K_m / K_(m+1)`; for `m = 0` the form
/// `L(f a b)` on `A / Ann(f)`.
pub fn order_m_form(
    alg: &ZeroDimAlgebra,
    l: &LinearFunctional,
    f: &AlgebraElement,
    m: usize,
) -> Result<SymForm> {
    let flag = build_flag(alg, f)?;
    if m > flag.ell + 1 {
        return Err(Error::Malformed(format!(
            "level {m} exceeds l + 1 = {}",
            flag.ell + 1
        )));
    }
    let lv = levels(alg, f, &flag)?;
    let gram = lv[m].gram(&alg.pairing_matrix(l));
    let form = SymForm::new(gram, format!("K_{m} / K_{}", m + 1));
    if form.signature().n_zero > 0 {
        return Err(Error::DegeneracyViolation { level: m });
    }
    Ok(form)
}

fn signatures_for(lv: &[Level], g: &Matrix) -> Result<Vec<i64>> {
    lv.iter()
        .enumerate()
        .map(|(m, level)| {
            let r = inertia(&level.gram(g));
            if r.n_zero > 0 {
                Err(Error::DegeneracyViolation { level: m })
            } else {
                Ok(r.signature)
            }
        })
        .collect()
}

/// Flag signatures under `l`, cross-checked against a few random functionals.
pub fn flag_signatures(
    alg: &ZeroDimAlgebra,
    l: &LinearFunctional,
    f: &AlgebraElement,
) -> Result<FlagSignatures> {
    flag_signatures_checked(alg, l, f, DEFAULT_TRIALS, DEFAULT_CHECK_SEED)
}

pub fn flag_signatures_checked(
    alg: &ZeroDimAlgebra,
    l: &LinearFunctional,
    f: &AlgebraElement,
    trials: usize,
    seed: u64,
) -> Result<FlagSignatures> {
    let flag = build_flag(alg, f)?;
    let lv = levels(alg, f, &flag)?;
    let sigma = signatures_for(&lv, &alg.pairing_matrix(l))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let other = alg.random_functional(&mut rng);
        let s = signatures_for(&lv, &alg.pairing_matrix(&other))?;
        if let Some(m) = (0..sigma.len()).find(|&m| s[m] != sigma[m]) {
            return Err(Error::FunctionalDependence { level: m });
        }
    }
    if cfg!(debug_assertions) {
        let pd = primitive_decomposition(alg, f)?;
        let pairing = primitive_pairing_signatures(alg, l, f, &pd);
        debug_assert_eq!(
            &pairing[..],
            &sigma[1..],
            "primitive pairings disagree with flag forms"
        );
    }
    Ok(FlagSignatures {
        sigma,
        quotient_dims: flag.quotient_dims(),
        ell: flag.ell,
    })
}

/// Jordan decomposition of multiplication by `f` into primitive subspaces:
/// `P_j` is a complement on which `f^(j-1)` is injective and `f^j` vanishes.
pub fn primitive_decomposition(
    alg: &ZeroDimAlgebra,
    f: &AlgebraElement,
) -> Result<PrimitiveDecomposition> {
    let ell = alg.nilpotency_index(f)?;
    let n = alg.dim();
    let mf = alg.mult_matrix(f);
    // ann[j] = Ann(f^j) for j = 0 ..= l+1
    let ann: Vec<Subspace> = (0..=ell + 1).map(|j| alg.ann_power(f, j)).collect();
    let units: Vec<Vector> = (0..n).map(|i| unit_vec(n, i)).collect();
    let mut spaces = vec![Subspace::zero(n); ell + 1];
    spaces[ell] = Subspace::span(n, &ann[ell].extend_greedy(&units));
    for j in (1..=ell).rev() {
        let mut taken = ann[j - 1].clone();
        for k in j + 1..=ell + 1 {
            let shift = mf.pow(k - j);
            let images: Vec<Vector> = spaces[k - 1]
                .basis()
                .iter()
                .map(|v| shift.mul_vec(v))
                .collect();
            taken = taken.sum(&Subspace::span(n, &images));
        }
        spaces[j - 1] = Subspace::span(n, &taken.complement_in(&ann[j]));
    }
    let block_counts = spaces.iter().map(Subspace::dim).collect();
    Ok(PrimitiveDecomposition {
        spaces,
        block_counts,
    })
}

/// Signatures of `(a, b) -> L(f^(m-1) a b)` on `P_m`, for `m = 1 ..= l+1`.
pub fn primitive_pairing_signatures(
    alg: &ZeroDimAlgebra,
    l: &LinearFunctional,
    f: &AlgebraElement,
    pd: &PrimitiveDecomposition,
) -> Vec<i64> {
    pd.spaces
        .iter()
        .enumerate()
        .map(|(i, p)| inertia(&form_on(alg, l, &alg.pow(f, i), p.basis())).signature)
        .collect()
}

pub fn primitive_pairing_signature(
    alg: &ZeroDimAlgebra,
    l: &LinearFunctional,
    f: &AlgebraElement,
    m: usize,
) -> Result<i64> {
    let pd = primitive_decomposition(alg, f)?;
    if m == 0 || m > pd.spaces.len() {
        return Err(Error::Malformed(format!(
            "primitive level {m} out of range 1..={}",
            pd.spaces.len()
        )));
    }
    Ok(inertia(&form_on(
        alg,
        l,
        &alg.pow(f, m - 1),
        pd.spaces[m - 1].basis(),
    ))
    .signature)
}

/// Orthogonal complement of `sub` under the pairing `L(a b)`.
pub fn orthogonal_complement(
    alg: &ZeroDimAlgebra,
    l: &LinearFunctional,
    sub: &Subspace,
) -> Subspace {
    if sub.dim() == 0 {
        return Subspace::full(alg.dim());
    }
    sub.basis_matrix()
        .transpose()
        .mul(&alg.pairing_matrix(l))
        .kernel_space()
}

/// Checks `K_m^⊥ = (f) + Ann(f^(m-1))` for every `m = 1 ..= l+2`.
pub fn flag_orthogonality_holds(
    alg: &ZeroDimAlgebra,
    l: &LinearFunctional,
    f: &AlgebraElement,
) -> Result<bool> {
    let flag = build_flag(alg, f)?;
    let image = alg.ideal_of(f, 1);
    Ok((1..flag.levels.len()).all(|m| {
        orthogonal_complement(alg, l, &flag.levels[m]) == image.sum(&alg.ann_power(f, m - 1))
    }))
}
