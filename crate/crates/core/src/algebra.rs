//! The local algebra `O / (f_1, ..., f_n)` as concrete linear algebra.

use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{dot, is_zero_vec, unit_vec, zero_vec, Matrix, Vector};
use crate::localbasis::{
    normal_form, quotient_basis, standard_basis, LocalOrdering, QuotientBasis, StandardBasis,
};
use crate::polyring::{jacobian_det, Monomial, Polynomial, Rational, Vars};

pub use crate::linalg::Subspace;

/// Coordinates of an algebra element in the monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    coords: Vector,
}

impl AlgebraElement {
    pub fn new(coords: Vector) -> Self {
        AlgebraElement { coords }
    }

    pub fn zero(dim: usize) -> Self {
        AlgebraElement {
            coords: zero_vec(dim),
        }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vector {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coords)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        AlgebraElement {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        AlgebraElement {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// A linear functional on the algebra, positive on the Jacobian class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFunctional {
    covector: Vector,
}

impl LinearFunctional {
    pub fn covector(&self) -> &[Rational] {
        &self.covector
    }

    pub fn apply(&self, a: &AlgebraElement) -> Rational {
        dot(&self.covector, &a.coords)
    }

    pub fn apply_vec(&self, v: &[Rational]) -> Rational {
        dot(&self.covector, v)
    }
}

/// Finite-dimensional local algebra with its multiplication table.
#[derive(Clone, Debug)]
pub struct ZeroDimAlgebra {
    generators: Vec<Polynomial>,
    sb: StandardBasis,
    qbasis: QuotientBasis,
    /// `basis_mult[i]` is the matrix of multiplication by the i-th basis
    /// monomial; its j-th column is the product `b_i * b_j`.
    basis_mult: Vec<Matrix>,
    jacobian: AlgebraElement,
    socle: Subspace,
}

/// Builds the local algebra of a complete intersection with as many
/// generators as variables, checking that the Jacobian class spans the socle.
pub fn build_algebra(gens: &[Polynomial]) -> Result<ZeroDimAlgebra> {
    let vars = gens
        .first()
        .ok_or_else(|| Error::Malformed("no generators".into()))?
        .vars()
        .clone();
    if gens.iter().any(|g| g.vars() != &vars) {
        return Err(Error::RingMismatch);
    }
    if gens.len() != vars.len() {
        return Err(Error::DimensionMismatch {
            expected: vars.len(),
            found: gens.len(),
        });
    }
    let sb = standard_basis(gens, &LocalOrdering::new(&vars))?;
    let qbasis = quotient_basis(&sb)?;
    let n = qbasis.dimension();
    let mons = qbasis.monomials().to_vec();

    let coords_of = |p: &Polynomial| -> Result<Vector> {
        let nf = normal_form(p, &sb)?;
        let mut v = zero_vec(n);
        for (m, c) in nf.terms() {
            let i = qbasis
                .index_of(m)
                .expect("normal form is supported on standard monomials");
            v[i] = c.clone();
        }
        Ok(v)
    };

    let mut table = vec![vec![Vector::new(); n]; n];
    for i in 0..n {
        for j in i..n {
            let prod = Polynomial::monomial(&vars, mons[i].mul(&mons[j]), Rational::one());
            let v = coords_of(&prod)?;
            table[j][i] = v.clone();
            table[i][j] = v;
        }
    }
    let basis_mult = table
        .iter()
        .map(|row| Matrix::from_columns(n, row))
        .collect();

    let names: Vec<&str> = vars.iter().map(String::as_str).collect();
    let jac = coords_of(&jacobian_det(gens, &names)?)?;

    let mut alg = ZeroDimAlgebra {
        generators: gens.to_vec(),
        sb,
        qbasis,
        basis_mult,
        jacobian: AlgebraElement::new(jac),
        socle: Subspace::full(n),
    };
    let mut socle = Subspace::full(n);
    for i in 0..vars.len() {
        let x = alg.element_of(&Polynomial::monomial(
            &vars,
            Monomial::var(vars.len(), i),
            Rational::one(),
        ))?;
        socle = socle.intersect(&alg.mult_matrix(&x).kernel_space());
    }
    if socle.dim() != 1 {
        return Err(Error::DegenerateSocle(format!(
            "socle has dimension {}",
            socle.dim()
        )));
    }
    if alg.jacobian.is_zero() {
        return Err(Error::DegenerateSocle("Jacobian class vanishes".into()));
    }
    if !socle.contains(alg.jacobian.coords()) {
        return Err(Error::DegenerateSocle(
            "Jacobian class is not in the socle".into(),
        ));
    }
    alg.socle = socle;
    Ok(alg)
}

impl ZeroDimAlgebra {
    pub fn dim(&self) -> usize {
        self.qbasis.dimension()
    }

    pub fn vars(&self) -> &Vars {
        self.qbasis.vars()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn standard_basis(&self) -> &StandardBasis {
        &self.sb
    }

    pub fn qbasis(&self) -> &QuotientBasis {
        &self.qbasis
    }

    pub fn basis_monomials(&self) -> &[Monomial] {
        self.qbasis.monomials()
    }

    pub fn jacobian(&self) -> &AlgebraElement {
        &self.jacobian
    }

    pub fn socle(&self) -> &Subspace {
        &self.socle
    }

    /// The unit; the monomial `1` is always the first basis element.
    pub fn one(&self) -> AlgebraElement {
        AlgebraElement::new(unit_vec(self.dim(), 0))
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        AlgebraElement::new(unit_vec(self.dim(), i))
    }

    /// The maximal ideal: everything spanned by non-constant basis monomials.
    pub fn maximal_ideal(&self) -> Subspace {
        let n = self.dim();
        Subspace::span(n, &(1..n).map(|i| unit_vec(n, i)).collect::<Vec<_>>())
    }

    pub fn element_of(&self, p: &Polynomial) -> Result<AlgebraElement> {
        let nf = normal_form(p, &self.sb)?;
        let mut v = zero_vec(self.dim());
        for (m, c) in nf.terms() {
            let i = self
                .qbasis
                .index_of(m)
                .expect("normal form is supported on standard monomials");
            v[i] = c.clone();
        }
        Ok(AlgebraElement::new(v))
    }

    /// Polynomial representative supported on the basis monomials.
    pub fn to_polynomial(&self, a: &AlgebraElement) -> Polynomial {
        Polynomial::from_terms(
            self.vars(),
            self.basis_monomials()
                .iter()
                .cloned()
                .zip(a.coords.iter().cloned()),
        )
    }

    /// Matrix of multiplication by `a`.
    pub fn mult_matrix(&self, a: &AlgebraElement) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (c, mb) in a.coords.iter().zip(&self.basis_mult) {
            if c.is_zero() {
                continue;
            }
            for i in 0..n {
                for j in 0..n {
                    let x = &mb[(i, j)];
                    if !x.is_zero() {
                        m[(i, j)] += c * x;
                    }
                }
            }
        }
        m
    }

    pub fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(self.mult_matrix(a).mul_vec(&b.coords))
    }

    pub fn pow(&self, a: &AlgebraElement, k: usize) -> AlgebraElement {
        AlgebraElement::new(self.mult_matrix(a).pow(k).column(0))
    }

    /// Product of two basis monomials, in coordinates.
    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        self.basis_mult[i].column(j)
    }

    /// Minimal `l` with `a^(l+1) = 0`.
    pub fn nilpotency_index(&self, a: &AlgebraElement) -> Result<usize> {
        if !a.coords[0].is_zero() {
            return Err(Error::NotNilpotent);
        }
        let m = self.mult_matrix(a);
        let mut p = m.clone();
        let mut l = 0;
        while !p.is_zero() {
            p = p.mul(&m);
            l += 1;
        }
        Ok(l)
    }

    /// `Ann(a^j)`, the kernel of multiplication by `a^j`.
    pub fn ann_power(&self, a: &AlgebraElement, j: usize) -> Subspace {
        self.mult_matrix(a).pow(j).kernel_space()
    }

    pub fn ann(&self, a: &AlgebraElement) -> Subspace {
        self.ann_power(a, 1)
    }

    /// The principal ideal `(a^j)`, the image of multiplication by `a^j`.
    pub fn ideal_of(&self, a: &AlgebraElement, j: usize) -> Subspace {
        self.mult_matrix(a).pow(j).column_space()
    }

    /// Default functional: dual to the highest-degree monomial carrying a
    /// nonzero coefficient of the Jacobian class, normalized to `L(J) = 1`.
    pub fn default_functional(&self) -> LinearFunctional {
        let mons = self.basis_monomials();
        let j = &self.jacobian.coords;
        let mut best: Option<usize> = None;
        for (i, c) in j.iter().enumerate() {
            if !c.is_zero() && best.is_none_or(|b| mons[i].degree() > mons[b].degree()) {
                best = Some(i);
            }
        }
        let i = best.expect("Jacobian class is nonzero");
        let mut covector = zero_vec(self.dim());
        covector[i] = j[i].recip();
        LinearFunctional { covector }
    }

    /// Adjusts `seed` along the Jacobian direction so that `L(J) = 1`.
    pub fn functional_from_seed(&self, seed: &[Rational]) -> Result<LinearFunctional> {
        if seed.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: seed.len(),
            });
        }
        let j = &self.jacobian.coords;
        let shift = (Rational::one() - dot(seed, j)) / dot(j, j);
        let covector = seed.iter().zip(j).map(|(s, jj)| s + &shift * jj).collect();
        Ok(LinearFunctional { covector })
    }

    pub fn make_functional(&self, seed: Option<&[Rational]>) -> Result<LinearFunctional> {
        match seed {
            None => Ok(self.default_functional()),
            Some(s) => self.functional_from_seed(s),
        }
    }

    /// Functional from a seed with small random integer entries.
    pub fn random_functional<R: Rng>(&self, rng: &mut R) -> LinearFunctional {
        let seed: Vector = (0..self.dim())
            .map(|_| Rational::from_integer(rng.gen_range(-9i64..=9).into()))
            .collect();
        self.functional_from_seed(&seed)
            .expect("seed length matches")
    }

    /// `G[p][q] = L(b_p * b_q)`, so that `L(w a b) = (M_w a)^T G b`.
    pub fn pairing_matrix(&self, l: &LinearFunctional) -> Matrix {
        let n = self.dim();
        let mut g = Matrix::zeros(n, n);
        for p in 0..n {
            for q in p..n {
                let v = l.apply_vec(&self.basis_mult[p].column(q));
                g[(q, p)] = v.clone();
                g[(p, q)] = v;
            }
        }
        g
    }

    /// Whether `a` has a positive pairing with the Jacobian class under `l`.
    pub fn is_admissible(&self, l: &LinearFunctional) -> bool {
        l.apply(&self.jacobian).is_positive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{int, make_vars, parse_poly, parse_poly_list, rat};

    fn algebra(gens: &str, names: &[&str]) -> ZeroDimAlgebra {
        let v = make_vars(names);
        build_algebra(&parse_poly_list(gens, &v).unwrap()).unwrap()
    }

    fn milnor(f: &str, names: &[&str]) -> (ZeroDimAlgebra, AlgebraElement) {
        let v = make_vars(names);
        let f = parse_poly(f, &v).unwrap();
        let a = build_algebra(&f.gradient()).unwrap();
        let e = a.element_of(&f).unwrap();
        (a, e)
    }

    const EX42: &str = "(x^2+y^3)*(x^3+y^2)+z^2";

    #[test]
    fn regular_point() {
        let a = algebra("x, y", &["x", "y"]);
        assert_eq!(a.dim(), 1);
        assert_eq!(a.jacobian().coords(), &[int(1)]);
        assert_eq!(a.socle(), &Subspace::full(1));
    }

    #[test]
    fn squaring_map() {
        let a = algebra("x^2-y^2, 2*x*y", &["x", "y"]);
        assert_eq!(a.dim(), 4);
        let v = a.vars().clone();
        let x2 = a.element_of(&parse_poly("x^2", &v).unwrap()).unwrap();
        assert_eq!(a.jacobian(), &x2.scale(&int(8)));
    }

    #[test]
    fn cubic_presentation() {
        let a = algebra("x^3", &["x"]);
        let x = a.basis_element(1);
        let m = a.mult_matrix(&x);
        assert_eq!(m, Matrix::from_ints(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]));
        assert_eq!(a.nilpotency_index(&x).unwrap(), 2);
        assert_eq!(a.ideal_of(&x, 2), Subspace::span(3, &[unit_vec(3, 2)]));
        assert_eq!(
            a.ann_power(&x, 2),
            Subspace::span(3, &[unit_vec(3, 1), unit_vec(3, 2)])
        );
        let l = a.default_functional();
        assert_eq!(l.covector(), &[int(0), int(0), rat(1, 3)]);
        assert!(a.nilpotency_index(&a.one()).is_err());
        assert_eq!(a.nilpotency_index(&AlgebraElement::zero(3)).unwrap(), 0);
        assert_eq!(a.mult_matrix(&a.one()), Matrix::identity(3));
    }

    #[test]
    fn example_germ_structure() {
        let (a, f) = milnor(EX42, &["x", "y", "z"]);
        assert_eq!(a.dim(), 11);
        assert!(a.socle().contains(f.coords()) && !f.is_zero());
        assert_eq!(a.ann(&f), a.maximal_ideal());
        let m = a.mult_matrix(&f);
        assert_eq!(m.rank(), 1);
        assert!(m.mul(&m).is_zero());
        assert_eq!(a.nilpotency_index(&f).unwrap(), 1);
    }

    #[test]
    fn example_germ_hessian() {
        let v = make_vars(&["x", "y", "z"]);
        let f = parse_poly(EX42, &v).unwrap();
        let a = build_algebra(&f.gradient()).unwrap();
        // the Jacobian of the gradient map is the Hessian determinant; the
        // z^2 summand contributes a factor f_zz = 2 on top of the plane
        // curve Hessian, which is -220 [f]
        let fe = a.element_of(&f).unwrap();
        assert_eq!(a.jacobian(), &fe.scale(&int(-440)));
        let plane = jacobian_det(
            &[f.partial("x").unwrap(), f.partial("y").unwrap()],
            &["x", "y"],
        )
        .unwrap();
        assert_eq!(a.element_of(&plane).unwrap(), fe.scale(&int(-220)));
    }

    #[test]
    fn seeded_functionals_are_normalized() {
        let (a, _) = milnor(EX42, &["x", "y", "z"]);
        let seed: Vector = (0..a.dim()).map(|i| int(i as i64 - 3)).collect();
        let l = a.make_functional(Some(&seed)).unwrap();
        assert_eq!(l.apply(a.jacobian()), int(1));
        assert!(a.make_functional(Some(&seed[1..])).is_err());
    }

    #[test]
    fn multiplication_is_associative() {
        let a = algebra("x^2-y^2, 2*x*y", &["x", "y"]);
        let n = a.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (bi, bj, bk) = (a.basis_element(i), a.basis_element(j), a.basis_element(k));
                    assert_eq!(a.mul(&a.mul(&bi, &bj), &bk), a.mul(&bi, &a.mul(&bj, &bk)));
                }
            }
        }
    }

    #[test]
    fn not_a_regular_sequence() {
        let v = make_vars(&["x", "y"]);
        let g = parse_poly_list("x^2, x*y", &v).unwrap();
        assert!(matches!(
            build_algebra(&g),
            Err(Error::InfiniteCodimension(_))
        ));
        let g = parse_poly_list("x", &v).unwrap();
        assert!(matches!(
            build_algebra(&g),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
