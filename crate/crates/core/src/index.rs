//! Indices of vector fields at isolated zeros, on the ambient space and on
//! hypersurfaces `f = 0` that the field is tangent to.

use serde::Serialize;

use crate::algebra::{build_algebra, ZeroDimAlgebra};
use crate::bilinear::{el_signature, order0_signature};
use crate::error::{Error, Result};
use crate::flags::{flag_signatures, FlagSignatures};
use crate::polyring::{Polynomial, Rational, Vars};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorField {
    components: Vec<Polynomial>,
}

impl VectorField {
    pub fn new(components: Vec<Polynomial>) -> Result<Self> {
        let first = components
            .first()
            .ok_or_else(|| Error::Malformed("empty vector field".into()))?;
        let vars = first.vars().clone();
        if components.iter().any(|c| c.vars() != &vars) {
            return Err(Error::RingMismatch);
        }
        if components.len() != vars.len() {
            return Err(Error::DimensionMismatch {
                expected: vars.len(),
                found: components.len(),
            });
        }
        Ok(VectorField { components })
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn vars(&self) -> &Vars {
        self.components[0].vars()
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    /// `df(X) = sum_i (df/dx_i) X^i`.
    pub fn apply_to(&self, f: &Polynomial) -> Polynomial {
        f.gradient()
            .iter()
            .zip(&self.components)
            .fold(Polynomial::zero(self.vars()), |acc, (g, x)| &acc + &(g * x))
    }
}

/// A function, a field tangent to its zero set, and the cofactor `h` with
/// `df(X) = h f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangencyData {
    pub f: Polynomial,
    pub field: VectorField,
    pub h: Polynomial,
}

impl TangencyData {
    pub fn new(f: Polynomial, field: VectorField) -> Result<Self> {
        let h = cofactor(&f, &field)?;
        Ok(TangencyData { f, field, h })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GsvReport {
    /// Dimension of the Milnor algebra of `f` (0 at a smooth point).
    pub dim_a: usize,
    pub dim_b: usize,
    pub sigma_b_h_0: i64,
    pub k_plus: i64,
    pub k_minus: i64,
    pub ind_plus: i64,
    pub ind_minus: i64,
    /// Flag signatures of `[f]` in the Milnor algebra; `None` at a smooth
    /// point, where the Milnor algebra is zero.
    pub sigma_flag: Option<FlagSignatures>,
}

/// Poincaré–Hopf index of an isolated zero: the EL signature of the algebra
/// of the components.
pub fn ph_index(x: &VectorField) -> Result<i64> {
    Ok(el_signature(&build_algebra(x.components())?))
}

/// The `h` with `df(X) = h f`, by exact division in the polynomial ring.
pub fn cofactor(f: &Polynomial, x: &VectorField) -> Result<Polynomial> {
    if f.vars() != x.vars() {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("cofactor"));
    }
    let (q, r) = x.apply_to(f).div_rem(f)?;
    if !r.is_zero() {
        return Err(Error::NotTangent(r.to_string()));
    }
    Ok(q)
}

/// `X_t = (f - t) d/dx_1 + sum_i (f_(2i+1) d/dx_(2i) - f_(2i) d/dx_(2i+1))`
/// in the variables `x_1, ..., x_(2N+1)`. Its cofactor on `f - t` is
/// `df/dx_1`.
pub fn contact_field(f: &Polynomial, t: &Rational) -> Result<VectorField> {
    let n = f.nvars();
    if n.is_multiple_of(2) {
        return Err(Error::EvenAmbient(n));
    }
    let mut comps = vec![f - &Polynomial::constant(f.vars(), t.clone())];
    for i in 1..=n / 2 {
        comps.push(f.partial_index(2 * i));
        comps.push(-f.partial_index(2 * i - 1));
    }
    VectorField::new(comps)
}

/// Milnor algebra of `f` with the class of `f` in it; `None` at a smooth
/// point.
fn milnor(f: &Polynomial) -> Result<Option<(ZeroDimAlgebra, crate::algebra::AlgebraElement)>> {
    match build_algebra(&f.gradient()) {
        Ok(a) => {
            let fe = a.element_of(f)?;
            Ok(Some((a, fe)))
        }
        Err(Error::UnitIdeal) => Ok(None),
        Err(e) => Err(e),
    }
}

fn flag_of(f: &Polynomial) -> Result<Option<FlagSignatures>> {
    match milnor(f)? {
        Some((a, fe)) => Ok(Some(flag_signatures(&a, &a.default_functional(), &fe)?)),
        None => Ok(None),
    }
}

/// `K+ = sum_(m>=1) sigma_m` and `K- = sum_(m>=1) (-1)^m sigma_m` for the
/// flag of `[f]` in its Milnor algebra; both vanish at a smooth point.
pub fn gsv_constants(f: &Polynomial) -> Result<(i64, i64)> {
    if f.nvars().is_multiple_of(2) {
        return Err(Error::EvenAmbient(f.nvars()));
    }
    Ok(flag_of(f)?.map_or((0, 0), |s| (s.k_plus(), s.k_minus())))
}

/// GSV indices on the two smoothings `f = ±t` in odd dimension:
/// `Ind± = sigma(B, h, 0) + K±`.
pub fn gsv_index_odd(td: &TangencyData) -> Result<GsvReport> {
    let n = td.f.nvars();
    if n.is_multiple_of(2) {
        return Err(Error::EvenAmbient(n));
    }
    let b = build_algebra(td.field.components())?;
    let sigma_b = order0_signature(&b, &b.element_of(&td.h)?)?;
    let flag = flag_of(&td.f)?;
    let (k_plus, k_minus) = flag.as_ref().map_or((0, 0), |s| (s.k_plus(), s.k_minus()));
    Ok(GsvReport {
        dim_a: flag.as_ref().map_or(0, |s| s.quotient_dims.iter().sum()),
        dim_b: b.dim(),
        sigma_b_h_0: sigma_b,
        k_plus,
        k_minus,
        ind_plus: sigma_b + k_plus,
        ind_minus: sigma_b + k_minus,
        sigma_flag: flag,
    })
}

/// GSV index in even dimension, the same on both smoothings:
/// `sigma(B, h, 0) - sigma(A, h, 0)` with `A` the Milnor algebra of `f`.
pub fn gsv_index_even(td: &TangencyData) -> Result<(i64, i64)> {
    let n = td.f.nvars();
    if n % 2 == 1 {
        return Err(Error::OddAmbient(n));
    }
    let b = build_algebra(td.field.components())?;
    let sigma_b = order0_signature(&b, &b.element_of(&td.h)?)?;
    let sigma_a = match milnor(&td.f)? {
        Some((a, _)) => order0_signature(&a, &a.element_of(&td.h)?)?,
        None => 0,
    };
    let ind = sigma_b - sigma_a;
    Ok((ind, ind))
}

/// Whether the EL signature of the Milnor algebra equals the sum of the odd
/// flag signatures.
pub fn odd_sum_matches_el(f: &Polynomial) -> Result<bool> {
    let (a, fe) = milnor(f)?.ok_or(Error::UnitIdeal)?;
    let s = flag_signatures(&a, &a.default_functional(), &fe)?;
    Ok(el_signature(&a) == s.odd_sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{int, make_vars, parse_poly, parse_poly_list};

    fn field(comps: &str, names: &[&str]) -> VectorField {
        VectorField::new(parse_poly_list(comps, &make_vars(names)).unwrap()).unwrap()
    }

    fn poly(s: &str, names: &[&str]) -> Polynomial {
        parse_poly(s, &make_vars(names)).unwrap()
    }

    const XYZ: [&str; 3] = ["x", "y", "z"];

    #[test]
    fn ph_indices() {
        assert_eq!(ph_index(&field("x, y", &["x", "y"])).unwrap(), 1);
        assert_eq!(ph_index(&field("x^2-y^2, 2*x*y", &["x", "y"])).unwrap(), 2);
        assert_eq!(ph_index(&field("-y, x", &["x", "y"])).unwrap(), 1);
        assert_eq!(ph_index(&field("x, -y", &["x", "y"])).unwrap(), -1);
    }

    #[test]
    fn cofactors() {
        let f = poly("x^2+y^2", &["x", "y"]);
        let ham = field("2*y, -2*x", &["x", "y"]);
        assert!(cofactor(&f, &ham).unwrap().is_zero());
        let f = poly("x", &["x", "y"]);
        assert_eq!(
            cofactor(&f, &field("x, y", &["x", "y"])).unwrap(),
            poly("1", &["x", "y"])
        );
        assert!(matches!(
            cofactor(&f, &field("y, x", &["x", "y"])),
            Err(Error::NotTangent(_))
        ));
    }

    #[test]
    fn contact_fields() {
        let f = poly("z^2+x*y", &XYZ);
        let x0 = contact_field(&f, &int(0)).unwrap();
        let expect = field("z^2+x*y, 2*z, -x", &XYZ);
        assert_eq!(x0, expect);
        let f = poly("(x^2+y^3)*(x^3+y^2)+z^2", &XYZ);
        let t = int(3);
        let xt = contact_field(&f, &t).unwrap();
        let shifted = &f - &Polynomial::constant(f.vars(), t);
        assert_eq!(cofactor(&shifted, &xt).unwrap(), f.partial("x").unwrap());
        assert!(matches!(
            contact_field(&poly("x*y", &["x", "y"]), &int(0)),
            Err(Error::EvenAmbient(2))
        ));
    }

    #[test]
    fn constants() {
        assert_eq!(gsv_constants(&poly("x^2+y^2+z^2", &XYZ)).unwrap(), (1, -1));
        assert_eq!(gsv_constants(&poly("x^3+y^3+z^3", &XYZ)).unwrap(), (0, 0));
        assert_eq!(gsv_constants(&poly("x+y^2", &XYZ)).unwrap(), (0, 0));
        assert_eq!(
            gsv_constants(&poly("(x^2+y^3)*(x^3+y^2)+z^2", &XYZ)).unwrap(),
            (-2, 0)
        );
    }

    #[test]
    fn one_variable_contact_field() {
        // X_0 = x^2 d/dx on f = x^2: both points of f = t > 0 count, none of f = -t
        let f = poly("x^2", &["x"]);
        let td = TangencyData::new(f.clone(), contact_field(&f, &int(0)).unwrap()).unwrap();
        let r = gsv_index_odd(&td).unwrap();
        assert_eq!((r.ind_plus, r.ind_minus), (2, 0));
    }

    #[test]
    fn smooth_surrogates() {
        let f = poly("x", &XYZ);
        let td = TangencyData::new(f.clone(), field("x, y, z", &XYZ)).unwrap();
        assert_eq!(gsv_index_odd(&td).unwrap().ind_plus, 1);
        let td = TangencyData::new(f, field("x, -y, z", &XYZ)).unwrap();
        let r = gsv_index_odd(&td).unwrap();
        assert_eq!((r.ind_plus, r.ind_minus), (-1, -1));
    }

    #[test]
    fn even_dimension() {
        let f = poly("x^2+y^2", &["x", "y"]);
        let td = TangencyData::new(f, field("2*y, -2*x", &["x", "y"])).unwrap();
        assert_eq!(gsv_index_even(&td).unwrap(), (0, 0));
        // the Euler field on a homogeneous curve: one per real line
        let f = poly("x^2-y^2", &["x", "y"]);
        let td = TangencyData::new(f, field("x, y", &["x", "y"])).unwrap();
        assert_eq!(gsv_index_even(&td).unwrap(), (2, 2));
    }

    #[test]
    fn odd_sum_matches_el_on_germs() {
        for f in [
            "(x^2+y^3)*(x^3+y^2)+z^2",
            "x^3+y^3+z^3",
            "x^2+y^2+z^2",
            "x^4+y^4+z^2+x^2*y^2*z",
        ] {
            assert!(odd_sum_matches_el(&poly(f, &XYZ)).unwrap(), "{f}");
        }
        assert!(odd_sum_matches_el(&poly("x^3", &["x"])).unwrap());
    }
}
