//! GSV indices of vector fields tangent to a hypersurface: the contact field
//! in odd dimension, and a tangent field on a plane curve.

use flagsig::index::{
    contact_field, gsv_constants, gsv_index_even, gsv_index_odd, ph_index, TangencyData,
    VectorField,
};
use flagsig::polyring::{make_vars, parse_poly, parse_poly_list, rat};

fn main() -> flagsig::Result<()> {
    let v3 = make_vars(&["x", "y", "z"]);
    for f in ["x^2+y^2+z^2", "x^3+y^3+z^3", "(x^2+y^3)*(x^3+y^2)+z^2"] {
        let f = parse_poly(f, &v3)?;
        let x = contact_field(&f, &rat(0, 1))?;
        let td = TangencyData::new(f.clone(), x)?;
        let r = gsv_index_odd(&td)?;
        println!("f = {f}");
        println!("  cofactor h   {}", td.h);
        println!("  K+, K-       {:?}", gsv_constants(&f)?);
        println!("  sigma(B,h,0) {} on dim B = {}", r.sigma_b_h_0, r.dim_b);
        println!("  Ind+ {}, Ind- {}", r.ind_plus, r.ind_minus);
    }

    // even dimension: the Euler field on the pair of lines x^2 - y^2
    let v2 = make_vars(&["x", "y"]);
    let f = parse_poly("x^2-y^2", &v2)?;
    let euler = VectorField::new(parse_poly_list("x, y", &v2)?)?;
    println!(
        "Euler field on {f}: PH index {}, GSV {:?}",
        ph_index(&euler)?,
        gsv_index_even(&TangencyData::new(f.clone(), euler)?)?
    );
    Ok(())
}
