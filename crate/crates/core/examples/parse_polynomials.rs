//! Parsing, arithmetic and derivatives of polynomials with rational
//! coefficients.

use flagsig::polyring::{jacobian_det, make_vars, parse_poly, parse_poly_list, rat};

fn main() -> flagsig::Result<()> {
    let vars = make_vars(&["x", "y"]);
    let f = parse_poly("(x^2+y^3)*(x^3+y^2)", &vars)?;
    println!("f         = {f}");
    println!("order     = {:?}, degree = {:?}", f.order(), f.degree());

    let grad = f.gradient();
    println!("df/dx     = {}", grad[0]);
    println!("df/dy     = {}", grad[1]);
    println!("hessian   = {}", jacobian_det(&grad, &["x", "y"])?);

    let g = parse_poly("3/2*x - y", &vars)?;
    println!("f*g       = {}", &f * &g);
    println!("f(1/2, 1) = {}", f.eval(&[rat(1, 2), rat(1, 1)]));

    let map = parse_poly_list("x^2-y^2, 2*x*y", &vars)?;
    println!("map       = [{}, {}]", map[0], map[1]);

    // errors carry a position
    if let Err(e) = parse_poly("x^2 + z", &vars) {
        println!("error     : {e}");
    }
    Ok(())
}
