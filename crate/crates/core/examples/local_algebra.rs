//! The finite-dimensional algebra of a map germ: multiplication, the
//! Jacobian class, the socle and admissible functionals.

use flagsig::algebra::build_algebra;
use flagsig::polyring::{make_vars, parse_poly, parse_poly_list, rat};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> flagsig::Result<()> {
    let vars = make_vars(&["x", "y"]);
    let a = build_algebra(&parse_poly_list("x^3-3*x*y^2, 3*x^2*y-y^3", &vars)?)?;
    let basis: Vec<String> = a
        .qbasis()
        .monomial_polys()
        .iter()
        .map(ToString::to_string)
        .collect();
    println!("dim      {}", a.dim());
    println!("basis    [{}]", basis.join(", "));
    println!("jacobian {}", a.to_polynomial(a.jacobian()));
    println!("socle    dimension {}", a.socle().dim());

    let x = a.element_of(&parse_poly("x", &vars)?)?;
    println!("nilpotency index of x: {}", a.nilpotency_index(&x)?);
    let x2y = a.mul(&a.pow(&x, 2), &a.element_of(&parse_poly("y", &vars)?)?);
    println!("x^2 y    = {}", a.to_polynomial(&x2y));

    let l = a.default_functional();
    println!("L(J)     = {}", l.apply(a.jacobian()));
    let seeded = a.make_functional(Some(&vec![rat(1, 1); a.dim()]))?;
    println!("seeded L admissible: {}", a.is_admissible(&seeded));
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let random = a.random_functional(&mut rng);
    println!("random L admissible: {}", a.is_admissible(&random));
    Ok(())
}
