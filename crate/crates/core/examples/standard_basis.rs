//! Standard bases in the local ring at the origin: the lead ideal, the
//! monomial basis of the quotient and normal forms.

use flagsig::localbasis::{normal_form, quotient_basis, standard_basis, LocalOrdering};
use flagsig::polyring::{make_vars, parse_poly, parse_poly_list};

fn main() -> flagsig::Result<()> {
    let vars = make_vars(&["x", "y"]);
    let ord = LocalOrdering::new(&vars);
    // a unit times y^2 is still y^2 locally: (x, y^2 + y^3) has colength 2
    for gens in ["x^2-y^2, 2*x*y", "x, y^2+y^3", "x^3-3*x*y^2, 3*x^2*y-y^3"] {
        let gens = parse_poly_list(gens, &vars)?;
        let sb = standard_basis(&gens, &ord)?;
        let qb = quotient_basis(&sb)?;
        let monos: Vec<String> = qb
            .monomial_polys()
            .iter()
            .map(ToString::to_string)
            .collect();
        println!("ideal ({}, {})", gens[0], gens[1]);
        println!("  ordering     {}", ord.name());
        println!("  degree bound {:?}", sb.degree_bound());
        println!(
            "  basis        [{}] (dimension {})",
            monos.join(", "),
            qb.dimension()
        );
        let p = parse_poly("4*x^2+4*y^2+x^3", &vars)?;
        println!("  NF({p}) = {}", normal_form(&p, &sb)?);
    }

    let sb = standard_basis(&parse_poly_list("x*y, x*y", &vars)?, &ord)?;
    match quotient_basis(&sb) {
        Ok(_) => println!("unexpectedly finite"),
        Err(e) => println!("(x*y): {e}"),
    }
    Ok(())
}
