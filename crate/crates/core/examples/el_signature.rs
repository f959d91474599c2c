//! The signature of `L(ab)` on the algebra of a map germ is its local
//! topological degree.

use flagsig::algebra::{build_algebra, Subspace};
use flagsig::bilinear::{el_signature, gram_form};
use flagsig::polyring::{make_vars, parse_poly_list};

fn main() -> flagsig::Result<()> {
    let germs: &[(&[&str], &str)] = &[
        (&["x"], "x^3"),
        (&["x"], "x^4"),
        (&["x", "y"], "x^2-y^2, 2*x*y"),
        (&["x", "y"], "x, -y"),
        (&["x", "y"], "x^3-3*x*y^2, 3*x^2*y-y^3"),
        (&["x", "y", "z"], "x^2-y^2, 2*x*y, z^3"),
    ];
    println!(
        "{:<32} {:>4} {:>4} {:>4} {:>6}",
        "map", "dim", "n+", "n-", "degree"
    );
    for (names, map) in germs {
        let a = build_algebra(&parse_poly_list(map, &make_vars(names))?)?;
        let form = gram_form(
            &a,
            &a.default_functional(),
            &a.one(),
            &Subspace::full(a.dim()),
        );
        let s = form.signature();
        assert_eq!(s.signature, el_signature(&a));
        println!(
            "{map:<32} {:>4} {:>4} {:>4} {:>6}",
            a.dim(),
            s.n_plus,
            s.n_minus,
            s.signature
        );
    }
    Ok(())
}
