//! The univariate relative family: the form `L_t(f1 a b)` on the fibres of
//! `f = c x^nu`. Its Jantzen levels match the colon ideals `(f^m : f1)`, and
//! its tau_m match the flag signatures of `[f]` in `Q[x]/(f1)`.

use flagsig::algebra::build_algebra;
use flagsig::flags::flag_signatures;
use flagsig::jantzen::{jantzen_filtration, univariate_colon_flag, univariate_relative_family};
use flagsig::polyring::{make_vars, parse_poly};

fn main() -> flagsig::Result<()> {
    let v = make_vars(&["x"]);
    println!(
        "{:<8} {:<12} {:<14} {:<14} {:<12} {:<12}",
        "f", "f1", "levels", "colon dims", "tau", "sigma"
    );
    for (f, f1) in [
        ("x^2", "x^3"),
        ("x^3", "x^2"),
        ("-x^2", "x^5+x^4"),
        ("2*x^4", "x^3-x^7"),
        ("x^6", "x^4-x^5"),
    ] {
        let (fp, f1p) = (parse_poly(f, &v)?, parse_poly(f1, &v)?);
        let jr = jantzen_filtration(&univariate_relative_family(&fp, &f1p)?)?;
        let colon = univariate_colon_flag(&fp, &f1p)?;
        let a = build_algebra(std::slice::from_ref(&f1p))?;
        let s = flag_signatures(&a, &a.default_functional(), &a.element_of(&fp)?)?;
        println!(
            "{f:<8} {f1:<12} {:<14} {:<14} {:<12} {:<12}",
            format!("{:?}", jr.level_dims()),
            format!("{colon:?}"),
            format!("{:?}", jr.taus),
            format!("{:?}", s.sigma),
        );
    }
    Ok(())
}
