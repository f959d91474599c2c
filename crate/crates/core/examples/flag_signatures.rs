//! The kernel-image flag of `[f]` in the Milnor algebra of a germ, the
//! signatures of its order-m forms and the constants K+ and K-.

use flagsig::algebra::build_algebra;
use flagsig::bilinear::el_signature;
use flagsig::flags::{build_flag, flag_orthogonality_holds, flag_signatures_checked, order_m_form};
use flagsig::polyring::{make_vars, parse_poly};

fn main() -> flagsig::Result<()> {
    let vars = make_vars(&["x", "y", "z"]);
    let f = parse_poly("(x^2+y^3)*(x^3+y^2)+z^2", &vars)?;
    let a = build_algebra(&f.gradient())?;
    let fe = a.element_of(&f)?;
    let l = a.default_functional();

    let flag = build_flag(&a, &fe)?;
    println!("dim A        {}", a.dim());
    println!("l            {}", flag.ell);
    println!("dim K_m      {:?}", flag.dims());
    println!("[f] spans the socle: {}", a.ideal_of(&fe, 1) == *a.socle());
    println!(
        "Ann(f) is the maximal ideal: {}",
        a.ann(&fe) == a.maximal_ideal()
    );

    // 20 random functionals must give the same signatures
    let s = flag_signatures_checked(&a, &l, &fe, 20, 7)?;
    for (m, sigma) in s.sigma.iter().enumerate() {
        let form = order_m_form(&a, &l, &fe, m)?;
        println!("sigma_{m}      {sigma:>3}   on {}", form.carrier());
    }
    println!("K+ = {}, K- = {}", s.k_plus(), s.k_minus());
    println!(
        "odd sum {} = EL signature {}",
        s.odd_sum(),
        el_signature(&a)
    );
    println!(
        "orthogonality K_m^perp = (f) + Ann(f^(m-1)): {}",
        flag_orthogonality_holds(&a, &l, &fe)?
    );
    Ok(())
}
