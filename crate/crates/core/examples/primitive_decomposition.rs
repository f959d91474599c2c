//! Jordan blocks of multiplication by a nilpotent element, and the pairing
//! signatures on the primitive subspaces that match the flag signatures.

use flagsig::algebra::build_algebra;
use flagsig::flags::{flag_signatures, primitive_decomposition, primitive_pairing_signatures};
use flagsig::polyring::{make_vars, parse_poly, parse_poly_list};

fn main() -> flagsig::Result<()> {
    let vars = make_vars(&["x", "y"]);
    for (gens, elem) in [("x^4, y^3", "x^2+y"), ("x^3, y^2", "x+y"), ("x^5", "x^2")] {
        let v = if gens.contains('y') {
            vars.clone()
        } else {
            make_vars(&["x"])
        };
        let a = build_algebra(&parse_poly_list(gens, &v)?)?;
        let f = a.element_of(&parse_poly(elem, &v)?)?;
        let pd = primitive_decomposition(&a, &f)?;
        let l = a.default_functional();
        let by_blocks = primitive_pairing_signatures(&a, &l, &f, &pd);
        let by_flag = flag_signatures(&a, &l, &f)?;
        let filled: usize = pd
            .block_counts
            .iter()
            .enumerate()
            .map(|(j, n)| (j + 1) * n)
            .sum();
        println!("{elem} in ({gens}): dim {}", a.dim());
        println!(
            "  blocks n_j         {:?} (sum j n_j = {filled})",
            pd.block_counts
        );
        println!("  primitive pairings {by_blocks:?}");
        println!("  flag sigma_1..     {:?}", &by_flag.sigma[1..]);
    }
    Ok(())
}
