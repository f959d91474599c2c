//! Jantzen filtration of a symmetric matrix family `G(t)`: the signatures
//! tau_i on the valuation levels, and the signatures of `G(t)` just above
//! and below `t = 0`.

use flagsig::jantzen::{evaluate_signature, jantzen_filtration, MatrixFamily};
use flagsig::polyring::rat;

fn main() -> flagsig::Result<()> {
    let families = [
        r#"{"size": 2, "entries": [[["0"], ["0","1"]], [["0","1"], ["1"]]]}"#,
        r#"{"size": 3, "entries": [[["1"], [], []], [[], ["0","0","-1"], []], [[], [], ["0","2"]]]}"#,
        r#"{"size": 2, "entries": [[["0","1"], ["1"]], [["1"], ["0"]]]}"#,
    ];
    for text in families {
        let g = MatrixFamily::from_json(text)?;
        let jr = jantzen_filtration(&g)?;
        println!("G(t) =\n{g}");
        println!("  det        {}", g.det());
        println!("  exponents  {:?}", jr.exponents);
        println!("  level dims {:?}", jr.level_dims());
        println!("  tau        {:?}", jr.taus);
        println!("  tau+ {} tau- {}", jr.tau_plus, jr.tau_minus);
        let t = rat(1, 64);
        println!(
            "  sig G(1/64) {}, sig G(-1/64) {}",
            evaluate_signature(&g, &t)?,
            evaluate_signature(&g, &-t)?
        );
    }
    Ok(())
}
