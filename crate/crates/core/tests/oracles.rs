mod common;

use common::{
    degree_1d, degree_2d, isolate, parse_bpoly, parse_upoly, q, resultant_y, signed_roots, Upoly,
};
use flagsig::jantzen::{evaluate_signature, jantzen_filtration, univariate_relative_family};
use flagsig::polyring::{make_vars, parse_poly, rat};

#[test]
fn sturm_isolates_known_roots() {
    // (x - 1/3)(x + 1/2)(x - 2)
    let p = Upoly::new(vec![q(1, 3), q(-1, 2), q(-11, 6), q(1, 1)]);
    let ivs = isolate(&p, &q(-10, 1), &q(10, 1), 30);
    assert_eq!(ivs.len(), 3);
    let roots = [q(-1, 2), q(1, 3), q(2, 1)];
    for r in &roots {
        assert!(
            ivs.iter().any(|(a, b)| a <= r && r <= b),
            "{r} not isolated"
        );
    }
}

#[test]
fn resultant_of_circle_and_line() {
    // Res_y(x^2 + y^2 - 1, y - x) = 2x^2 - 1
    let r = resultant_y(&parse_bpoly("x^2+y^2-1"), &parse_bpoly("y-x"));
    assert_eq!(r, Upoly::new(vec![q(-1, 1), q(0, 1), q(2, 1)]));
}

#[test]
fn one_dimensional_degrees() {
    let d = q(1, 4);
    assert_eq!(degree_1d(&parse_upoly("x^3"), &d, &q(1, 1000)), 1);
    assert_eq!(degree_1d(&parse_upoly("x^2"), &d, &q(1, 1000)), 0);
    assert_eq!(degree_1d(&parse_upoly("x^2"), &d, &q(-1, 1000)), 0);
    assert_eq!(degree_1d(&parse_upoly("-x^5"), &d, &q(1, 100_000)), -1);
}

#[test]
fn plane_degrees() {
    let d = q(1, 4);
    let v = (q(3, 1 << 20), q(-5, 1 << 21));
    assert_eq!(
        degree_2d(
            &parse_bpoly("x^2-y^2"),
            &parse_bpoly("2*x*y"),
            &d,
            &v.0,
            &v.1
        ),
        Some(2)
    );
    assert_eq!(
        degree_2d(&parse_bpoly("x"), &parse_bpoly("-y"), &d, &v.0, &v.1),
        Some(-1)
    );
    assert_eq!(
        degree_2d(
            &parse_bpoly("x^2+y^2"),
            &parse_bpoly("x*y"),
            &d,
            &q(1, 1 << 20),
            &q(1, 1 << 22)
        ),
        Some(0)
    );
}

fn family(f: &str, f1: &str) -> (flagsig::jantzen::MatrixFamily, Upoly, Upoly) {
    let v = make_vars(&["x"]);
    let fam = univariate_relative_family(&parse_poly(f, &v).unwrap(), &parse_poly(f1, &v).unwrap())
        .unwrap();
    (fam, parse_upoly(f), parse_upoly(f1))
}

// tau± is the signed count of the zeros of the restricted field on the
// nearby fibres f = ±t
#[test]
fn tau_counts_signed_fibre_points() {
    let pairs = [
        ("x^2", "x^3"),
        ("x^3", "x^2"),
        ("-x^2", "x^5+x^4"),
        ("2*x^4", "x^3-x^7"),
        ("x^3", "-x^4"),
        ("x^2", "x"),
        ("x^6", "x^4-x^5"),
        ("-3*x^5", "x^2+x^3"),
    ];
    let delta = q(1, 1);
    for (f, f1) in pairs {
        let (fam, uf, uf1) = family(f, f1);
        let jr = jantzen_filtration(&fam).unwrap();
        for k in [6, 9] {
            let t = q(1, 1 << k);
            let plus = signed_roots(&uf, &uf1, &t, &delta);
            let minus = signed_roots(&uf, &uf1, &-t.clone(), &delta);
            assert_eq!(
                (jr.tau_plus, jr.tau_minus),
                (plus, minus),
                "({f}, {f1}) at 2^-{k}"
            );
        }
    }
}

// the fibre point crosses the zero of f1 at -1/2 once |t| > 2^-5, so the
// signature only settles from there on
#[test]
fn stabilization_waits_for_the_fibre_to_clear_other_zeros() {
    let (fam, uf, uf1) = family("x^5", "x^7+2*x^8");
    let jr = jantzen_filtration(&fam).unwrap();
    assert_eq!((jr.tau_plus, jr.tau_minus), (1, -1));
    let at = |k: u32| evaluate_signature(&fam, &rat(-1, 1 << k)).unwrap();
    assert_eq!(at(4), 1);
    for k in 6..=12 {
        assert_eq!(at(k), -1, "k = {k}");
        assert_eq!(signed_roots(&uf, &uf1, &q(-1, 1 << k), &q(1, 1)), -1);
    }
}
