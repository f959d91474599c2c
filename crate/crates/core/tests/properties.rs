use flagsig::algebra::build_algebra;
use flagsig::bilinear::{el_signature, inertia};
use flagsig::flags::flag_signatures;
use flagsig::jantzen::{jantzen_filtration, MatrixFamily};
use flagsig::linalg::Matrix;
use flagsig::localbasis::{normal_form, standard_basis, LocalOrdering};
use flagsig::polyring::{
    int, jacobian_det, make_vars, parse_poly, parse_poly_list, Monomial, Polynomial, UniPoly, Vars,
};
use proptest::prelude::*;

fn vars2() -> Vars {
    make_vars(&["x", "y"])
}

prop_compose! {
    fn poly2(max_terms: usize, max_deg: u32)(terms in prop::collection::vec((0..=max_deg, 0..=max_deg, -4i64..=4), 0..=max_terms)) -> Polynomial {
        let v = vars2();
        Polynomial::from_terms(&v, terms.into_iter().map(|(i, j, c)| (Monomial::new(vec![i, j]), int(c))))
    }
}

prop_compose! {
    fn sym_matrix(n: usize)(cells in prop::collection::vec(-3i64..=3, n * n)) -> Matrix {
        let rows: Vec<Vec<_>> = (0..n)
            .map(|i| (0..n).map(|j| int(cells[i.min(j) * n + i.max(j)])).collect())
            .collect();
        Matrix::from_rows(rows)
    }
}

prop_compose! {
    /// Upper triangular with a nonzero diagonal, so always invertible.
    fn invertible(n: usize)(upper in prop::collection::vec(-3i64..=3, n * n), diag in prop::collection::vec(prop::sample::select(vec![-2i64, -1, 1, 3]), n)) -> Matrix {
        let rows: Vec<Vec<_>> = (0..n)
            .map(|i| (0..n).map(|j| match i.cmp(&j) {
                std::cmp::Ordering::Equal => int(diag[i]),
                std::cmp::Ordering::Less => int(upper[i * n + j]),
                std::cmp::Ordering::Greater => int(0),
            }).collect())
            .collect();
        Matrix::from_rows(rows)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly2(4, 3), b in poly2(4, 3), c in poly2(4, 3)) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn leibniz_rule(a in poly2(4, 3), b in poly2(4, 3)) {
        for i in 0..2 {
            let lhs = (&a * &b).partial_index(i);
            let rhs = &(&a.partial_index(i) * &b) + &(&a * &b.partial_index(i));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn jacobian_changes_sign_under_swap(a in poly2(3, 3), b in poly2(3, 3)) {
        let j = jacobian_det(&[a.clone(), b.clone()], &["x", "y"]).unwrap();
        let swapped = jacobian_det(&[b, a], &["x", "y"]).unwrap();
        prop_assert_eq!(j, -swapped);
    }

    #[test]
    fn normal_form_is_a_projection(p in poly2(5, 6), h in poly2(3, 3)) {
        let v = vars2();
        let gens = parse_poly_list("x^3-3*x*y^2, 3*x^2*y-y^3", &v).unwrap();
        let sb = standard_basis(&gens, &LocalOrdering::new(&v)).unwrap();
        let nf = normal_form(&p, &sb).unwrap();
        prop_assert_eq!(normal_form(&nf, &sb).unwrap(), nf.clone());
        // adding an ideal element does not change the class
        let shifted = &p + &(&h * &gens[0]);
        prop_assert_eq!(normal_form(&shifted, &sb).unwrap(), nf);
    }

    #[test]
    fn sylvester_law_of_inertia(g in sym_matrix(4), p in invertible(4)) {
        let moved = p.transpose().mul(&g).mul(&p);
        prop_assert_eq!(inertia(&moved), inertia(&g));
    }

    #[test]
    fn jantzen_is_a_congruence_invariant(
        c in prop::collection::vec((-2i64..=2, -2i64..=2, -2i64..=2), 3),
        p in invertible(2),
    ) {
        // [[a0 + a1 t, b0 + b1 t + b2 t^2], [.., c0 + c2 t^2]]
        let e = |k: usize| UniPoly::from_ints(&[c[k].0, c[k].1, c[k].2]);
        let g = MatrixFamily::new(vec![vec![e(0), e(1)], vec![e(1), e(2)]]).unwrap();
        prop_assume!(!g.det().is_zero());
        let a = jantzen_filtration(&g).unwrap();
        let b = jantzen_filtration(&g.congruence(&p)).unwrap();
        prop_assert_eq!(&a.taus, &b.taus);
        prop_assert_eq!(a.level_dims(), b.level_dims());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    // composing with an invertible linear map of the target multiplies the
    // local degree by the sign of its determinant
    #[test]
    fn degree_under_target_change(p in invertible(2), swap in any::<bool>()) {
        let v = vars2();
        let base = parse_poly_list("x^3-3*x*y^2+y^4, 3*x^2*y-y^3", &v).unwrap();
        let m = if swap { Matrix::from_rows(vec![p.row(1), p.row(0)]) } else { p.clone() };
        let mixed: Vec<Polynomial> = (0..2)
            .map(|i| &base[0].scale(&m[(i, 0)]) + &base[1].scale(&m[(i, 1)]))
            .collect();
        let d0 = el_signature(&build_algebra(&base).unwrap());
        let d1 = el_signature(&build_algebra(&mixed).unwrap());
        let det = &(&m[(0, 0)] * &m[(1, 1)]) - &(&m[(0, 1)] * &m[(1, 0)]);
        let s = if det > int(0) { 1 } else { -1 };
        prop_assert_eq!(d1, s * d0);
    }

    // odd flag signatures sum to the EL signature of the Milnor algebra, and
    // K+ - K- = 2 sigma_A with K+ + K- even
    #[test]
    fn milnor_flag_identities(c in prop::collection::vec(-3i64..=3, 4)) {
        let v = vars2();
        let f = parse_poly(
            &format!("x^4+y^5+({})*x^2*y^2+({})*x^3*y+({})*x*y^4+({})*x^2*y^3", c[0], c[1], c[2], c[3]),
            &v,
        ).unwrap();
        let Ok(a) = build_algebra(&f.gradient()) else { return Ok(()) };
        let fe = a.element_of(&f).unwrap();
        let s = flag_signatures(&a, &a.default_functional(), &fe).unwrap();
        let sa = el_signature(&a);
        prop_assert_eq!(s.odd_sum(), sa);
        prop_assert_eq!(s.k_plus() - s.k_minus(), 2 * sa);
        prop_assert_eq!((s.k_plus() + s.k_minus()).rem_euclid(2), 0);
    }
}
