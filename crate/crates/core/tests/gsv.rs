use flagsig::index::{contact_field, gsv_constants, gsv_index_odd, TangencyData, VectorField};
use flagsig::polyring::{make_vars, parse_poly, parse_poly_list, rat, Polynomial};

const ODD_GERMS: &[&str] = &[
    "x^2+y^2+z^2",
    "x^2-y^2+z^2",
    "x^3+y^3+z^3",
    "x^2*y+y^4+z^2",
    "(x^2+y^3)*(x^3+y^2)+z^2",
    "x^4+y^5+x^2*y^2+z^2",
    "x^2+y^3+z^5+x*y*z",
];

fn poly(f: &str) -> Polynomial {
    parse_poly(f, &make_vars(&["x", "y", "z"])).unwrap()
}

#[test]
fn contact_fields_satisfy_the_tangency_identity() {
    for f in ODD_GERMS {
        let fp = poly(f);
        for t in [rat(0, 1), rat(1, 5), rat(-2, 3)] {
            let x = contact_field(&fp, &t).unwrap();
            let level = &fp - &Polynomial::constant(fp.vars(), t);
            assert_eq!(x.apply_to(&fp), &fp.partial_index(0) * &level, "{f}");
        }
    }
}

#[test]
fn constants_depend_on_f_alone() {
    for f in ODD_GERMS {
        let fp = poly(f);
        let k = gsv_constants(&fp).unwrap();
        let td = TangencyData::new(fp.clone(), contact_field(&fp, &rat(0, 1)).unwrap()).unwrap();
        let r = gsv_index_odd(&td).unwrap_or_else(|e| panic!("{f}: {e}"));
        assert_eq!((r.k_plus, r.k_minus), k, "{f}");
        assert_eq!(r.ind_plus - r.ind_minus, k.0 - k.1);
        // the Euler-type field of a homogeneous germ is another tangent field
        if ["x^2+y^2+z^2", "x^3+y^3+z^3"].contains(f) {
            let v = make_vars(&["x", "y", "z"]);
            let euler = VectorField::new(parse_poly_list("x,y,z", &v).unwrap()).unwrap();
            let r = gsv_index_odd(&TangencyData::new(fp.clone(), euler).unwrap()).unwrap();
            assert_eq!((r.k_plus, r.k_minus), k, "{f}");
        }
    }
}

#[test]
fn k_plus_and_minus_relations() {
    for f in ODD_GERMS {
        let fp = poly(f);
        let (kp, km) = gsv_constants(&fp).unwrap();
        let a = flagsig::algebra::build_algebra(&fp.gradient()).unwrap();
        let sa = flagsig::bilinear::el_signature(&a);
        assert_eq!((kp + km).rem_euclid(2), 0, "{f}");
        assert_eq!(kp - km, 2 * sa, "{f}");
    }
}
