use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::report::{rat_str, Provenance, Report};
use super::{CheckOptions, Failure, Outcome};
use crate::algebra::{build_algebra, AlgebraElement, ZeroDimAlgebra};
use crate::bilinear::{el_signature, gram_form, order0_signature};
use crate::error::Error;
use crate::flags::{
    build_flag, flag_orthogonality_holds, flag_signatures_checked, primitive_decomposition,
    primitive_pairing_signatures, FlagSignatures,
};
use crate::index::{
    contact_field, gsv_index_even, gsv_index_odd, ph_index, TangencyData, VectorField,
};
use crate::jantzen::{
    evaluate_signature, jantzen_filtration, univariate_colon_flag, univariate_relative_family,
    MatrixFamily,
};
use crate::linalg::Subspace;
use crate::localbasis::degree_cap_from_env;
use crate::polyring::{
    make_vars, parse_poly, parse_poly_list, parse_rational, Polynomial, Rational, Vars,
};

type TaskResult<T> = Result<T, Failure>;

fn parse_vars(text: &str) -> TaskResult<Vars> {
    let names: Vec<&str> = text.split(',').map(str::trim).collect();
    for (i, n) in names.iter().enumerate() {
        let ok = n
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(Failure::input(format!("--vars: bad variable name `{n}`")));
        }
        if names[..i].contains(n) {
            return Err(Failure::input(format!("--vars: `{n}` declared twice")));
        }
    }
    Ok(make_vars(&names))
}

fn poly(text: &str, vars: &Vars, origin: &str) -> TaskResult<Polynomial> {
    parse_poly(text, vars).map_err(|e| Failure::from_error(e, origin))
}

fn poly_list(text: &str, vars: &Vars, origin: &str) -> TaskResult<Vec<Polynomial>> {
    parse_poly_list(text, vars).map_err(|e| Failure::from_error(e, origin))
}

fn algebra(gens: &[Polynomial], origin: &str) -> TaskResult<ZeroDimAlgebra> {
    build_algebra(gens).map_err(|e| Failure::from_error(e, origin))
}

fn strings<T: ToString>(xs: &[T]) -> Value {
    json!(xs.iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn provenance(alg: &ZeroDimAlgebra, opts: CheckOptions) -> Provenance {
    let mut p = Provenance::for_algebra(alg, &alg.default_functional());
    p.seed = Some(opts.seed);
    p.trials = Some(opts.trials);
    p.degree_cap = Some(degree_cap_from_env());
    p
}

/// `c` with `a = c b`, if `b` is nonzero and `a` is a multiple of it.
fn ratio(a: &AlgebraElement, b: &AlgebraElement) -> Option<Rational> {
    let k = b
        .coords()
        .iter()
        .position(|c| c != &Rational::from_integer(0.into()))?;
    let c = &a.coords()[k] / &b.coords()[k];
    (b.scale(&c) == *a).then_some(c)
}

pub fn el(
    vars: &str,
    map: Option<&str>,
    f: Option<&str>,
    opts: CheckOptions,
) -> TaskResult<Outcome> {
    let v = parse_vars(vars)?;
    let gens = match (map, f) {
        (Some(m), _) => poly_list(m, &v, "--map")?,
        (None, Some(f)) => poly(f, &v, "--f")?.gradient(),
        (None, None) => return Err(Failure::input("el needs --map or --f")),
    };
    let alg = algebra(&gens, "--map")?;
    let l = alg.default_functional();
    let full = Subspace::full(alg.dim());
    let s = gram_form(&alg, &l, &alg.one(), &full).signature();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.trials {
        let other =
            gram_form(&alg, &alg.random_functional(&mut rng), &alg.one(), &full).signature();
        if other.signature != s.signature || other.n_zero != 0 {
            return Err(Failure::from_error(
                Error::FunctionalDependence { level: 0 },
                "el",
            ));
        }
    }
    let mut r = Report::new("el-signature");
    r.input("vars", json!(v.to_vec()))
        .input("map", strings(&gens));
    r.result("dim", alg.dim())
        .result("jacobian", alg.to_polynomial(alg.jacobian()).to_string())
        .result("n_plus", s.n_plus)
        .result("n_minus", s.n_minus)
        .result("n_zero", s.n_zero)
        .result("signature", s.signature);
    r.provenance = provenance(&alg, opts);
    Ok(Outcome {
        report: r,
        passed: true,
    })
}

struct FlagData {
    sigs: FlagSignatures,
    dims: Vec<usize>,
    blocks: Vec<usize>,
    primitive: Vec<i64>,
    orthogonal: bool,
}

fn flag_data(
    alg: &ZeroDimAlgebra,
    fe: &AlgebraElement,
    opts: CheckOptions,
) -> crate::Result<FlagData> {
    let l = alg.default_functional();
    let sigs = flag_signatures_checked(alg, &l, fe, opts.trials, opts.seed)?;
    let dims = build_flag(alg, fe)?.dims();
    let pd = primitive_decomposition(alg, fe)?;
    let primitive = primitive_pairing_signatures(alg, &l, fe, &pd);
    let orthogonal = flag_orthogonality_holds(alg, &l, fe)?;
    Ok(FlagData {
        sigs,
        dims,
        blocks: pd.block_counts,
        primitive,
        orthogonal,
    })
}

fn flag_results(r: &mut Report, d: &FlagData) {
    r.result("ell", d.sigs.ell)
        .result("flag_dims", json!(d.dims))
        .result("quotient_dims", json!(d.sigs.quotient_dims))
        .result("sigma", json!(d.sigs.sigma))
        .result("k_plus", d.sigs.k_plus())
        .result("k_minus", d.sigs.k_minus())
        .result("odd_sum", d.sigs.odd_sum())
        .result("block_counts", json!(d.blocks))
        .result("primitive_sigma", json!(d.primitive))
        .result("orthogonality", d.orthogonal);
}

pub fn flag(vars: &str, f: &str, map: Option<&str>, opts: CheckOptions) -> TaskResult<Outcome> {
    let v = parse_vars(vars)?;
    let fp = poly(f, &v, "--f")?;
    let gens = match map {
        Some(m) => poly_list(m, &v, "--map")?,
        None => fp.gradient(),
    };
    let alg = algebra(
        &gens,
        if map.is_some() {
            "--map"
        } else {
            "gradient of --f"
        },
    )?;
    let fe = alg
        .element_of(&fp)
        .map_err(|e| Failure::from_error(e, "--f"))?;
    let d = flag_data(&alg, &fe, opts).map_err(|e| Failure::from_error(e, "flag"))?;
    let el = el_signature(&alg);
    let mut r = Report::new("flag");
    r.input("vars", json!(v.to_vec()))
        .input("f", fp.to_string())
        .input("algebra", strings(&gens));
    r.result("dim", alg.dim())
        .result("f_class", alg.to_polynomial(&fe).to_string());
    flag_results(&mut r, &d);
    r.result("el_signature", el);
    if map.is_none() {
        // the Jacobian of the gradient is the Hessian
        r.result(
            "hessian_over_f",
            ratio(alg.jacobian(), &fe).map_or(Value::Null, |c| Value::String(rat_str(&c))),
        );
        r.result("odd_sum_equals_el", el == d.sigs.odd_sum());
    }
    r.provenance = provenance(&alg, opts);
    Ok(Outcome {
        report: r,
        passed: true,
    })
}

fn parse_points(t: Option<&str>) -> TaskResult<Vec<Rational>> {
    let text = t.unwrap_or("1/16,-1/16");
    text.split(',')
        .map(|s| parse_rational(s.trim()).map_err(|e| Failure::from_error(e, "--t")))
        .collect()
}

pub fn jantzen(
    family: Option<&str>,
    vars: &str,
    f: Option<&str>,
    f1: Option<&str>,
    t: Option<&str>,
) -> TaskResult<Outcome> {
    let points = parse_points(t)?;
    let mut r = Report::new("jantzen");
    let (fam, harness) = match (family, f, f1) {
        (Some(text), _, _) => (
            MatrixFamily::from_json(text).map_err(|e| Failure::from_error(e, "--family"))?,
            None,
        ),
        (None, Some(f), Some(f1)) => {
            let v = parse_vars(vars)?;
            let fp = poly(f, &v, "--f")?;
            let f1p = poly(f1, &v, "--f1")?;
            let fam = univariate_relative_family(&fp, &f1p)
                .map_err(|e| Failure::from_error(e, "relative family"))?;
            r.input("vars", json!(v.to_vec()))
                .input("f", fp.to_string())
                .input("f1", f1p.to_string());
            (fam, Some((fp, f1p)))
        }
        _ => {
            return Err(Failure::input(
                "jantzen needs --family or both --f and --f1",
            ))
        }
    };
    r.input(
        "family",
        serde_json::from_str::<Value>(&fam.to_json()).expect("family JSON"),
    );
    let jr = jantzen_filtration(&fam).map_err(|e| Failure::from_error(e, "jantzen"))?;
    let mut evals = Vec::new();
    for p in &points {
        let s = evaluate_signature(&fam, p).map_err(|e| Failure::from_error(e, "--t"))?;
        evals.push(json!({ "t": rat_str(p), "signature": s }));
    }
    r.result("size", fam.size())
        .result("det", fam.det().to_string())
        .result("exponents", json!(jr.exponents))
        .result("level_dims", json!(jr.level_dims()))
        .result("taus", json!(jr.taus))
        .result("tau_plus", jr.tau_plus)
        .result("tau_minus", jr.tau_minus)
        .result("evaluations", Value::Array(evals));
    if let Some((fp, f1p)) = harness {
        let colon =
            univariate_colon_flag(&fp, &f1p).map_err(|e| Failure::from_error(e, "colon flag"))?;
        r.result("colon_dims", json!(colon));
        // the same signatures read off the algebra of f1 with the class of f
        let sigma = build_algebra(std::slice::from_ref(&f1p)).and_then(|a| {
            let fe = a.element_of(&fp)?;
            crate::flags::flag_signatures(&a, &a.default_functional(), &fe)
        });
        r.result("flag_sigma", sigma.map_or(Value::Null, |s| json!(s.sigma)));
    }
    Ok(Outcome {
        report: r,
        passed: true,
    })
}

fn gsv_report(f: &Polynomial, field: VectorField, opts: CheckOptions) -> TaskResult<Report> {
    let n = f.nvars();
    let td = TangencyData::new(f.clone(), field).map_err(|e| Failure::from_error(e, "--field"))?;
    let mut r = Report::new("gsv");
    r.input("vars", json!(f.vars().to_vec()))
        .input("f", f.to_string())
        .input("field", strings(td.field.components()));
    r.result("cofactor", td.h.to_string());
    let milnor = match build_algebra(&f.gradient()) {
        Ok(a) => Some(a),
        Err(Error::UnitIdeal) => None,
        Err(e) => return Err(Failure::from_error(e, "Milnor algebra of --f")),
    };
    if n % 2 == 1 {
        let g = gsv_index_odd(&td).map_err(|e| Failure::from_error(e, "gsv"))?;
        r.result("dim_a", g.dim_a)
            .result("dim_b", g.dim_b)
            .result("sigma_b_h_0", g.sigma_b_h_0);
        if let Some(alg) = &milnor {
            let fe = alg
                .element_of(f)
                .map_err(|e| Failure::from_error(e, "--f"))?;
            let d = flag_data(alg, &fe, opts).map_err(|e| Failure::from_error(e, "flag"))?;
            flag_results(&mut r, &d);
        } else {
            r.result("k_plus", g.k_plus).result("k_minus", g.k_minus);
        }
        r.result("ind_plus", g.ind_plus)
            .result("ind_minus", g.ind_minus);
    } else {
        let (ind, _) = gsv_index_even(&td).map_err(|e| Failure::from_error(e, "gsv"))?;
        let b = algebra(td.field.components(), "--field")?;
        let sigma_b = order0_signature(
            &b,
            &b.element_of(&td.h)
                .map_err(|e| Failure::from_error(e, "cofactor"))?,
        )
        .map_err(|e| Failure::from_error(e, "gsv"))?;
        r.result("dim_a", milnor.as_ref().map_or(0, ZeroDimAlgebra::dim))
            .result("dim_b", b.dim())
            .result("sigma_b_h_0", sigma_b)
            .result("sigma_a_h_0", sigma_b - ind)
            .result("ind_plus", ind)
            .result("ind_minus", ind);
    }
    let mut p = match &milnor {
        Some(a) => provenance(a, opts),
        None => Provenance {
            seed: Some(opts.seed),
            trials: Some(opts.trials),
            ..Default::default()
        },
    };
    p.degree_cap = Some(degree_cap_from_env());
    r.provenance = p;
    Ok(r)
}

pub fn gsv(vars: &str, f: &str, field: Option<&str>, opts: CheckOptions) -> TaskResult<Outcome> {
    let v = parse_vars(vars)?;
    let fp = poly(f, &v, "--f")?;
    let x = match field {
        Some(text) => VectorField::new(poly_list(text, &v, "--field")?)
            .map_err(|e| Failure::from_error(e, "--field"))?,
        None => contact_field(&fp, &Rational::from_integer(0.into())).map_err(|e| {
            Failure::from_error(e, "contact field (pass --field in even dimension)")
        })?,
    };
    Ok(Outcome {
        report: gsv_report(&fp, x, opts)?,
        passed: true,
    })
}

pub fn index(vars: &str, field: &str, f: Option<&str>, opts: CheckOptions) -> TaskResult<Outcome> {
    let v = parse_vars(vars)?;
    let x = VectorField::new(poly_list(field, &v, "--field")?)
        .map_err(|e| Failure::from_error(e, "--field"))?;
    if let Some(f) = f {
        let fp = poly(f, &v, "--f")?;
        let mut r = gsv_report(&fp, x, opts)?;
        r.task = "index".into();
        return Ok(Outcome {
            report: r,
            passed: true,
        });
    }
    let alg = algebra(x.components(), "--field")?;
    let ind = ph_index(&x).map_err(|e| Failure::from_error(e, "index"))?;
    let mut r = Report::new("index");
    r.input("vars", json!(v.to_vec()))
        .input("field", strings(x.components()));
    r.result("dim", alg.dim()).result("index", ind);
    r.provenance = provenance(&alg, opts);
    Ok(Outcome {
        report: r,
        passed: true,
    })
}

/// Runs every structural check on the Milnor algebra of `f`; fails (exit 1)
/// when one does not hold.
pub fn check(vars: &str, f: &str, opts: CheckOptions) -> TaskResult<Outcome> {
    let v = parse_vars(vars)?;
    let fp = poly(f, &v, "f")?;
    let alg = algebra(&fp.gradient(), "Milnor algebra of f")?;
    let fe = alg
        .element_of(&fp)
        .map_err(|e| Failure::from_error(e, "f"))?;
    let invariant = match flag_data(&alg, &fe, opts) {
        Ok(d) => Ok(d),
        // a failed invariant is a check result, not an error
        Err(e @ (Error::FunctionalDependence { .. } | Error::DegeneracyViolation { .. })) => Err(e),
        Err(e) => return Err(Failure::from_error(e, "flag")),
    };
    let el = el_signature(&alg);
    let mut r = Report::new("check");
    r.input("vars", json!(v.to_vec()))
        .input("f", fp.to_string());
    r.result("dim", alg.dim()).result("el_signature", el);
    let passed = match invariant {
        Ok(d) => {
            let weighted: usize = d.blocks.iter().enumerate().map(|(j, n)| (j + 1) * n).sum();
            let checks = [
                ("functional_invariance", true),
                ("nondegenerate_levels", true),
                ("blocks_fill_algebra", weighted == alg.dim()),
                (
                    "primitive_route_agrees",
                    d.primitive[..] == d.sigs.sigma[1..],
                ),
                ("odd_sum_equals_el", el == d.sigs.odd_sum()),
            ];
            flag_results(&mut r, &d);
            for (name, ok) in checks {
                r.result(name, ok);
            }
            d.orthogonal && checks.iter().all(|(_, ok)| *ok)
        }
        Err(e) => {
            let failed = match e {
                Error::FunctionalDependence { .. } => "functional_invariance",
                _ => "nondegenerate_levels",
            };
            r.result(failed, false).result("detail", e.to_string());
            false
        }
    };
    r.provenance = provenance(&alg, opts);
    Ok(Outcome { report: r, passed })
}
