use serde_json::json;

use super::report::Report;
use super::{execute, CheckOptions, Outcome, Request};
use crate::algebra::{build_algebra, ZeroDimAlgebra};
use crate::bilinear::el_signature;
use crate::flags::{
    flag_orthogonality_holds, flag_signatures_checked, primitive_decomposition,
    primitive_pairing_signatures,
};
use crate::index::{contact_field, odd_sum_matches_el};
use crate::jantzen::{
    evaluate_signature, jantzen_filtration, univariate_colon_flag, univariate_relative_family,
};
use crate::polyring::{make_vars, parse_poly, parse_poly_list, rat, Polynomial};

type Check = fn(CheckOptions) -> Result<(), String>;

const GERMS: &[(&str, &[&str])] = &[
    ("x^2+y^2+z^2", &["x", "y", "z"]),
    ("x^3+y^3+z^3", &["x", "y", "z"]),
    ("x^2*y+y^4+z^2", &["x", "y", "z"]),
    ("x^4+y^5+x^2*y^2", &["x", "y"]),
    ("x^3+x*y^3+x^2*y^2", &["x", "y"]),
    ("(x^2+y^3)*(x^3+y^2)+z^2", &["x", "y", "z"]),
];

const MAPS: &[(&str, &[&str], i64)] = &[
    ("x^3", &["x"], 1),
    ("x^4", &["x"], 0),
    ("x^2-y^2, 2*x*y", &["x", "y"], 2),
    ("x, -y", &["x", "y"], -1),
    ("x^3-3*x*y^2, 3*x^2*y-y^3", &["x", "y"], 3),
];

const PAIRS: &[(&str, &str)] = &[
    ("x^2", "x^3"),
    ("x^3", "x^2"),
    ("-x^2", "x^5+x^4"),
    ("2*x^4", "x^3-x^7"),
    ("x^3", "-x^4"),
];

fn milnor(f: &str, names: &[&str]) -> Result<(ZeroDimAlgebra, Polynomial), String> {
    let v = make_vars(names);
    let f = parse_poly(f, &v).map_err(|e| e.to_string())?;
    let a = build_algebra(&f.gradient()).map_err(|e| e.to_string())?;
    Ok((a, f))
}

fn el_matches_known_degrees(_: CheckOptions) -> Result<(), String> {
    for (map, names, deg) in MAPS {
        let gens = parse_poly_list(map, &make_vars(names)).map_err(|e| e.to_string())?;
        let a = build_algebra(&gens).map_err(|e| e.to_string())?;
        let s = el_signature(&a);
        if s != *deg {
            return Err(format!("({map}): signature {s}, degree {deg}"));
        }
    }
    Ok(())
}

fn flag_invariants(opts: CheckOptions) -> Result<(), String> {
    for (f, names) in GERMS {
        let (a, fp) = milnor(f, names)?;
        let fe = a.element_of(&fp).map_err(|e| e.to_string())?;
        let l = a.default_functional();
        let s = flag_signatures_checked(&a, &l, &fe, opts.trials.max(20), opts.seed)
            .map_err(|e| format!("{f}: {e}"))?;
        let pd = primitive_decomposition(&a, &fe).map_err(|e| e.to_string())?;
        let weighted: usize = pd
            .block_counts
            .iter()
            .enumerate()
            .map(|(j, n)| (j + 1) * n)
            .sum();
        if weighted != a.dim() {
            return Err(format!("{f}: blocks cover {weighted} of {}", a.dim()));
        }
        if primitive_pairing_signatures(&a, &l, &fe, &pd)[..] != s.sigma[1..] {
            return Err(format!("{f}: primitive pairings disagree"));
        }
        if !flag_orthogonality_holds(&a, &l, &fe).map_err(|e| e.to_string())? {
            return Err(format!("{f}: orthogonality fails"));
        }
        if (s.k_plus() + s.k_minus()) % 2 != 0 || s.k_plus() - s.k_minus() != 2 * el_signature(&a) {
            return Err(format!("{f}: K+ = {}, K- = {}", s.k_plus(), s.k_minus()));
        }
    }
    Ok(())
}

fn odd_sum_identity(_: CheckOptions) -> Result<(), String> {
    for (f, names) in GERMS {
        let (_, fp) = milnor(f, names)?;
        if !odd_sum_matches_el(&fp).map_err(|e| e.to_string())? {
            return Err(format!(
                "{f}: odd flag signatures do not sum to the EL signature"
            ));
        }
    }
    Ok(())
}

fn contact_fields_are_tangent(_: CheckOptions) -> Result<(), String> {
    for (f, names) in GERMS.iter().filter(|(_, n)| n.len() % 2 == 1) {
        let (_, fp) = milnor(f, names)?;
        for t in [rat(0, 1), rat(1, 3)] {
            let x = contact_field(&fp, &t).map_err(|e| e.to_string())?;
            let shifted = &fp - &Polynomial::constant(fp.vars(), t.clone());
            let lhs = x.apply_to(&fp);
            let rhs = &fp.partial_index(0) * &shifted;
            if lhs != rhs {
                return Err(format!("{f}, t = {t}: df(X) = {lhs}"));
            }
        }
    }
    Ok(())
}

fn jantzen_harness(_: CheckOptions) -> Result<(), String> {
    let v = make_vars(&["x"]);
    for (f, f1) in PAIRS {
        let fp = parse_poly(f, &v).map_err(|e| e.to_string())?;
        let f1p = parse_poly(f1, &v).map_err(|e| e.to_string())?;
        let fam = univariate_relative_family(&fp, &f1p).map_err(|e| e.to_string())?;
        let jr = jantzen_filtration(&fam).map_err(|e| e.to_string())?;
        for k in 4..=10 {
            let t = rat(1, 1 << k);
            let plus = evaluate_signature(&fam, &t).map_err(|e| e.to_string())?;
            let minus = evaluate_signature(&fam, &-t).map_err(|e| e.to_string())?;
            if (plus, minus) != (jr.tau_plus, jr.tau_minus) {
                return Err(format!(
                    "({f}, {f1}) at 2^-{k}: ({plus}, {minus}) vs ({}, {})",
                    jr.tau_plus, jr.tau_minus
                ));
            }
        }
        let colon = univariate_colon_flag(&fp, &f1p).map_err(|e| e.to_string())?;
        if colon != jr.level_dims() {
            return Err(format!(
                "({f}, {f1}): colon dims {colon:?} vs levels {:?}",
                jr.level_dims()
            ));
        }
        let a = build_algebra(&[f1p]).map_err(|e| e.to_string())?;
        let fe = a.element_of(&fp).map_err(|e| e.to_string())?;
        let s = crate::flags::flag_signatures(&a, &a.default_functional(), &fe)
            .map_err(|e| e.to_string())?;
        for m in 1..s.sigma.len().max(jr.taus.len()) {
            if s.sigma.get(m).copied().unwrap_or(0) != jr.tau(m) {
                return Err(format!(
                    "({f}, {f1}): tau_{m} = {} vs sigma_{m} = {:?}",
                    jr.tau(m),
                    s.sigma.get(m)
                ));
            }
        }
    }
    Ok(())
}

fn json_is_deterministic(opts: CheckOptions) -> Result<(), String> {
    let req = Request::Flag {
        vars: "x,y".into(),
        f: "x^4+y^5+x^2*y^2".into(),
        map: None,
    };
    let render = || {
        execute(&req, opts)
            .map(|o| o.report.render_json())
            .map_err(|f| f.message)
    };
    if render()? != render()? {
        return Err("two runs differ".into());
    }
    Ok(())
}

const SUITES: &[(&str, Check)] = &[
    ("el signature equals local degree", el_matches_known_degrees),
    ("flag invariants", flag_invariants),
    (
        "odd flag signatures sum to the EL signature",
        odd_sum_identity,
    ),
    ("contact fields are tangent", contact_fields_are_tangent),
    ("jantzen harness", jantzen_harness),
    ("deterministic JSON", json_is_deterministic),
];

pub fn run(opts: CheckOptions) -> Outcome {
    let mut report = Report::new("selftest");
    let mut passed = true;
    for (name, check) in SUITES {
        let value = match check(opts) {
            Ok(()) => json!("ok"),
            Err(e) => {
                passed = false;
                json!(format!("FAIL: {e}"))
            }
        };
        report.result(name, value);
    }
    report.provenance.seed = Some(opts.seed);
    report.provenance.trials = Some(opts.trials.max(20));
    Outcome { report, passed }
}
