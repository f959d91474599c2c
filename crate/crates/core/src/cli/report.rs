use serde_json::{json, Map, Value};

use crate::algebra::{LinearFunctional, ZeroDimAlgebra};
use crate::polyring::{Polynomial, Rational};

pub const SCHEMA_VERSION: u64 = 1;

/// Rationals always go out as `"num/den"` strings.
pub fn rat_str(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rat_list(rs: &[Rational]) -> Value {
    Value::Array(rs.iter().map(|r| Value::String(rat_str(r))).collect())
}

pub fn basis_strings(alg: &ZeroDimAlgebra) -> Vec<String> {
    alg.basis_monomials()
        .iter()
        .map(|m| {
            Polynomial::monomial(alg.vars(), m.clone(), Rational::from_integer(1.into()))
                .to_string()
        })
        .collect()
}

/// Everything needed to rerun a computation: ordering, basis, functional and
/// the random-functional settings.
#[derive(Default)]
pub struct Provenance {
    pub ordering: Option<String>,
    pub basis: Option<Vec<String>>,
    pub functional: Option<Vec<Rational>>,
    pub seed: Option<u64>,
    pub trials: Option<usize>,
    pub degree_cap: Option<u32>,
}

impl Provenance {
    pub fn for_algebra(alg: &ZeroDimAlgebra, l: &LinearFunctional) -> Self {
        Provenance {
            ordering: Some(alg.standard_basis().ordering().name().to_string()),
            basis: Some(basis_strings(alg)),
            functional: Some(l.covector().to_vec()),
            ..Default::default()
        }
    }

    fn to_json(&self) -> Value {
        let mut m = Map::new();
        if let Some(o) = &self.ordering {
            m.insert("ordering".into(), json!(o));
        }
        if let Some(b) = &self.basis {
            m.insert("basis".into(), json!(b));
        }
        if let Some(f) = &self.functional {
            m.insert("functional".into(), rat_list(f));
        }
        if let Some(s) = self.seed {
            m.insert("seed".into(), json!(s));
        }
        if let Some(t) = self.trials {
            m.insert("trials".into(), json!(t));
        }
        if let Some(c) = self.degree_cap {
            m.insert("degree_cap".into(), json!(c));
        }
        Value::Object(m)
    }
}

pub struct Report {
    pub task: String,
    pub input: Vec<(String, Value)>,
    pub results: Vec<(String, Value)>,
    pub provenance: Provenance,
}

impl Report {
    pub fn new(task: &str) -> Self {
        Report {
            task: task.to_string(),
            input: Vec::new(),
            results: Vec::new(),
            provenance: Provenance::default(),
        }
    }

    pub fn input(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.input.push((key.to_string(), v.into()));
        self
    }

    pub fn result(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.results.push((key.to_string(), v.into()));
        self
    }

    pub fn to_json(&self) -> Value {
        let obj = |kv: &[(String, Value)]| Value::Object(kv.iter().cloned().collect());
        json!({
            "schema": SCHEMA_VERSION,
            "task": self.task,
            "input": obj(&self.input),
            "results": obj(&self.results),
            "provenance": self.provenance.to_json(),
        })
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("report serializes")
    }

    /// Aligned `key  value` lines, inputs first.
    pub fn render_text(&self) -> String {
        let prov = match self.provenance.to_json() {
            Value::Object(m) => m.into_iter().collect::<Vec<_>>(),
            _ => Vec::new(),
        };
        let width = self
            .input
            .iter()
            .chain(&self.results)
            .chain(&prov)
            .map(|(k, _)| k.len())
            .max()
            .unwrap_or(0);
        let mut out = format!("{}\n", self.task);
        for (title, rows) in [
            ("input", &self.input),
            ("results", &self.results),
            ("provenance", &prov),
        ] {
            if rows.is_empty() {
                continue;
            }
            out.push_str(&format!("\n[{title}]\n"));
            for (k, v) in rows.iter() {
                out.push_str(&format!("  {k:<width$}  {}\n", plain(v)));
            }
        }
        out
    }
}

/// JSON value without string quotes, for the text report.
fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        Value::Array(items) => format!(
            "[{}]",
            items.iter().map(plain).collect::<Vec<_>>().join(", ")
        ),
        Value::Object(m) => {
            let parts: Vec<String> = m.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect();
            format!("{{{}}}", parts.join(", "))
        }
        other => other.to_string(),
    }
}
