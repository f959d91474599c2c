use serde::Deserialize;

use super::{CheckOptions, Request};
use crate::error::{Error, Result};

/// A task described in JSON:
///
/// ```json
/// { "vars": ["x", "y", "z"], "task": "gsv",
///   "f": "(x^2+y^3)*(x^3+y^2)+z^2",
///   "options": { "seed": 7, "trials": 20 } }
/// ```
///
/// `task` is one of `el-signature`, `flag`, `jantzen`, `gsv`, `index`,
/// `check`. Lists of polynomials (`map`, `field`) are JSON arrays of strings.
/// A `jantzen` problem carries either a `family` object or `f` and `f1`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(default)]
    pub vars: Vec<String>,
    pub task: String,
    #[serde(default)]
    pub f: Option<String>,
    #[serde(default)]
    pub f1: Option<String>,
    #[serde(default)]
    pub map: Option<Vec<String>>,
    #[serde(default)]
    pub field: Option<Vec<String>>,
    #[serde(default)]
    pub family: Option<serde_json::Value>,
    #[serde(default)]
    pub options: ProblemOptions,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemOptions {
    pub seed: Option<u64>,
    pub trials: Option<usize>,
    /// Evaluation points for `jantzen`, as rational strings.
    pub t: Option<Vec<String>>,
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<Self> {
        let pf: ProblemFile = serde_json::from_str(text)
            .map_err(|e| Error::Malformed(format!("problem file: {e}")))?;
        pf.validate()?;
        Ok(pf)
    }

    fn validate(&self) -> Result<()> {
        let has_family = self.family.is_some();
        if self.vars.is_empty() && !(self.task == "jantzen" && has_family) {
            return Err(Error::Malformed("problem file: `vars` is empty".into()));
        }
        let missing = match self.task.as_str() {
            "el-signature" if self.map.is_none() && self.f.is_none() => Some("`map` or `f`"),
            "flag" | "gsv" | "check" if self.f.is_none() => Some("`f`"),
            "index" if self.field.is_none() => Some("`field`"),
            "jantzen" if !has_family && (self.f.is_none() || self.f1.is_none()) => {
                Some("`family` or both `f` and `f1`")
            }
            "el-signature" | "flag" | "gsv" | "check" | "index" | "jantzen" => None,
            other => return Err(Error::Malformed(format!("unknown task `{other}`"))),
        };
        match missing {
            Some(what) => Err(Error::Malformed(format!(
                "task `{}` needs {what}",
                self.task
            ))),
            None => Ok(()),
        }
    }

    /// The request and options this file describes. Call on a validated file.
    pub fn into_request(self) -> (Request, CheckOptions) {
        let mut opts = CheckOptions::default();
        if let Some(s) = self.options.seed {
            opts.seed = s;
        }
        if let Some(t) = self.options.trials {
            opts.trials = t;
        }
        let vars = self.vars.join(",");
        let list = |v: Option<Vec<String>>| v.map(|xs| xs.join(","));
        let req = match self.task.as_str() {
            "el-signature" => Request::El {
                vars,
                map: list(self.map),
                f: self.f,
            },
            "flag" => Request::Flag {
                vars,
                f: self.f.unwrap_or_default(),
                map: list(self.map),
            },
            "jantzen" => Request::Jantzen {
                family: self.family.map(|v| v.to_string()),
                vars: if vars.is_empty() { "x".into() } else { vars },
                f: self.f,
                f1: self.f1,
                t: list(self.options.t),
            },
            "gsv" => Request::Gsv {
                vars,
                f: self.f.unwrap_or_default(),
                field: list(self.field),
            },
            "index" => Request::Index {
                vars,
                field: list(self.field).unwrap_or_default(),
                f: self.f,
            },
            _ => Request::Check {
                vars,
                f: self.f.unwrap_or_default(),
            },
        };
        (req, opts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gsv_problem() {
        let pf = ProblemFile::from_json(
            r#"{"vars": ["x","y","z"], "task": "gsv", "f": "x^2+y^2+z^2", "options": {"seed": 3}}"#,
        )
        .unwrap();
        let (req, opts) = pf.into_request();
        assert!(matches!(req, Request::Gsv { ref vars, .. } if vars == "x,y,z"));
        assert_eq!(opts.seed, 3);
        assert_eq!(opts.trials, super::super::DEFAULT_CLI_TRIALS);
    }

    #[test]
    fn rejects_bad_files() {
        for text in [
            r#"{"vars": ["x"], "task": "flag"}"#,
            r#"{"vars": ["x"], "task": "nope", "f": "x"}"#,
            r#"{"vars": ["x"], "task": "flag", "f": "x", "colour": 1}"#,
            r#"{"vars": [], "task": "flag", "f": "x"}"#,
            r#"{"task": "jantzen", "f": "x^2"}"#,
            "not json",
        ] {
            let e = ProblemFile::from_json(text).unwrap_err();
            assert!(e.is_input_error(), "{text}: {e}");
        }
    }
}
