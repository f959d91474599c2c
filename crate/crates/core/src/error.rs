use thiserror::Error;

/// Errors raised by the engine.
///
/// Variants split into two families: malformed input (bad syntax, mismatched
/// rings, wrong dimensions) and mathematical precondition failures (the input
/// parses but does not satisfy the hypotheses of the construction).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("undeclared variable `{name}` at position {pos}")]
    UndeclaredVariable { name: String, pos: usize },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("polynomials live in different rings")]
    RingMismatch,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("ideal has infinite codimension in the local ring: {0}")]
    InfiniteCodimension(String),

    #[error("lead monomial degree exceeded the cap of {cap}; infinite codimension suspected")]
    DegreeCapExceeded { cap: u32 },

    #[error("generators contain a unit; the local quotient algebra is zero")]
    UnitIdeal,

    #[error("degenerate socle: {0}")]
    DegenerateSocle(String),

    #[error("element is not nilpotent (nonzero constant term)")]
    NotNilpotent,

    #[error("element is not divisible by f^{power}")]
    NotDivisible { power: usize },

    #[error("induced form on level {level} is degenerate")]
    DegeneracyViolation { level: usize },

    #[error("signature changed between admissible functionals at level {level}")]
    FunctionalDependence { level: usize },

    #[error("Jacobian class is not divisible by the weight")]
    SocleDivisionFailure,

    #[error("matrix family is identically degenerate (det = 0)")]
    IdenticallyDegenerate,

    #[error("matrix family is degenerate at t = {0}")]
    DegenerateAtPoint(String),

    #[error("f has order zero at the origin")]
    ZeroOrder,

    #[error("relative family requires f = c*x^k, got {0}")]
    NonMonomialBase(String),

    #[error("vector field is not tangent to f = 0 (nonzero remainder {0})")]
    NotTangent(String),

    #[error("contact fields and K constants need an odd number of variables, got {0}")]
    EvenAmbient(usize),

    #[error("expected an even number of variables, got {0}")]
    OddAmbient(usize),

    #[error("zero polynomial has no well-defined {0}")]
    ZeroPolynomial(&'static str),
}

impl Error {
    /// True for errors caused by malformed input rather than failed hypotheses.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::UndeclaredVariable { .. }
                | Error::UnknownVariable(_)
                | Error::RingMismatch
                | Error::DimensionMismatch { .. }
                | Error::Malformed(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
