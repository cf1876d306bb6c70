//! Crate-wide error type.

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("gamma pole at non-positive integer z = {0}")]
    GammaPole(String),

    #[error("non-finite input to {0}")]
    NonFinite(&'static str),

    #[error("{what} failed to converge within {budget} iterations")]
    NonConvergence { what: &'static str, budget: usize },

    #[error("Bernoulli index {0} out of range (need even, 2..=64)")]
    BernoulliIndex(i64),

    #[error("contour choice fails: a1 - b{which} = {value} is a natural number")]
    ContourChoice { which: u8, value: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("pole of the zeta factor at s = 1")]
    ZetaPole,

    #[error("character is not primitive (label {0})")]
    NotPrimitive(String),

    #[error("character is not self-dual (label {0}); no real critical-line rotation")]
    NotSelfDual(String),

    #[error("q-expansion length {0} exceeds the supported maximum {1}")]
    TruncationOverflow(usize, usize),

    #[error("root-number calibration failed: {0}")]
    UnresolvedRootNumber(String),

    #[error("zero count mismatch: scan found {scanned}, argument principle gives {counted}")]
    CountMismatch { scanned: usize, counted: i64 },

    #[error("zero refinement failed near t = {0}")]
    RefinementFailed(f64),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("character label mismatch: expected {expected}, file has {found}")]
    LabelMismatch { expected: String, found: String },

    #[error("leading coefficient is zero; Dirichlet inverse undefined")]
    ZeroLeadingCoefficient,

    #[error("mixed or mismatched coefficient sequences: {0}")]
    SequenceMismatch(String),

    #[error("analytic continuation unavailable: {0}")]
    ContinuationUnavailable(String),

    #[error("model self-check failed ({what}): residual {residual:.3e}")]
    SelfCheckFailed { what: String, residual: f64 },

    #[error("simplicity check failed at zero gamma = {gamma}: |L'| = {deriv:.3e}")]
    SimplicityFailure { gamma: f64, deriv: f64 },

    #[error("truncation insufficient for {what}: bound {bound:.3e} exceeds target {target:.3e}")]
    TruncationInsufficient { what: &'static str, bound: f64, target: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
