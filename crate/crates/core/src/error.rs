use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("no unit-distance pairs on a sphere of radius {r} (requires r > 1/2)")]
    NoUnitPairs { r: f64 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("ambiguous rational match: tol {tol} >= 1/(2*q_max^2) for q_max = {q_max}")]
    Ambiguous { tol: f64, q_max: u64 },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("bracketing error: {0}")]
    Bracketing(String),
    #[error("no cap-and-stripes parameters found after {evaluations} evaluations (best margin {best_margin:e})")]
    NoParamsFound { evaluations: usize, best_margin: f64 },
}

impl Error {
    /// Stable machine-readable name, used by the CLI diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "invalid-input",
            Error::NoUnitPairs { .. } => "no-unit-pairs",
            Error::Domain(_) => "domain",
            Error::Ambiguous { .. } => "ambiguous",
            Error::NotApplicable(_) => "not-applicable",
            Error::Precondition(_) => "precondition",
            Error::Bracketing(_) => "bracketing",
            Error::NoParamsFound { .. } => "no-params-found",
        }
    }
}
