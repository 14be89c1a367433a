use thiserror::Error;

/// Errors raised by mode construction, special functions and the residual engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid quantum numbers: {0}")]
    InvalidQuantumNumbers(String),

    #[error("angle out of domain: {name} = {value} (must lie strictly inside (0, π))")]
    AngleOutOfDomain { name: &'static str, value: f64 },

    #[error("singular point: {0}")]
    SingularPoint(String),

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("hypergeometric series hits a pole of the gamma parameter at term {term}")]
    GammaPole { term: usize },

    #[error("hypergeometric series does not terminate and |z| = {modulus} >= 1")]
    Divergence { modulus: f64 },

    #[error("operation requires {expected} parity, got {found}")]
    WrongParity {
        expected: &'static str,
        found: &'static str,
    },

    #[error("finite-difference stencil leaves the domain: {0}")]
    StepExitsDomain(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}

impl Error {
    /// Domain errors (singular points, steps leaving the chart) as opposed to bad input.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::AngleOutOfDomain { .. }
                | Error::SingularPoint(_)
                | Error::StepExitsDomain(_)
                | Error::InvalidGrid(_)
                | Error::OutOfRange(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
