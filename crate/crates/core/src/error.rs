use thiserror::Error;

/// Errors raised by the library. Variants map onto the CLI exit-code classes
/// through [`Error::class`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("ambient mismatch: ({0}, {1}) vs ({2}, {3})")]
    AmbientMismatch(usize, usize, usize, usize),

    #[error("invalid ambient: n = {n}, ell = {ell}")]
    InvalidAmbient { n: usize, ell: usize },

    #[error("pencil rank r = {r} out of range 1..={max}")]
    RankOutOfRange { r: usize, max: usize },

    #[error("invalid realization: {0}")]
    InvalidRealization(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("not a degeneration: {0}")]
    NotADegeneration(String),

    #[error("no unique principal dependence among candidates {0}")]
    NoUniquePrincipal(String),

    #[error("weights are resonant along {0}")]
    NonresonanceViolated(String),

    #[error("lambda_S vanishes for S = {0}")]
    LambdaSZero(String),

    #[error("weight sampling exhausted after {0} attempts")]
    SamplingExhausted(usize),

    #[error("kernel of the projection is not invariant: {0}")]
    KernelNotInvariant(String),

    #[error("spectral anomaly: {0}")]
    SpectralAnomaly(String),

    #[error("endomorphism is not diagonalizable: {0}")]
    NotDiagonalizable(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Coarse classification used for exit codes and machine-readable error fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Parse,
    Contract,
    Spectral,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Parse { .. } | Error::InvalidRealization(_) => ErrorClass::Parse,
            Error::KernelNotInvariant(_)
            | Error::SpectralAnomaly(_)
            | Error::NotDiagonalizable(_)
            | Error::Internal(_) => ErrorClass::Spectral,
            _ => ErrorClass::Contract,
        }
    }

    /// Stable snake-case identifier for reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::AmbientMismatch(..) => "ambient_mismatch",
            Error::InvalidAmbient { .. } => "invalid_ambient",
            Error::RankOutOfRange { .. } => "rank_out_of_range",
            Error::InvalidRealization(_) => "invalid_realization",
            Error::Parse { .. } => "parse_error",
            Error::NotADegeneration(_) => "not_a_degeneration",
            Error::NoUniquePrincipal(_) => "no_unique_principal",
            Error::NonresonanceViolated(_) => "nonresonance_violated",
            Error::LambdaSZero(_) => "lambda_s_zero",
            Error::SamplingExhausted(_) => "sampling_exhausted",
            Error::KernelNotInvariant(_) => "kernel_not_invariant",
            Error::SpectralAnomaly(_) => "spectral_anomaly",
            Error::NotDiagonalizable(_) => "not_diagonalizable",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
