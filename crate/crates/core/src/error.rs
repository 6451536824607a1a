use thiserror::Error;

/// Errors raised by the exact and numeric operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("singular curve: discriminant of the octavic vanishes")]
    SingularCurve,
    #[error("singular genus-2 sextic: repeated roots")]
    SingularSextic,
    #[error("degenerate (u,v): {0}")]
    DegenerateUv(&'static str),
    #[error("J2 vanishes (D = 0); absolute invariants undefined")]
    J2Vanishes,
    #[error("singular quartic: 4I^3 - J^2 = 0")]
    SingularQuartic,
    #[error("singular cubic: discriminant vanishes")]
    SingularCubic,
    #[error("moduli point is not a curve: Delta_s = 0")]
    NotACurve,
    #[error("denominator vanishes: {0}")]
    DenominatorZero(&'static str),
    #[error("P = -s3^2 - 8 s2 s3 - 16 s2^2 + 16 s2^3 vanishes")]
    PZero,
    #[error("group {0} is not in the splitting table")]
    UnknownGroup(String),
    #[error("root finding did not converge after {iterations} iterations (precision {bits} bits)")]
    NonConvergence { iterations: usize, bits: usize },
    #[error("degenerate transform: {0}")]
    DegenerateTransform(&'static str),
    #[error("no extra involution found within tolerance")]
    NoInvolution,
    #[error("calibration failure: {0}")]
    CalibrationFailure(String),
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("degree too low: need at least {need}, got {got}")]
    DegreeTooLow { need: usize, got: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("wrong elliptic model kind: expected {0}")]
    WrongModelKind(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
