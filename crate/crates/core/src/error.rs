use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("combinatorial blow-up: n = {n} exceeds the enumeration cap {cap}")]
    CombinatorialBlowUp { n: usize, cap: usize },
    #[error("series is not invertible: constant term is zero")]
    NotInvertible,
    #[error("insufficient precision: need index {needed}, only known through {available}")]
    InsufficientPrecision { needed: usize, available: usize },
    #[error("normalization violated: d_0 must be 1, found {0}")]
    NormalizationViolated(String),
    #[error("index {n} out of range (table holds n <= {n_max})")]
    IndexOutOfRange { n: usize, n_max: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("{kernel} disagrees with the other kernels at n = {n}")]
    KernelDisagreement { n: usize, kernel: String },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
