use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("denominator vanishes at kappa = {kappa}, omega = {omega}")]
    DenominatorVanishes { kappa: String, omega: String },

    #[error("scalar {0} has no inverse in the parameter field representation")]
    NotInvertible(String),

    #[error("polynomial is not divisible by the linear form {0}")]
    NotDivisible(String),

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("degree {n} exceeds the configured cap {cap}")]
    DegreeCapExceeded { n: usize, cap: usize },

    #[error("group closure exceeded {0} elements")]
    ClosureOverflow(usize),

    #[error("parameter must be a nonnegative integer, got {0}")]
    NotInteger(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
