use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid edge: {0}")]
    InvalidEdge(String),

    #[error("graph6 format error: {0}")]
    Format(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    Convergence { iterations: usize, residual: f64 },

    #[error("invalid switch: {0}")]
    InvalidSwitch(String),

    #[error("invalid contraction: {0}")]
    InvalidContraction(String),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("certificate check failed: {0}")]
    CertificateFailure(String),

    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("empty family: {0}")]
    EmptyFamily(String),

    #[error("outside theorem range: {0}")]
    OutsideTheoremRange(String),

    #[error("empty range: {0}")]
    EmptyRange(String),

    #[error("structural audit failed: {0}")]
    AuditFailure(String),
}
