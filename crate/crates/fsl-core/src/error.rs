use thiserror::Error;

/// Errors produced by group construction and lattice computations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("order cap exceeded: {0}")]
    OrderCapExceeded(String),

    #[error("subgroup does not belong to the given parent group")]
    SubgroupNotContained,

    #[error("subgroup of order {0} is not normal in the ambient group")]
    NotNormal(usize),

    #[error("group of order {order} is not {p}-soluble")]
    NotPSoluble { order: usize, p: u64 },

    #[error("group of order {0} is not soluble")]
    NotSoluble(usize),

    #[error("matrix is singular modulo {0}")]
    SingularMatrix(u64),

    #[error("unknown formation token `{0}`")]
    UnknownFormation(String),

    #[error("unknown example `{0}`")]
    UnknownExample(String),

    #[error("formation violation for `{name}`: {detail}")]
    FormationViolation { name: String, detail: String },

    #[error("parse error at line {line}: {msg}")]
    ParseError { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
