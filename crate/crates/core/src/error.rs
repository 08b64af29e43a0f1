use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("degree out of range for `{id}`: alpha={alpha}, beta={beta} (each must lie in [0,1])")]
    DegreeRange { id: String, alpha: f64, beta: f64 },

    #[error("intuitionistic constraint violated for `{id}`: alpha + beta = {sum} > 1")]
    Constraint { id: String, sum: f64 },

    #[error("parameter `{0}` has degree (0,1) but a non-empty support")]
    PropertyClause(String),

    #[error("fuzzy degree out of range for `{id}`: {mu} is not in [0,1]")]
    MembershipRange { id: String, mu: f64 },

    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("duplicate identifier `{0}`")]
    DuplicateId(String),

    #[error("{0} must not be empty")]
    EmptySet(&'static str),

    #[error("operands disagree on the {0}")]
    Mismatch(&'static str),

    #[error("parameter `{0}` has membership 0 but a non-empty approximation")]
    FpSoftClause(String),

    #[error("group aggregation needs at least one set")]
    EmptyGroup,

    #[error("size out of range: {0}")]
    SizeOutOfRange(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },

    #[error("schema violation: {0}")]
    Schema(String),
}
