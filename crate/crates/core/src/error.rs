use thiserror::Error;

pub type Result<T> = std::result::Result<T, IndexError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },

    #[error("unknown variable '{0}'")]
    UnknownVariable(String),

    #[error("malformed rational literal '{0}'")]
    BadRational(String),

    #[error("polynomials from different variable contexts cannot be combined")]
    ContextMismatch,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("zero is not isolated: {0}")]
    NonIsolated(String),

    #[error("the origin is not a zero of the form")]
    RegularPoint,

    #[error("Jacobian determinant reduces to zero in the local algebra")]
    DegenerateSocle,

    #[error("form is not holomorphic")]
    NotHolomorphic,

    #[error("no stable generic value after seeds {seeds:?} (values {values:?})")]
    GenericityFailure { seeds: Vec<u64>, values: Vec<u64> },

    #[error("independent computations disagree: {0}")]
    CrossCheck(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}

impl IndexError {
    /// Process exit code for the command-line surface: 1 for a failed
    /// mathematical precondition, 2 for bad input, 3 for resource limits.
    pub fn exit_code(&self) -> i32 {
        use IndexError::*;
        match self {
            Syntax { .. } | UnknownVariable(_) | BadRational(_) | ContextMismatch | InvalidInput(_) => 2,
            ResourceLimit(_) => 3,
            NonIsolated(_) | RegularPoint | DegenerateSocle | NotHolomorphic | GenericityFailure { .. } | CrossCheck(_) => 1,
        }
    }
}
