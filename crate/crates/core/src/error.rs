use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("box {dims:?} is incompatible with class {class}: {reason}")]
    Shape {
        class: String,
        dims: [u32; 3],
        reason: String,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("resource limit exceeded: {what} (budget {budget})")]
    ResourceLimit { what: String, budget: u64 },

    #[error("division by zero in {context} at index {index}")]
    DivisionByZero { context: String, index: usize },

    #[error("need at least {needed} samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("internal consistency error: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
