use thiserror::Error;

/// Errors raised by the quotient engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at token {token:?}: {reason}")]
    Syntax { token: String, reason: String },

    #[error("generator {generator} is out of range for {n} strands")]
    IndexOutOfRange { generator: String, n: usize },

    #[error("strand counts differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("element is not pure (its permutation is {perm})")]
    NotPure { perm: String },

    #[error("permutations differ: element has {element}, base has {base}")]
    FiberMismatch { element: String, base: String },

    #[error("{perm} does not commute with {theta}")]
    NotInCentralizer { perm: String, theta: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
