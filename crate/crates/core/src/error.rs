use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("graph order {order} exceeds the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("illegal move: {0}")]
    IllegalMove(String),

    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("pairs are not disjoint: vertex {0} appears twice")]
    OverlappingPairs(usize),

    #[error("reference oracle refuses graphs of order {order} (cap {cap})")]
    OracleCap { order: usize, cap: usize },

    #[error("no optimal line exists: the scored player cannot win")]
    NoLine,

    #[error("inconsistent outcome: Dominator loses when starting but wins when Staller starts")]
    InconsistentOutcome,

    #[error("search budget of {secs} s exceeded")]
    BudgetExceeded { secs: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
