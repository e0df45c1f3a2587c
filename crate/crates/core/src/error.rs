use thiserror::Error;

/// Why a list of addresses fails to be a partition of Cantor space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionFault {
    /// Two cells intersect.
    Overlap,
    /// The cells are disjoint but do not cover the space.
    Gap,
}

impl std::fmt::Display for PartitionFault {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PartitionFault::Overlap => f.write_str("overlap"),
            PartitionFault::Gap => f.write_str("gap"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("arity must be at least 2, got {0}")]
    BadArity(usize),

    #[error("addresses {0} and {1} are not incomparable")]
    NotIncomparable(String, String),

    #[error("not a partition ({reason})")]
    NotAPartition { reason: PartitionFault },

    #[error("empty cell list")]
    EmptyPartition,

    #[error("domain and codomain have different cell counts ({0} vs {1})")]
    CellCountMismatch(usize, usize),

    #[error("dimension {d} out of range for arity {n}")]
    BadDimension { d: usize, n: usize },

    #[error("support address {0} does not satisfy the coordinate length requirements")]
    BadSupportAddress(String),

    #[error("bad parameters: {0}")]
    BadParameters(String),

    #[error("not a bijection on {0} points")]
    NotABijection(usize),

    #[error("cannot split the complement of {0} targets into basic open sets along a common coordinate")]
    ComplementUnsupported(usize),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("{0}")]
    Json(String),

    #[error("while evaluating {path}: {msg}")]
    Eval { path: String, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
