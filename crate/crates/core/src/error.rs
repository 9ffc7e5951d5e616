use thiserror::Error;

use crate::semifield::Flavor;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the top sentinel 0^- cannot take part in semifield arithmetic")]
    TopOperand,
    #[error("the semifield zero has no multiplicative inverse")]
    InverseOfZero,
    #[error("{value} is not an element of the {flavor} carrier")]
    OutOfCarrier { flavor: Flavor, value: String },
    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),
    #[error("unknown semifield {0:?}")]
    UnknownFlavor(String),
    #[error("matrix must have at least one row and one column")]
    Empty,
    #[error("matrix rows have unequal lengths")]
    Ragged,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operands live in different semifields ({0} vs {1})")]
    FlavorMismatch(Flavor, Flavor),
    #[error("system data may not contain the top sentinel")]
    TopEntry,
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("permutation enumeration limited to n <= {limit}, got n = {n}")]
    TooLarge { n: usize, limit: usize },
    #[error("det_eps(A) is the semifield zero")]
    SingularDeterminant,
    #[error("right-hand side is not regular: entry {index} is zero")]
    IrregularRhs { index: usize },
    #[error("column scale factor {index} is zero")]
    ZeroScaleFactor { index: usize },
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("diagonal entry {index} is zero")]
    ZeroDiagonal { index: usize },
    #[error("variables {0:?} are unbounded; no maximal solution exists")]
    UnboundedVariables(Vec<usize>),
    #[error("candidate vector does not solve the system")]
    NotASolution,
}
