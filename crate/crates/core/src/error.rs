use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not a prime below 2^31")]
    InvalidField(u64),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("division leaves a nonzero remainder")]
    InexactDivision,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("generators have different degrees ({0:?})")]
    NotEquigenerated(Vec<u32>),
    #[error("a degree-0 syzygy exists, so the generators are not minimal")]
    NotMinimal,
    #[error("ideal has height {height}, expected 2")]
    NotHeightTwo { height: usize },
    #[error("generators are not the signed maximal minors of the syzygy matrix (row {row})")]
    MinorMismatch { row: usize },
    #[error("only {s} syzygies for r = {r}; need s >= r")]
    TooFewSyzygies { r: usize, s: usize },
    #[error("degree {d} differs from the syzygy degree sum {sum}")]
    DegreeMismatch { d: u64, sum: u64 },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("Hilbert series difference is not a polynomial; the quotient does not have finite length")]
    NonFiniteLength,
    #[error("image has affine dimension {found}, expected {expected}")]
    DimensionAnomaly { expected: usize, found: usize },
    #[error("image degree {deg_y} does not divide e_r = {e_r}")]
    NonIntegralDegree { deg_y: u64, e_r: u64 },
    #[error("no trial produced a zero-dimensional fiber")]
    AllTrialsDegenerate,
    #[error("operation requires a prime coefficient field")]
    NotPrimeField,
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
