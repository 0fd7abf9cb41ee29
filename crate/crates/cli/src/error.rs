use hbfiber_core::AlgebraError;
use thiserror::Error;

use crate::parse::ParseError;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const IO: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const HYPOTHESIS: i32 = 3;
    pub const DISAGREEMENT: i32 = 4;
    pub const ANOMALY: i32 = 5;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => exit::IO,
            CliError::Parse(_) | CliError::Usage(_) => exit::PARSE,
            CliError::Algebra(e) => algebra_exit_code(e),
        }
    }

    /// Stable identifier for the JSON report.
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Io(_) => "IoError",
            CliError::Parse(e) => e.code(),
            CliError::Usage(_) => "UsageError",
            CliError::Algebra(e) => algebra_code(e),
        }
    }
}

pub fn algebra_exit_code(e: &AlgebraError) -> i32 {
    use AlgebraError::*;
    match e {
        NotHeightTwo { .. }
        | MinorMismatch { .. }
        | TooFewSyzygies { .. }
        | DegreeMismatch { .. }
        | NotMinimal
        | NotEquigenerated(_)
        | NotHomogeneous
        | UnitIdeal => exit::HYPOTHESIS,
        InvalidParameters(_) | InvalidField(_) | NotPrimeField => exit::PARSE,
        _ => exit::ANOMALY,
    }
}

pub fn algebra_code(e: &AlgebraError) -> &'static str {
    use AlgebraError::*;
    match e {
        InvalidField(_) => "InvalidField",
        LengthMismatch { .. } => "LengthMismatch",
        RingMismatch => "RingMismatch",
        InexactDivision => "InexactDivision",
        ZeroPolynomial => "ZeroPolynomial",
        NotHomogeneous => "NotHomogeneous",
        UnitIdeal => "UnitIdeal",
        NotEquigenerated(_) => "NotEquigenerated",
        NotMinimal => "NotMinimal",
        NotHeightTwo { .. } => "NotHeightTwo",
        MinorMismatch { .. } => "MinorMismatch",
        TooFewSyzygies { .. } => "TooFewSyzygies",
        DegreeMismatch { .. } => "DegreeMismatch",
        InvalidParameters(_) => "InvalidParameters",
        NonFiniteLength => "NonFiniteLength",
        DimensionAnomaly { .. } => "DimensionAnomaly",
        NonIntegralDegree { .. } => "NonIntegralDegree",
        AllTrialsDegenerate => "AllTrialsDegenerate",
        NotPrimeField => "NotPrimeField",
    }
}
