use thiserror::Error;

/// Errors raised by the library. Mathematical check failures are reported
/// as data in [`crate::verify::CaseReport`], never through this type.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("unsupported Weyl type for this operation: {0}")]
    UnsupportedType(String),
    #[error("weight {weight} is not dominant for {context}")]
    NotDominant { weight: String, context: String },
    #[error("invalid label for {group}: {reason}")]
    InvalidLabel { group: String, reason: String },
    #[error("parameters {params} are outside Disc for case {case}: {reason}")]
    InvalidParams { case: String, params: String, reason: String },
    #[error("unknown case identifier: {0}")]
    UnknownCase(String),
    #[error("unknown generator symbol {symbol} for case {case}")]
    UnknownSymbol { case: String, symbol: String },
    #[error("no Hilbert-series model stored for case {0}")]
    NoModel(String),
    #[error("insufficient sample: {points} points for {columns} monomials")]
    InsufficientSample { points: usize, columns: usize },
    #[error("degree bound {bound} is below the degree {degree} of the input")]
    DegreeBound { bound: u32, degree: u32 },
    #[error("decomposition not found within degree bound {bound}; failing input {monomial}")]
    DecompositionNotFound { bound: u32, monomial: String },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
