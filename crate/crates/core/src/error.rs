use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix must be 2x2 (got {rows}x{cols})")]
    Not2x2 { rows: usize, cols: usize },
    #[error("matrix is not unimodular (det = {det})")]
    NotUnimodular { det: String },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{what} of size {size} exceeds cap {cap}")]
    SizeCapExceeded { what: &'static str, size: u128, cap: usize },
    #[error("compound order {k} invalid for a {n}x{n} matrix")]
    BadCompoundOrder { k: usize, n: usize },
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("zero exponent at position {position}")]
    ExponentZero { position: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: usize, right: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus must be 0 or at least 2 (got {0})")]
    BadModulus(u64),
    #[error("could not factor {0} into 64-bit primes")]
    PrimeTooLarge(String),
}
