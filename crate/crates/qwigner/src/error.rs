//! One error type for the whole crate. Computational failures map to exit
//! code 1 in the CLI; malformed requests to exit code 2.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum QError {
    #[error("exponent q^({twice}/2) not representable over base L={l}")]
    ExponentNotRepresentable { twice: i64, l: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("radicand mismatch: sqrt({left}) vs sqrt({right})")]
    RadicalMismatch { left: String, right: String },
    #[error("hypergeometric series does not terminate: no q^-N numerator parameter")]
    NonTerminating,
    #[error("denominator Pochhammer factor vanishes before the series terminates")]
    DenominatorPole,
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("negative radicand at the evaluation point")]
    NegativeRadicand,
    #[error("phase (-1)^({twice}/2) is not real: exponent must be an integer")]
    NonIntegerPhase { twice: i64 },
    #[error("malformed spins: {0}")]
    MalformedSpins(String),
    #[error("mixed computation contexts: L={left} vs L={right}")]
    ContextMismatch { left: u32, right: u32 },
    #[error("unsupported root system kind: {0}")]
    UnsupportedKind(String),
    #[error("sequence is not a permutation of the positive roots")]
    NotAPermutation,
    #[error("ordering is not normal")]
    NotNormal,
    #[error("root system too large for exhaustive enumeration ({0} positive roots)")]
    TooLarge(usize),
    #[error("invalid highest weight: components must be weakly decreasing")]
    InvalidHighestWeight,
    #[error("generator index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("Cartan denominator vanishes on an occurring weight space: {0}")]
    CartanPole(String),
    #[error("matrix element denominator vanishes: requested representation absent")]
    ZeroDenominator,
    #[error("module dimension bound exceeded: {dim} > {bound}")]
    BoundExceeded { dim: usize, bound: usize },
    #[error("invalid su(3) label: {0}")]
    InvalidLabel(String),
    #[error("triangular system for adjoint projectors is singular: {0}")]
    SingularTriangularSystem(String),
    #[error("symmetrized Cartan matrix is singular")]
    SingularCartan,
    #[error("{0}")]
    Other(String),
}

pub type QResult<T> = Result<T, QError>;
