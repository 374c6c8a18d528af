use thiserror::Error;

/// Failure to read a word or matrix from text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {found:?} at position {position}")]
    UnexpectedChar { position: usize, found: char },
    #[error("unexpected end of input at position {position}")]
    UnexpectedEnd { position: usize },
    #[error("zero exponent at position {position}")]
    ZeroExponent { position: usize },
    #[error("exponent out of range at position {position}")]
    ExponentOverflow { position: usize },
    #[error("unbalanced parenthesis at position {position}")]
    UnbalancedParen { position: usize },
    #[error("expected 9 integers for a 3x3 matrix, found {found}")]
    MatrixArity { found: usize },
    #[error("invalid integer {token:?}")]
    BadInteger { token: String },
    #[error("line {line}: {message}")]
    Script { line: usize, message: String },
}

/// Errors from word rewriting and matrix algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("rule {rule} ({direction}) does not match at unit position {position}")]
    NoMatch {
        rule: String,
        direction: String,
        position: usize,
    },
    #[error("rule {rule}: sides have different images under the homology representation")]
    UnsoundRule { rule: String },
    #[error("matrix is not unimodular (determinant {det})")]
    NotUnimodular { det: String },
    #[error("matrix is not in SL2(Z) (determinant {det})")]
    NotSl2 { det: String },
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("moduli differ: {0} vs {1}")]
    ModulusMismatch(u32, u32),
}

/// Which condition of the image characterisation a matrix violates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("third column must vanish above the corner, found ({0}, {1})")]
    ThirdColumn(String, String),
    #[error("corner entry must be +1 or -1, found {0}")]
    Corner(String),
    #[error("upper-left block must have determinant 1, found {0}")]
    BlockDeterminant(String),
}

/// Reasons a matrix is outside the image of the liftable subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MembershipError {
    #[error("not in the image of Mod(S_1,2): {0}")]
    Shape(#[from] ShapeError),
    #[error("offset vector ({m}, {n}) is not in {k}Z x {k}Z")]
    Offset { m: String, n: String, k: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("generators have different moduli ({0} vs {1})")]
    ModulusMismatch(u32, u32),
    #[error("generator {index} is not invertible modulo {modulus}")]
    NotInvertible { index: usize, modulus: u32 },
    #[error("modulus {0} is too large to enumerate")]
    ModulusTooLarge(u32),
    #[error("closure needs at least one generator")]
    NoGenerators,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Membership(#[from] MembershipError),
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error("cover degree must be at least 2, got {0}")]
    BadDegree(u32),
    #[error("reduced generating sets exist only for k = 2, 3 (got {0})")]
    UnsupportedReduced(u32),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
