use thiserror::Error;

/// Errors raised by field construction, linear algebra, and code constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("field order {p}^{m} exceeds the supported maximum of 2^16")]
    FieldTooLarge { p: u32, m: u32 },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("no built-in modulus for GF({p}^{m})")]
    NoBuiltinModulus { p: u32, m: u32 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("element encoding {value} is out of range for a field of order {q}")]
    ElementOutOfRange { value: u32, q: u32 },
    #[error("zero has no multiplicative inverse")]
    DivisionByZero,
    #[error("operation needs a second operand")]
    MissingOperand,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("enumeration of {count} items exceeds the guard of {limit}")]
    GuardExceeded { count: String, limit: u64 },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("empty code")]
    EmptyCode,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("search budget exhausted before certification: {0}")]
    BudgetExhausted(String),
    #[error("malformed document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
