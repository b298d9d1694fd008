use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime in [2, 2^31]")]
    InvalidPrime(u64),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("arity mismatch: expected {expected} coordinates, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("point {0} is not on the variety")]
    PointOffVariety(String),
    #[error("unknown case {0:?}")]
    UnknownCase(String),
    #[error("unknown plane {0:?}")]
    UnknownPlane(String),
    #[error("scan of {points} points exceeds the budget of {budget}")]
    BudgetExceeded { points: String, budget: u64 },
    #[error("matrix is singular (rank {rank} < {size})")]
    SingularMatrix { rank: usize, size: usize },
    #[error("Plücker relations fail at {0}")]
    NotDecomposable(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("linear forms are dependent")]
    DependentForms,
    #[error("form {form} does not vanish on plane {plane}")]
    PlaneViolation { form: String, plane: String },
    #[error("undeclared symbol {0:?}")]
    UndeclaredSymbol(String),
    #[error("{0}")]
    Ledger(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("config line {line}: {msg}")]
    Config { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
