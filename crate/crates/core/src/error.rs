use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("field of order {p}^{m} exceeds the ceiling {ceiling}")]
    SizeExceeded { p: u64, m: u32, ceiling: u64 },
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: u64, b: u64 },
    #[error("no element of order {order} in a field of order {q}")]
    OrderUnavailable { order: u64, q: u64 },
    #[error("operation undefined on the zero element")]
    ZeroElement,
    #[error("element rep {rep} out of range for a field of order {q}")]
    InvalidElement { rep: u64, q: u64 },
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("generator does not divide x^{0} - 1")]
    NotADivisor(usize),
    #[error("generator is not monic")]
    NotMonic,
    #[error("degenerate code: {0}")]
    DegenerateCode(String),
    #[error("expected {expected} symbols, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("enumeration budget of {budget} messages exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("enumeration too large: {0}")]
    TooLarge(String),
    #[error("no gamma in the field solves 1 + gamma^2 n1 n2 = 0")]
    NoGammaExists,
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("{q} is not a quadratic residue modulo {n}")]
    QNotResidue { q: u64, n: u64 },
    #[error("sign vector {0:?} is not constant on the cyclotomic cosets")]
    NotInLambda(Vec<i8>),
    #[error("assumption violated: {0}")]
    AssumptionViolated(String),
    #[error("generator has {count} roots in class {class}, more than n - k = {limit}")]
    RootClassViolation {
        class: usize,
        count: usize,
        limit: usize,
    },
    #[error("encoder is not minimal basic: {0}")]
    NotMinimalBasic(String),
    #[error("block parameters n = {n}, r = {r} are not admissible for q = {q}")]
    NonCoprimeParams { n: u64, r: u64, q: u64 },
}
