use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero is not allowed here: {0}")]
    Zero(&'static str),
    #[error("discriminant is zero")]
    ZeroDiscriminant,
    #[error("-d = {0} is a perfect square")]
    SquareDiscriminant(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("ramified prime {p}: polynomial is not squarefree mod p")]
    RamifiedPrime { p: String },
    #[error("p-adic search at p = {p} passed depth cap {cap}")]
    DepthCapExceeded { p: String, cap: u32 },
    #[error("arithmetic overflow in fixed-width scalar")]
    Overflow,
    #[error("unexpected Frobenius pattern {degrees:?} at p = {p}")]
    UnexpectedPattern { p: String, degrees: Vec<usize> },
    #[error("config line {line}: {msg}")]
    Config { line: usize, msg: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
