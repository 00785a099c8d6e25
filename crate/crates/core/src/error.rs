use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division has a nonzero remainder")]
    NotDivisible,

    #[error("cannot specialize q to zero")]
    ZeroSpecialization,

    #[error("matrix dimensions differ: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },

    #[error("determinant {det} is not a unit of Z[q, q^-1]")]
    NotInvertibleOverRing { det: String },

    #[error("free group ranks differ: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("image of x{index} is not a conjugate of a generator")]
    NotConjugating { index: usize },

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("generator index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
}
