//! Error type shared by every operation of the core crate.

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unsupported dimension {0}; expected 6 or 7")]
    UnsupportedDimension(usize),
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    Degree { expected: usize, found: usize },
    #[error("spinor is not of unit length")]
    NonUnitSpinor,
    #[error("spinor is zero")]
    ZeroSpinor,
    #[error("tensor is not totally antisymmetric")]
    NotAntisymmetric,
    #[error("jet is not orthogonal to its spinor in direction e{0}")]
    JetNotOrthogonal(usize),
    #[error("structure equations violate d² = 0 (Jacobi identity)")]
    Jacobi,
    #[error("consistency check failed: {0}")]
    Consistency(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = core::result::Result<T, Error>;
