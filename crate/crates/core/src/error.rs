use thiserror::Error;

use crate::enriques::TypeError;
use crate::gcomplex::{ComplexError, Violation};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("differentials do not compose to zero")]
    NotAComplex,

    #[error("dimension mismatch: {0}")]
    Shape(String),

    #[error("vector is not a cycle of the outgoing differential")]
    NotACycle,

    #[error("chain map does not carry boundaries to boundaries")]
    NotAChainMap,

    #[error("homomorphism does not respect torsion at source generator {generator}")]
    TorsionViolation { generator: usize },

    #[error("matrix is not an involution of the module")]
    NotAnInvolution,

    #[error(transparent)]
    Complex(#[from] ComplexError),

    #[error("complex fails validation: {0}")]
    Invalid(#[from] Violation),

    #[error(transparent)]
    Type(#[from] TypeError),

    #[error("sequence is not exact at {node}")]
    NotExact { node: String },

    #[error("precondition not met: {0}")]
    Precondition(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}
