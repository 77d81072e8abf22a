use thiserror::Error;

use crate::scalars::FieldSpec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Preconditions named by [`Error::PreconditionFailed`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precondition {
    NotAlternative,
    Associative,
    HypothesisNotHolding,
}

impl std::fmt::Display for Precondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Precondition::NotAlternative => "algebra is not alternative",
            Precondition::Associative => "algebra is associative",
            Precondition::HypothesisNotHolding => "hypothesis does not hold",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow in exact rational arithmetic")]
    Overflow,
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("invalid unit: {0}")]
    InvalidUnit(String),
    #[error("Cayley-Dickson parameter must be nonzero")]
    ZeroGamma,
    #[error("algebra has no unit")]
    NoUnit,
    #[error("expected a multiple of the unit, got a non-scalar value")]
    NotScalar,
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    #[error("zero is not a zero divisor")]
    ZeroElement,
    #[error("algebra is not alternative")]
    NotAlternative,
    #[error("precondition failed: {0}")]
    PreconditionFailed(Precondition),
    #[error("exhaustive enumeration requested over an infinite field or too large a space")]
    NotEnumerable,
}
