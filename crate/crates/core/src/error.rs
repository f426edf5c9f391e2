use std::fmt;

use thiserror::Error;

use crate::semiring::Element;

/// A single failed law together with the least witness found for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub law: &'static str,
    pub witness: Vec<Element>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.law, self.witness)
    }
}

fn list(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("axiom violation: {}", list(.violations))]
    AxiomViolation { violations: Vec<Violation> },

    #[error("zero and one must be distinct elements")]
    ZeroEqualsOne,

    #[error("size {size} exceeds the size cap of {cap}")]
    SizeCapExceeded { size: usize, cap: usize },

    #[error("operands belong to different parent structures")]
    ParentMismatch,

    #[error("{0:?} is not an ideal")]
    NotAnIdeal(crate::set::ElementSet),

    #[error("cancellation is only defined for nonzero ideals")]
    ZeroIdeal,

    #[error("invalid multiplicatively closed set: {0}")]
    InvalidMcSet(String),

    #[error("the multiplicatively closed set contains zero, so no ideal is disjoint from it")]
    EmptyFamily,

    #[error("the multiplicatively closed set contains zero; the ring of fractions collapses to a single element")]
    DegenerateLocalization,

    #[error("homomorphism violation: {}", list(.violations))]
    HomViolation { violations: Vec<Violation> },

    #[error("the ideal is not prime")]
    NotPrime,

    #[error("the ideal must be proper")]
    ImproperIdeal,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("no primary decomposition found; irreducible component {witness:?} is not primary")]
    NoPrimaryDecomposition { witness: crate::set::ElementSet },

    #[error("prime correspondence failed: {0}")]
    CorrespondenceFailure(String),

    #[error("local-global equivalence failed: {0}")]
    EquivalenceFailure(String),

    #[error("postcondition failed: {0}")]
    PostconditionFailed(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown element {0:?}")]
    UnknownElement(String),

    #[error("unknown proposition id {0:?}")]
    UnknownPropositionId(String),

    #[error("unknown gallery semiring {0:?}")]
    UnknownGallery(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
