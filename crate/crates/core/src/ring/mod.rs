//! Finitely presented graded-commutative F2-algebras.

mod construct;
mod element;
mod monomial;
mod parse;
mod presentation;

use thiserror::Error;

pub use construct::RingBuilder;
pub use element::RingElement;
pub use monomial::Monomial;
pub use parse::parse_presentation;
pub use presentation::{GradedGenerator, RingPresentation, RuleOrder};

use crate::syntax::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("line {line}: {source}")]
    AtLine { line: usize, source: Box<RingError> },
    #[error("duplicate generator '{0}'")]
    DuplicateGenerator(String),
    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),
    #[error("generator '{0}' must have positive degree")]
    ZeroDegree(String),
    #[error("{what} is not homogeneous of degree {expected}")]
    NotHomogeneous { what: String, expected: u32 },
    #[error("power rule for '{generator}' needs exponent >= 2, got {exponent}")]
    RuleExponent { generator: String, exponent: u32 },
    #[error("power rule for '{generator}' may only use earlier generators and lower powers of '{generator}'")]
    RuleOrder { generator: String },
    #[error("generator '{0}' already has a power rule")]
    DuplicateRule(String),
    #[error("Sq{i} on '{generator}' is outside 1..={degree}")]
    SqIndexOutOfRange { generator: String, i: u32, degree: u32 },
    #[error("Sq{i} on '{generator}' declared twice")]
    DuplicateSqEntry { generator: String, i: u32 },
    #[error("top Steenrod square of '{0}' does not equal its square")]
    SqTopMismatch(String),
    #[error("'topdeg' must precede every 'cover' line")]
    TopDegreeAfterCover,
    #[error("elements belong to different rings")]
    MismatchedRing,
    #[error("monomial is not in normal form")]
    NonNormalMonomial,
    #[error("expected {expected} exponents, got {got}")]
    ExponentLength { expected: usize, got: usize },
    #[error("ring has an infinite basis (no top degree and some generator without a power rule)")]
    InfiniteBasis,
}

impl RingError {
    pub(crate) fn at_line(self, line: usize) -> RingError {
        match self {
            RingError::Parse(p) if p.line.is_none() => RingError::Parse(p.on_line(line, 0)),
            e @ (RingError::Parse(_) | RingError::AtLine { .. }) => e,
            e => RingError::AtLine { line, source: Box::new(e) },
        }
    }
}
