use thiserror::Error;

use crate::planewave::Family;
use crate::symmetry::OperatorName;

/// Failure to parse a gamma expression. Positions are byte offsets.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character `{found}` at position {pos}")]
    UnexpectedChar { pos: usize, found: char },
    #[error("unknown identifier `{name}` at position {pos}")]
    UnknownIdentifier { pos: usize, name: String },
    #[error("expected {expected} at position {pos}, found {found}")]
    Syntax {
        pos: usize,
        expected: &'static str,
        found: String,
    },
    #[error("denominator must be a positive integer at position {pos}")]
    BadDenominator { pos: usize },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::UnexpectedChar { pos, .. }
            | ParseError::UnknownIdentifier { pos, .. }
            | ParseError::Syntax { pos, .. }
            | ParseError::BadDenominator { pos } => *pos,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("mass must be nonzero")]
    ZeroMass,
    #[error("energy sqrt({0}) is not representable in exact mode")]
    OffShellUnrepresentable(String),
    #[error("spinor denominator E{sign}m vanishes for {family}")]
    DegenerateSpinor { family: Family, sign: char },
    #[error("spin projection is only certified for momentum along the 3-axis (p1 = p2 = 0)")]
    TransverseMomentum,
    #[error(
        "{0} is not a chi-family state; the simultaneous sign flip applies to chi states only"
    )]
    NotChiFamily(Family),
    #[error("reinterpretation changed {0}; the flip must leave it invariant")]
    FlipNotInvariant(&'static str),
    #[error("{operator} maps {input} to a spinor matching no canonical plane-wave family")]
    UnsupportedFamily {
        operator: OperatorName,
        input: Family,
    },
    #[error("operator matrix is not invertible")]
    SingularOperator,
    #[error("velocity |beta| = {0} must be below 1")]
    Superluminal(String),
    #[error("Lorentz factor for beta = {0} is not representable in exact mode")]
    IrrationalBoost(String),
    #[error("rotation needs cos² + sin² = 1")]
    NotARotation,
    #[error("axis must be 1, 2 or 3, got {0}")]
    BadAxis(usize),
    #[error("matrix does not satisfy Λᵀ g Λ = g")]
    NotLorentz,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
