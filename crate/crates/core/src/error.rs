use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operands live in different rings")]
    RingMismatch,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("degree {degree} is outside 0..={top}")]
    DegreeOutOfRange { degree: usize, top: usize },

    #[error("expected a homogeneous class of degree {expected}, found {found}")]
    WrongDegree { expected: usize, found: String },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("map is not a ring homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error("invalid twistor base: {0}")]
    InvalidBase(String),

    #[error("incompatible branches: {0}")]
    IncompatibleBranches(String),

    #[error("invalid surface: {0}")]
    InvalidSurface(String),

    #[error("component pair does not satisfy the matching condition: {0}")]
    Unmatched(String),

    #[error("codimension mismatch: {0} vs {1}")]
    CodimensionMismatch(usize, usize),

    #[error("bundle restriction to the double locus is not trivial; H^2 count is only an inequality")]
    RestrictionNotTrivial,

    #[error("phase {0} does not have unit modulus")]
    NonUnitPhase(String),

    #[error("negative squared modulus {0}")]
    NegativeModulus(String),

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("zero vector is not a projective point")]
    ZeroVector,

    #[error("invalid number literal {0:?}")]
    InvalidNumber(String),

    #[error("unknown basis label {0:?}")]
    UnknownLabel(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
