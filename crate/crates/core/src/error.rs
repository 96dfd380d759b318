use thiserror::Error;

/// Errors raised by the engine. Variant names double as the stable error
/// codes printed by the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ZeroVector: the zero vector has no primitive direction")]
    ZeroVector,
    #[error("NotAFan: {0}")]
    NotAFan(String),
    #[error("NotSurjective: projection does not map the lattice onto the target")]
    NotSurjective,
    #[error("DimMismatch: expected dimension {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("NotBalanced: {0}")]
    NotBalanced(String),
    #[error("NotContinuous: {0}")]
    NotContinuous(String),
    #[error("NotADivisor: {0}")]
    NotADivisor(String),
    #[error("NotConvex: wall-crossing data does not assemble into a convex polytope")]
    NotConvex,
    #[error("NotAMatroid: {0}")]
    NotAMatroid(String),
    #[error("UnknownElement: {0}")]
    UnknownElement(String),
    #[error("RankDeficient: matroid rank {rank} is smaller than {needed}")]
    RankDeficient { rank: usize, needed: usize },
    #[error("NotZeroDimensional: complete intersection has codimension {codim} in dimension {dim}")]
    NotZeroDimensional { codim: usize, dim: usize },
    #[error("NotABasis: {0}")]
    NotABasis(String),
    #[error("NotPrimitive: vector is not primitive")]
    NotPrimitive,
    #[error("DegenerateEliminant: tropical complete intersection collapsed at step {0}")]
    DegenerateEliminant(usize),
    #[error("GenusIndexOutOfRange: p = {p} outside 0..={max}")]
    GenusIndexOutOfRange { p: i64, max: i64 },
    #[error("MissingWitness: level iii certificate needs a witness cycle")]
    MissingWitness,
    #[error("NotComplementary: dimensions {0} and {1} do not add up to the ambient dimension")]
    NotComplementary(usize, usize),
    #[error("NotInteresting: {0}")]
    NotInteresting(String),
    #[error("OrderNotGeneric: order values must be pairwise distinct")]
    OrderNotGeneric,
    #[error("NotSchonData: {0}")]
    NotSchonData(String),
    #[error("DegenerateSimplices: {0}")]
    DegenerateSimplices(String),
    #[error("DuplicateId: {0}")]
    DuplicateId(String),
    #[error("Schema: {path}: {message}")]
    Schema { path: String, message: String },
    #[error("Io: {0}")]
    Io(String),
    #[error("InternalError: {0}")]
    Internal(String),
}

impl Error {
    /// Short stable code, e.g. `"NotAFan"`.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroVector => "ZeroVector",
            Error::NotAFan(_) => "NotAFan",
            Error::NotSurjective => "NotSurjective",
            Error::DimMismatch { .. } => "DimMismatch",
            Error::NotBalanced(_) => "NotBalanced",
            Error::NotContinuous(_) => "NotContinuous",
            Error::NotADivisor(_) => "NotADivisor",
            Error::NotConvex => "NotConvex",
            Error::NotAMatroid(_) => "NotAMatroid",
            Error::UnknownElement(_) => "UnknownElement",
            Error::RankDeficient { .. } => "RankDeficient",
            Error::NotZeroDimensional { .. } => "NotZeroDimensional",
            Error::NotABasis(_) => "NotABasis",
            Error::NotPrimitive => "NotPrimitive",
            Error::DegenerateEliminant(_) => "DegenerateEliminant",
            Error::GenusIndexOutOfRange { .. } => "GenusIndexOutOfRange",
            Error::MissingWitness => "MissingWitness",
            Error::NotComplementary(..) => "NotComplementary",
            Error::NotInteresting(_) => "NotInteresting",
            Error::OrderNotGeneric => "OrderNotGeneric",
            Error::NotSchonData(_) => "NotSchonData",
            Error::DegenerateSimplices(_) => "DegenerateSimplices",
            Error::DuplicateId(_) => "DuplicateId",
            Error::Schema { .. } => "Schema",
            Error::Io(_) => "Io",
            Error::Internal(_) => "InternalError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
