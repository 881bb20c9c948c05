use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not top-degree: monomial of degree {degree} in rank {rank}")]
    NotTopDegree { degree: usize, rank: usize },
    #[error("monomial not a basis")]
    NotABasis,
    #[error("repeated character in monomial")]
    RepeatedCharacter,
    #[error("zero character")]
    ZeroCharacter,
    #[error("character has {got} coordinates, expected {expected}")]
    CharacterLength { expected: usize, got: usize },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("space mismatch: expected {expected}")]
    SpaceMismatch { expected: &'static str },
    #[error("flavor mismatch")]
    FlavorMismatch,
    #[error("resource limit exceeded: {what} (estimated {estimate})")]
    Resource { what: String, estimate: String },
    #[error("invalid polytope: {0}")]
    InvalidPolytope(String),
    #[error("non-simple sum: {0}")]
    NonSimpleSum(String),
    #[error("invalid coloring at vertices {0:?}")]
    InvalidColoring(Vec<usize>),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("non-orientable axial data")]
    NonOrientable,
    #[error("torus graph has no orientation")]
    MissingOrientation,
    #[error("polynomial is not in ker d: {0}")]
    NotInKernel(String),
    #[error("mod-2 reduction is not square-free")]
    NotSquareFree,
    #[error("integer overflow")]
    Overflow,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

impl Error {
    /// Stable machine-readable code used in CLI error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotTopDegree { .. } => "not-top-degree",
            Error::NotABasis => "not-a-basis",
            Error::RepeatedCharacter => "repeated-character",
            Error::ZeroCharacter => "zero-character",
            Error::CharacterLength { .. } => "character-length",
            Error::RankMismatch(..) => "rank-mismatch",
            Error::SpaceMismatch { .. } => "space-mismatch",
            Error::FlavorMismatch => "flavor-mismatch",
            Error::Resource { .. } => "resource",
            Error::InvalidPolytope(_) => "invalid-polytope",
            Error::NonSimpleSum(_) => "non-simple-sum",
            Error::InvalidColoring(_) => "invalid-coloring",
            Error::InvalidGraph(_) => "invalid-graph",
            Error::NonOrientable => "non-orientable",
            Error::MissingOrientation => "missing-orientation",
            Error::NotInKernel(_) => "not-in-kernel",
            Error::NotSquareFree => "not-square-free",
            Error::Overflow => "overflow",
            Error::Invalid(_) => "invalid-input",
            Error::Malformed(_) => "malformed",
        }
    }
}
