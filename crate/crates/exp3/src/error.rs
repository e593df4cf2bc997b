use thiserror::Error;

/// Crate-wide error type. Variants name the contract that was violated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("non-finite component passed to a constructor")]
    NonFinite,
    #[error("basis vectors are linearly dependent (or too close to it)")]
    DegenerateInput,
    #[error("triangle vertices are collinear")]
    CollinearVertices,
    #[error("zero vector has no direction")]
    ZeroVector,
    #[error("a circle subset needs at least one angle")]
    EmptyInput,
    #[error("a circle subset holds at most three angles")]
    TooManyPoints,
    #[error("projective angles are not pairwise distinct")]
    NotDistinct,
    #[error("triangle has an angle exceeding a right angle")]
    ObtuseTriangle,
    #[error("degenerate triangle shape must have exactly one zero side")]
    InvalidDegenerate,
    #[error("parameter out of admissible range")]
    OutOfRange,
    #[error("both Eisenstein values vanish; no sphere representative")]
    BothZero,
    #[error("point coincides with the projection pole")]
    PoleHit,
    #[error("polyline violates closed-curve requirements: {0}")]
    InvalidPolyline(&'static str),
    #[error("diagram has more than {max} crossings ({got})")]
    TooManyCrossings { max: usize, got: usize },
    #[error("no generic projection direction found in {0} attempts")]
    NoGenericDirection(usize),
    #[error("diagram is not a knot diagram (bracket exponents not divisible by 4)")]
    NonKnotDiagram,
    #[error("inconsistent diagram data: {0}")]
    BadDiagram(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
