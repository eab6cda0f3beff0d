//! Crate-wide error type.
//!
//! Constructions report degeneracies as errors; the scenario runner treats
//! them as rejections and redraws the instance, so most variants never
//! surface to callers of the verification API.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("all polynomial coefficients are zero")]
    AllCoefficientsZero,
    #[error("no sign change over the bracket")]
    NoSignChange,
    #[error("root finder exceeded {0} iterations")]
    MaxIterationsExceeded(u32),
    #[error("coincident points")]
    CoincidentPoints,
    #[error("parallel lines")]
    ParallelLines,
    #[error("collinear points")]
    CollinearPoints,
    #[error("concentric circles")]
    ConcentricCircles,
    #[error("equal circles")]
    EqualCircles,
    #[error("identical objects")]
    IdenticalObjects,
    #[error("inversion center lies on the object")]
    InvertThroughCenter,
    #[error("degenerate triangle")]
    DegenerateTriangle,
    #[error("fermat point undefined")]
    FermatUndefined,
    #[error("point on a side line")]
    PointOnSideline,
    #[error("conjugate at infinity")]
    ConjugateAtInfinity,
    #[error("degenerate pedal triangle")]
    DegeneratePedal,
    #[error("cevian parallel to the opposite side")]
    CevianParallel,
    #[error("euler line undefined for an equilateral triangle")]
    EquilateralEulerUndefined,
    #[error("point not on the circumcircle")]
    PointNotOnCircumcircle,
    #[error("degenerate quadrilateral")]
    DegenerateQuadrilateral,
    #[error("collinear input")]
    CollinearInput,
    #[error("no solution")]
    NoSolution,
    #[error("ill conditioned system")]
    IllConditioned,
    #[error("degenerate input")]
    DegenerateInput,
    #[error("invalid parameter")]
    InvalidParameter,
    #[error("identical conics")]
    IdenticalConics,
    #[error("chord misses the conic")]
    ChordMissesConic,
    #[error("conics do not share the focus")]
    NotSharingFocus,
    #[error("unexpected intersection count")]
    WrongIntersectionCount,
    #[error("missing internal tangents")]
    MissingInternalTangents,
    #[error("missing common tangents")]
    MissingTangents,
    #[error("tangency violated")]
    TangencyViolated,
    #[error("ambiguous selection")]
    AmbiguousSelection,
    #[error("parabola has a single finite focus")]
    ParabolaFocusPair,
    #[error("arity mismatch for relation")]
    ArityMismatch,
    #[error("generation exhausted after {0} attempts")]
    GenerationExhausted(u32),
    #[error("unknown scenario id {0}")]
    UnknownScenario(String),
}

pub type Result<T> = std::result::Result<T, Error>;
