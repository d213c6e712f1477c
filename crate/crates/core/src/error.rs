use thiserror::Error;

/// Every failure the geometry kernel can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("discriminant {0} is not squarefree")]
    NonSquarefreeDiscriminant(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different quadratic fields: sqrt({0}) and sqrt({1})")]
    MixedDiscriminants(u64, u64),
    #[error("integer {0} is too large to reduce to a squarefree discriminant")]
    DiscriminantTooLarge(String),
    #[error("cannot parse scalar literal `{0}`")]
    ParseScalar(String),
    #[error("cannot parse point literal `{0}`")]
    ParsePoint(String),

    #[error("arguments coincide")]
    CoincidentArguments,
    #[error("the zero triple is not a projective object")]
    ZeroTriple,
    #[error("incidence system has nullity {0}; the conic is not determined")]
    UnderdeterminedConic(usize),
    #[error("conic is degenerate")]
    DegenerateConic,
    #[error("conic center lies on the line at infinity")]
    CenterAtInfinity,
    #[error("point is not on the conic")]
    PointNotOnConic,
    #[error("conics do not induce the same involution on the line at infinity")]
    NoSharedInvolution,
    #[error("points are collinear")]
    CollinearTriple,
    #[error("point lies on the line at infinity")]
    PointAtInfinity,
    #[error("points are not collinear")]
    NotCollinear,
    #[error("matrix is singular")]
    SingularMatrix,

    #[error("point lies on a side of the reference triangle")]
    PointOnSideline,
    #[error("point lies on a side of the anticomplementary triangle")]
    PointOnAnticomplementarySide,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("axis of the affine reflection is undefined (point on a median)")]
    DegenerateAxis,
    #[error("internal invariant failed: {0}")]
    Internal(String),

    #[error("line does not meet the cubic in a single residual point")]
    LineNotMeetingCurveProperly,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("fiber over 5x = 1 is singular for the quartic model")]
    SingularFiber,
    #[error("exceptional fiber of the quartic/Weierstrass substitution")]
    ExceptionalFiber,

    #[error("point is not on the open arc")]
    OutsideArc,
    #[error("point coincides with a marked point of the arc")]
    MarkedPoint,
    #[error("sample count must be at least 1")]
    EmptySample,
}

pub type Result<T> = std::result::Result<T, Error>;
