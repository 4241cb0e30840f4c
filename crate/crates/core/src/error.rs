use thiserror::Error;

/// Errors surfaced by curve construction, queries, and the clustering
/// pipeline.
#[derive(Debug, Error)]
pub enum PathletError {
    /// A curve parameter fell outside the domain `[1, n]`.
    #[error("parameter {value} outside curve domain [1, {n}]")]
    ParamOutOfDomain { value: f64, n: usize },

    /// An input coordinate was NaN or infinite.
    #[error("non-finite coordinate at point {index}")]
    NonFinite { index: usize },

    /// Points of one curve disagree on dimension.
    #[error("point {index} has dimension {got}, expected {expected}")]
    DimMismatch {
        index: usize,
        got: usize,
        expected: usize,
    },

    /// A curve needs at least one point.
    #[error("curve must contain at least one point")]
    EmptyCurve,

    /// `ell` must allow a reference segment of at least two vertices.
    #[error("ell is {ell}, must be at least 2")]
    EllTooSmall { ell: usize },

    /// `delta` must be a finite non-negative distance.
    #[error("delta is {delta}, must be finite and non-negative")]
    InvalidDelta { delta: f64 },

    /// A reachability query started from a point inside an obstacle.
    #[error("query point ({x}, {y}) lies in the forbidden region")]
    PointInObstacle { x: f64, y: f64 },

    /// The greedy cover stopped making progress before covering the curve.
    #[error("clustering stalled with {} uncovered intervals", uncovered.len())]
    Stalled {
        uncovered: Vec<crate::geom::ParamInterval>,
    },
}
