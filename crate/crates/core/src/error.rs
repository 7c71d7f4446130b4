use thiserror::Error;

/// Errors raised by constructions and measurements in the hyperbolic plane.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("point ({x}, {y}) is not strictly inside the model disk")]
    OutsideDisk { x: f64, y: f64 },
    #[error("ideal endpoints coincide (theta = {theta})")]
    CoincidentIdealPoints { theta: f64 },
    #[error("point is not on the geodesic (distance {distance:e})")]
    PointNotOnGeodesic { distance: f64 },
    #[error("ray is degenerate: its target coincides with its origin")]
    DegenerateRay,
    #[error("lines intersect inside the disk")]
    LinesIntersect,
    #[error("lines are asymptotically parallel")]
    LinesAsymptotic,
    #[error("line does not meet the body (gap {gap:e})")]
    LineMissesBody { gap: f64 },
    #[error("line is not a supporting line at the given point (crossing depth {depth:e})")]
    NotSupporting { depth: f64 },
    #[error("base point lies outside the body")]
    BaseOutsideBody,
    #[error("no opposite boundary point found for sample {index}")]
    NoOppositeFound { index: usize },
    #[error("boundary sample {index} is a corner; the tangent is undefined")]
    CornerPoint { index: usize },
    #[error("segment width branch {branch} does not match angle {angle} for length {length}")]
    BranchMismatch {
        branch: &'static str,
        angle: f64,
        length: f64,
    },
    #[error("point is not on the boundary of the body (distance {distance:e})")]
    PointNotOnBoundary { distance: f64 },
    #[error("argument out of range: {0}")]
    ArgumentOutOfRange(String),
    #[error("body is not declared h-convex")]
    NotHConvex,
    #[error("invalid body: {0}")]
    InvalidBody(String),
}

pub type Result<T, E = GeometryError> = std::result::Result<T, E>;
