use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("degenerate polygon: {0}")]
    Degenerate(String),
    #[error("polygon is not simple: edges {0} and {1} intersect")]
    NotSimple(usize, usize),
    #[error("point ({0}) is not on the polygon boundary")]
    NotOnBoundary(String),
    #[error("point ({0}) lies outside the polygon")]
    PointOutside(String),
    #[error("ray leaves the polygon at its origin")]
    RayExitsImmediately,
    #[error("point ({0}) is not a vertex of the pocket")]
    NotPocketVertex(String),
    #[error("no witness on the path sees pocket vertex ({0})")]
    NoWitness(String),
    #[error("path segment {0} leaves the polygon")]
    PathOutside(usize),
    #[error("path has no waypoints")]
    EmptyPath,
    #[error("subpolygon after removing essential pockets is disconnected ({0} components)")]
    QDisconnected(usize),
    #[error("polygon has no essential cuts")]
    NoEssentialCuts,
    #[error("no polygon satisfied the generator constraints after {0} attempts")]
    GenerationExhausted(usize),
    #[error("cut cannot be avoided while hitting the remaining essential cuts")]
    CannotAvoid,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
