use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("trees with zero edges are not supported")]
    EmptyTree,

    #[error("invalid walk: {0}")]
    InvalidWalk(String),

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("invalid labeling: {0}")]
    InvalidLabels(String),

    #[error("invalid encoding: {0}")]
    InvalidEncoding(String),

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("label process violates the predecessor conditions: {0}")]
    InvalidLabelProcess(String),

    #[error("tree is not well-labeled")]
    NotWellLabeled,

    #[error("invalid marks: {0}")]
    InvalidMarks(String),

    #[error("malformed map: {0}")]
    MalformedMap(String),

    #[error("not a quadrangulation: {0}")]
    NotAQuadrangulation(String),

    #[error("map is not connected")]
    Disconnected,

    #[error("map is not planar (Euler characteristic {0})")]
    NotPlanar(i64),

    #[error("inadmissible gluing: {0}")]
    InadmissibleGluing(String),

    #[error("grid mismatch: {left} vs {right}")]
    GridMismatch { left: usize, right: usize },

    #[error("rerooting point {0} is not on the grid")]
    OffGrid(f64),

    #[error("invalid snake path: {0}")]
    InvalidSnake(String),

    #[error("size {n} exceeds the supported bound {max} for {what}")]
    TooLarge { n: usize, max: usize, what: &'static str },

    #[error("invalid edge-length model: {0}")]
    InvalidModel(String),

    #[error("invalid experiment configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown experiment `{0}`")]
    UnknownExperiment(String),

    #[error("empty sample")]
    EmptySample,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
