use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("host graph is disconnected: vertices {0} and {1} have no path")]
    DisconnectedHost(usize, usize),

    #[error("edge ({u}, {v}) has non-positive weight {weight}")]
    NonPositiveWeight { u: usize, v: usize, weight: f64 },

    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),

    #[error("invalid metric: {0}")]
    InvalidMetric(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("no feasible dilation found below {limit:e}")]
    NoFeasibleT { limit: f64 },

    #[error("brute force needs {combinations} subsets, above the limit of {limit}")]
    TooLarge { combinations: u128, limit: u128 },

    #[error("source graph has girth {girth:?}, need at least {required}")]
    GirthTooSmall {
        girth: Option<usize>,
        required: usize,
    },

    #[error("set {0} is empty")]
    EmptySet(usize),

    #[error("element {0} belongs to no set")]
    UncoveredElement(usize),

    #[error("girth lemma violated: graph with {vertices} vertices and {edges} edges has girth {girth:?}")]
    LemmaViolation {
        vertices: usize,
        edges: usize,
        girth: Option<usize>,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("verification failed: {0}")]
    VerificationFailure(String),

    #[error("malformed instance: {0}")]
    Instance(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
