use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("label table malformed: {0}")]
    LabelShape(String),
    #[error("graphs have different shapes: {0}")]
    ShapeMismatch(String),
    #[error("difference graph has {edges} edges, exact vertex cover is capped at {cap}")]
    VertexCoverCap { edges: usize, cap: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    #[error("LP solver failed: {0}")]
    LpFailure(String),
    #[error("universe too large: {0}")]
    UniverseTooLarge(String),
    #[error("graph is not a member of the enumerated universe")]
    NotInUniverse,
    #[error("interval intersection empty while extending to dataset {0}; distances are not a metric")]
    EmptyIntersection(usize),
    #[error("privacy budget exhausted: requested (eps={requested_epsilon}, delta={requested_delta}), remaining (eps={remaining_epsilon}, delta={remaining_delta})")]
    BudgetExhausted { requested_epsilon: f64, requested_delta: f64, remaining_epsilon: f64, remaining_delta: f64 },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// True for failures of a computation on valid input (solver
    /// non-convergence, oracle caps, exhausted budget) as opposed to bad
    /// input or usage.
    pub fn is_computational(&self) -> bool {
        matches!(
            self,
            Error::VertexCoverCap { .. }
                | Error::LpFailure(_)
                | Error::UniverseTooLarge(_)
                | Error::EmptyIntersection(_)
                | Error::BudgetExhausted { .. }
        )
    }
}
