use std::fmt;

use thiserror::Error;

/// A single reason an instance fails validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NonpositiveC2 { edge: usize, c2: i64 },
    Disconnected,
    SelfLoop { edge: usize },
    ParallelEdge { first: usize, second: usize },
    BadVertexId { edge: usize, vertex: usize },
    NoVertices,
}

impl Violation {
    pub fn code(&self) -> &'static str {
        match self {
            Violation::NonpositiveC2 { .. } => "NONPOSITIVE_C2",
            Violation::Disconnected => "DISCONNECTED",
            Violation::SelfLoop { .. } => "SELF_LOOP",
            Violation::ParallelEdge { .. } => "PARALLEL_EDGE",
            Violation::BadVertexId { .. } | Violation::NoVertices => "BAD_VERTEX_ID",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonpositiveC2 { edge, c2 } => {
                write!(f, "{}: edge {edge} has c2 = {c2}", self.code())
            }
            Violation::Disconnected => write!(f, "{}: graph is not (weakly) connected", self.code()),
            Violation::SelfLoop { edge } => write!(f, "{}: edge {edge} is a loop", self.code()),
            Violation::ParallelEdge { first, second } => {
                write!(f, "{}: edges {first} and {second} join the same vertices", self.code())
            }
            Violation::BadVertexId { edge, vertex } => {
                write!(f, "{}: edge {edge} references vertex {vertex}", self.code())
            }
            Violation::NoVertices => write!(f, "{}: instance has no vertices", self.code()),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("INVALID_INSTANCE: {}", join(.0))]
    InvalidInstance(Vec<Violation>),
    #[error("INFEASIBLE_SPANNER: edge set is not a spanner of the instance")]
    InfeasibleSpanner,
    #[error("BUDGET_EXCEEDED: {free} free edges, budget is {budget}")]
    BudgetExceeded { free: usize, budget: usize },
    #[error("LENGTH_MISMATCH: expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("TOO_LARGE: {0}")]
    TooLarge(String),
    #[error("N_TOO_SMALL: need n >= {min}, got {n}")]
    NTooSmall { n: usize, min: usize },
    #[error("NONINTEGRAL_F2: retained point ({f1}, {f2}) has non-integral f2")]
    NonIntegralF2 { f1: i64, f2: String },
    #[error("INVALID_BUCO: {0}")]
    InvalidBuco(String),
    #[error("MALFORMED_CNF: {0}")]
    MalformedCnf(String),
    #[error("UNSATISFYING_ASSIGNMENT: clause {clause} is not satisfied")]
    UnsatisfyingAssignment { clause: usize },
    #[error("NOT_UNWEIGHTED: edge {edge} has weights ({c1}, {c2})")]
    NotUnweighted { edge: usize, c1: i64, c2: i64 },
    #[error("BAD_EDGE_ID: edge {edge} is not in an instance with {edges} edges")]
    BadEdgeId { edge: usize, edges: usize },
    #[error("BAD_LAMBDA: weights must be nonnegative and not both zero")]
    BadLambda,
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

impl Error {
    /// Stable machine-readable code, the prefix of the `Display` output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidInstance(_) => "INVALID_INSTANCE",
            Error::InfeasibleSpanner => "INFEASIBLE_SPANNER",
            Error::BudgetExceeded { .. } => "BUDGET_EXCEEDED",
            Error::LengthMismatch { .. } => "LENGTH_MISMATCH",
            Error::TooLarge(_) => "TOO_LARGE",
            Error::NTooSmall { .. } => "N_TOO_SMALL",
            Error::NonIntegralF2 { .. } => "NONINTEGRAL_F2",
            Error::InvalidBuco(_) => "INVALID_BUCO",
            Error::MalformedCnf(_) => "MALFORMED_CNF",
            Error::UnsatisfyingAssignment { .. } => "UNSATISFYING_ASSIGNMENT",
            Error::NotUnweighted { .. } => "NOT_UNWEIGHTED",
            Error::BadEdgeId { .. } => "BAD_EDGE_ID",
            Error::BadLambda => "BAD_LAMBDA",
            Error::ThreadPool(_) => "THREAD_POOL",
        }
    }
}

fn join(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
