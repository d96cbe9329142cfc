use thiserror::Error;

use crate::bipartite::BipartiteWitness;
use crate::graph::{Graph, Vertex};
use crate::instance::Mode;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {0} listed twice")]
    DuplicateVertex(Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithmeticError {
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("token sets must be non-empty")]
    EmptyTokenSet,
    #[error("start has {start} tokens but target has {target}")]
    SizeMismatch { start: usize, target: usize },
    #[error("start set not independent")]
    StartNotIndependent,
    #[error("target set not independent")]
    TargetNotIndependent,
    #[error("forbiddance parameter t must be at least 3, got {0}")]
    InvalidT(usize),
    #[error("graph is not K3,{t}-forbidden ({mode} mode): {witness}")]
    NotForbidden {
        mode: Mode,
        t: usize,
        witness: BipartiteWitness,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(transparent)]
    Input(#[from] InstanceError),
    #[error("configuration budget of {budget} visited sets exhausted")]
    ResourceExhausted { budget: usize },
}

#[derive(Debug, Clone, Error)]
pub enum SolveError {
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
    #[error("kernel search failed on a {} vertex kernel: {source}", kernel.order())]
    Oracle { source: OracleError, kernel: Box<Graph> },
    #[error("contract violated: {0}")]
    Contract(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
