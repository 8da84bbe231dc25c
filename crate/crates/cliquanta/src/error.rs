use crate::graph::Edge;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("edge {0} is not present in the graph")]
    EdgeAbsent(Edge),
    #[error("edge {0} is already present in the graph")]
    EdgePresent(Edge),
    #[error("conflicting adjacency on shared labels {0} and {1}")]
    UnionConflict(usize, usize),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("malformed edge list: {0}")]
    EdgeList(String),
    #[error("{what} = {got} exceeds the supported cap {cap}")]
    SizeCap {
        what: &'static str,
        got: usize,
        cap: usize,
    },
    #[error("gadget hypothesis violated: {0}")]
    GadgetHypothesis(String),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("graph is not regular: vertex {u} has degree {du} but vertex {v} has degree {dv}")]
    NotRegular {
        u: usize,
        du: usize,
        v: usize,
        dv: usize,
    },
    #[error("split hypothesis violated; offending clique {0:?}")]
    SplitViolation(Vec<usize>),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
