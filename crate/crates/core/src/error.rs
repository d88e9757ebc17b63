use alloc::string::String;

use crate::graph::Vertex;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("no sites")]
    NoSites,
    #[error("no candidate vertex: every vertex is already a site")]
    NoCandidate,
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("vertex {0} appears more than once in the site list")]
    DuplicateSite(Vertex),
    #[error("vertex {0} is already a site")]
    AlreadySite(Vertex),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(Vertex, Vertex),
    #[error("edge {0}-{1} has zero weight")]
    ZeroWeight(Vertex, Vertex),
    #[error("graph is empty")]
    EmptyGraph,
    #[error("graph is disconnected (vertex {0} unreachable from vertex 0)")]
    Disconnected(Vertex),
    #[error("cost vector has {got} entries, expected {expected}")]
    CostLength { expected: usize, got: usize },
    #[error("invalid cost {0:?}")]
    InvalidCost(String),
    #[error("negative cost {0:?}")]
    NegativeCost(String),
    #[error("total cost exceeds the fixed-point limit of 2^62 units")]
    CostOverflow,
    #[error("graph is not complete")]
    NotAClique,
    #[error("graph is not a path")]
    NotAPath,
    #[error("graph is not a cycle")]
    NotACycle,
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph has edge weights; this solver needs unit-length edges")]
    Weighted,
    #[error("not a proper interval graph: umbrella violated by ({0}, {1}, {2})")]
    NotProperInterval(Vertex, Vertex, Vertex),
    #[error("sigma ordering fails the distance formula on pair ({0}, {1})")]
    SigmaValidation(Vertex, Vertex),
    #[error("invalid tree decomposition: {0}")]
    Decomposition(String),
    #[error("point has dimension {got}, expected {expected}")]
    MixedDimensions { expected: usize, got: usize },
    #[error("invalid hitting-set instance: {0}")]
    HittingSet(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
