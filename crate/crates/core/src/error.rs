use thiserror::Error;

use crate::graph::NodeSet;
use crate::hull::CandidateFailure;
use crate::tubing::TubingDefect;

/// Errors raised by graph construction, enumeration, and the hull kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one node")]
    EmptyGraph,
    #[error("graphs are limited to {limit} nodes, got {n}")]
    TooManyNodes { n: usize, limit: usize },
    #[error("node {node} out of range for a graph with {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("node set is empty")]
    EmptyNodeSet,
    #[error("node set must be a proper nonempty subset of the nodes")]
    NotProperSubset,
    #[error("{0} is not a tube of the graph")]
    NotATube(NodeSet),
    #[error("tube {0} is not part of the tubing")]
    TubeNotInTubing(NodeSet),
    #[error("{what} is limited to graphs with at most {limit} nodes, got {n}")]
    ScaleBound { what: &'static str, n: usize, limit: usize },
    #[error("invalid tubing: {0}")]
    InvalidTubing(TubingDefect),
    #[error("tubing is not maximal: expected {expected} thin or thick tubes")]
    NotMaximal { expected: usize },
    #[error("graph is not complete")]
    NotComplete,
    #[error("invalid weights: {0}")]
    Weights(String),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("point set is empty")]
    EmptyPoints,
    #[error("halfspace system is unbounded")]
    Unbounded,
    #[error("halfspace system has no vertices")]
    Infeasible,
    #[error("{} candidate hyperplane(s) rejected", .0.len())]
    RejectedCandidates(Vec<CandidateFailure>),
    #[error("inconsistent incidence: {0}")]
    InconsistentIncidence(String),
    #[error("isomorphism search gave up after {0} steps")]
    SearchBudget(u64),
    #[error("invalid poset: {0}")]
    InvalidPoset(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported output: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
