use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(VertexId),
    #[error("vertex {0} not in graph")]
    MissingVertex(VertexId),
    #[error("edge {0} not in graph")]
    MissingEdge(usize),
    #[error("graph has no vertices")]
    Empty,
    #[error("graph exceeds the small-graph bound ({size} > {bound})")]
    TooLarge { size: usize, bound: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid graph: {0}")]
    Invalid(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TileError {
    #[error("walls not compatible: |rho| = {left} but |lambda'| = {right}")]
    Incompatible { left: usize, right: usize },
    #[error("invalid wall: {0}")]
    Wall(String),
    #[error("index {index} out of range for sequence of length {len}")]
    Index { index: usize, len: usize },
    #[error("identification would create a loop at vertex {0}")]
    Loop(VertexId),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrossingError {
    #[error("invalid crossing pair ({0}, {1}): {2}")]
    InvalidPair(usize, usize, String),
    #[error("invalid crossing order on edge {0}")]
    InvalidOrder(usize),
    #[error("seed witness does not planarize the graph")]
    InvalidSeed,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZipError {
    #[error("degree mismatch: deg(v1) = {0}, deg(v2) = {1}")]
    DegreeMismatch(usize, usize),
    #[error("vertex {0} is incident with parallel edges")]
    NotSimple(VertexId),
    #[error("sigma is not a bijection N(v1) -> N(v2)")]
    BadSigma,
    #[error("{0}! bijections exceed the enumeration budget")]
    Budget(usize),
    #[error("zip site {0}: {1}")]
    Site(usize, String),
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error("validator rejected construction: {0}")]
    Validation(String),
    #[error(transparent)]
    Tile(#[from] TileError),
    #[error(transparent)]
    Zip(#[from] ZipError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GammaError {
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error("constraints fail: {}", .0.join("; "))]
    Constraints(Vec<String>),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("measurement differs from prediction: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Build(#[from] BuildError),
}
