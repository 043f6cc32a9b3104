//! Error types shared by the crate.

use alloc::string::String;
use core::fmt;

/// Error raised by operations that require a structurally valid graph or
/// well-formed combinatorial input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// The graph failed validation; the report text names the violations.
    InvalidGraph(String),
    /// An id (vertex, edge, face) is out of range or refers to nothing.
    BadIndex(String),
    /// The requested face does not support the operation.
    BadFace(String),
    /// The graph is not reduced but the operation requires it.
    NotReduced(String),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::InvalidGraph(s) => write!(f, "invalid graph: {s}"),
            GraphError::BadIndex(s) => write!(f, "bad index: {s}"),
            GraphError::BadFace(s) => write!(f, "bad face: {s}"),
            GraphError::NotReduced(s) => write!(f, "graph not reduced: {s}"),
        }
    }
}

/// Error raised by exact-arithmetic operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    /// A matrix did not have the required rank.
    RankDeficient(String),
    /// A column of a matrix representative vanished.
    ZeroColumn(usize),
    /// A required minor or denominator vanished.
    ZeroMinor(String),
    /// Evaluation hit a pole of a birational map.
    Pole(String),
    /// A weight or coordinate that must be nonzero was zero.
    ZeroValue(String),
    /// Index out of range.
    BadIndex(String),
    /// Mismatched dimensions or sizes.
    SizeMismatch(String),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::RankDeficient(s) => write!(f, "rank deficient: {s}"),
            AlgebraError::ZeroColumn(i) => write!(f, "column {i} is zero"),
            AlgebraError::ZeroMinor(s) => write!(f, "zero minor: {s}"),
            AlgebraError::Pole(s) => write!(f, "pole: {s}"),
            AlgebraError::ZeroValue(s) => write!(f, "zero value: {s}"),
            AlgebraError::BadIndex(s) => write!(f, "bad index: {s}"),
            AlgebraError::SizeMismatch(s) => write!(f, "size mismatch: {s}"),
        }
    }
}

/// Error raised by the measurement module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MeasureError {
    /// No perfect orientation exists for the graph.
    NoPerfectOrientation,
    /// Only acyclic perfect orientations are supported for flow sums.
    CyclicOrientation,
    /// An edge with same-colored endpoints has no transport exponent.
    SameColorEdge(usize),
    /// Underlying graph error.
    Graph(GraphError),
    /// Underlying arithmetic error.
    Algebra(AlgebraError),
}

impl fmt::Display for MeasureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeasureError::NoPerfectOrientation => write!(f, "no perfect orientation exists"),
            MeasureError::CyclicOrientation => {
                write!(f, "perfect orientation is cyclic; flow sums need an acyclic one")
            }
            MeasureError::SameColorEdge(e) => {
                write!(f, "edge {e} joins same-colored vertices; no reference direction")
            }
            MeasureError::Graph(e) => write!(f, "{e}"),
            MeasureError::Algebra(e) => write!(f, "{e}"),
        }
    }
}

impl From<GraphError> for MeasureError {
    fn from(e: GraphError) -> Self {
        MeasureError::Graph(e)
    }
}

impl From<AlgebraError> for MeasureError {
    fn from(e: AlgebraError) -> Self {
        MeasureError::Algebra(e)
    }
}

/// Error raised by the floating-point local-model module.
#[derive(Debug, Clone, PartialEq)]
pub enum NumericsError {
    /// A parameter left its allowed open interval.
    OutOfDomain(String),
}

impl fmt::Display for NumericsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumericsError::OutOfDomain(s) => write!(f, "out of domain: {s}"),
        }
    }
}
