use thiserror::Error;

use crate::state::DENSE_CAP;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={n_vertices}")]
    VertexOutOfRange { vertex: usize, n_vertices: usize },

    #[error("qubit/vertex counts differ: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("{requested} qubits exceeds the dense sign-vector cap of {DENSE_CAP}")]
    DenseCapExceeded { requested: usize },

    #[error("{requested} vertices exceeds the supported maximum of 30")]
    TooManyVertices { requested: usize },

    #[error(
        "hypergraph is not symmetric: {present} of {total} possible {cardinality}-edges present"
    )]
    NotSymmetric {
        cardinality: usize,
        present: usize,
        total: usize,
    },

    #[error("hypergraph is not normalized: contains {0}")]
    NotNormalized(&'static str),

    #[error("vertex {0} still appears in an edge and cannot be deleted")]
    VertexInUse(usize),

    #[error("state has an imaginary global phase; not expressible as a hypergraph")]
    ImaginaryPhase,

    #[error("weight {weight} out of range 0..={max}")]
    WeightOutOfRange { weight: usize, max: usize },

    #[error("z count {z_count} out of range for a code on {n_qubits} qubits")]
    ZCountOutOfRange { z_count: usize, n_qubits: usize },

    #[error("code with zero Z gates is one-dimensional; it spans no two-word basis")]
    DegenerateCode,

    #[error("code basis states {0} and {1} are not orthogonal")]
    NotOrthogonal(usize, usize),

    #[error("inner state is not balanced; protected construction requires it")]
    NotBalanced,

    #[error("protected construction needs at least one outer vertex")]
    NoOuterVertices,

    #[error("codeword index family is empty")]
    EmptyFamily,

    #[error(
        "index family not closed: {first:?} delta {second:?} = {delta:?} is not a vanishing set"
    )]
    FamilyNotClosed {
        first: Vec<usize>,
        second: Vec<usize>,
        delta: Vec<usize>,
    },

    #[error("extra protected edge touches an outer vertex")]
    ExtraEdgeOnOuter,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    /// True for errors caused by a resource cap rather than bad input.
    pub fn is_capacity(&self) -> bool {
        matches!(
            self,
            Error::DenseCapExceeded { .. } | Error::TooManyVertices { .. }
        )
    }
}
