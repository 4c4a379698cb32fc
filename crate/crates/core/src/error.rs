use thiserror::Error;

use crate::diagram::Label;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: conflicting labels for edge {a} {b}")]
    DuplicateEdge { line: usize, a: String, b: String },
    #[error("line {line}: vertex {vertex} cannot be joined to itself")]
    SelfEdge { line: usize, vertex: String },
    #[error("line {line}: bad label {token:?} (expected an integer >= 3 or `inf`)")]
    BadLabel { line: usize, token: String },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("diagram has no vertices")]
    EmptyDiagram,
    #[error("invalid vertex name {0:?}")]
    InvalidName(String),

    #[error("unknown builtin diagram {0:?}")]
    UnknownName(String),
    #[error("bad rank {rank} for family {family}")]
    BadRank { family: String, rank: String },

    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("unknown letter {0:?}")]
    UnknownLetter(String),

    #[error(
        "odd component has cycle rank {cycle_rank}; the reflection part is only computed for trees"
    )]
    UnsupportedCycles { cycle_rank: usize },
    #[error("conflicting certificates between classes {a} and {b}: {first} vs {second}")]
    ConflictingCertificates {
        a: String,
        b: String,
        first: Label,
        second: Label,
    },
    #[error("not an odd path: {a} {b} joined by {label}")]
    NotOddPath { a: String, b: String, label: Label },
    #[error("empty path")]
    EmptyPath,
    #[error("{a} {b} joined by {label}, expected a finite even label")]
    NotEvenJoin { a: String, b: String, label: Label },
    #[error("diagram is not a tree of single edges")]
    NotSingleEdgeTree,

    #[error("diagram is not spherical")]
    NotFinite,
    #[error("group order exceeds the limit {limit}")]
    OrderExceeded { limit: usize },
}

impl Error {
    /// Errors that indicate a broken internal invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::ConflictingCertificates { .. })
    }
}
