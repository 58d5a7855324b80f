use thiserror::Error;

use crate::rootsys::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no root system of type {family:?}{rank}")]
    InvalidType { family: Family, rank: usize },
    #[error("cannot parse root system type {0:?}")]
    BadTypeSyntax(String),
    #[error("vector has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{0:?} is not a root")]
    NotARoot(Vec<i64>),
    #[error("simple-root index {index} out of range 1..={rank}")]
    BadIndex { index: usize, rank: usize },
    #[error("index set is empty")]
    EmptySubset,
    #[error("index set {0:?} is not connected in the Dynkin diagram")]
    DisconnectedSubset(Vec<usize>),
    #[error("induced diagram on {0:?} matches no finite type")]
    UnrecognizedDiagram(Vec<usize>),
    #[error("letter {letter} is not a simple reflection of a rank {rank} system")]
    BadLetter { letter: usize, rank: usize },
    #[error("search exceeds the configured bound ({0})")]
    TooLarge(String),
    #[error("roots are orthogonal; no conjugation rule applies")]
    Orthogonal,
    #[error("roots are proportional")]
    Proportional,
    #[error("root pair (lengths {delta_norm2}/{tau_norm2}, pairing {pairing2}) matches no named conjugation case")]
    Unclassified {
        delta_norm2: i64,
        tau_norm2: i64,
        pairing2: i64,
    },
    #[error("index range k={k}, n={n} invalid for rank {rank}")]
    BadRange { k: usize, n: usize, rank: usize },
    #[error("no recursion relation is stated for {0}")]
    NoRelation(String),
    #[error("operation requires family {expected}, got {found}")]
    WrongFamily {
        expected: &'static str,
        found: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
