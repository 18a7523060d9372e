use std::path::PathBuf;

use thiserror::Error;

/// Why a multiplication table failed the group axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotAGroupReason {
    NoIdentity,
    MissingInverse { element: usize },
    NonAssociative { a: usize, b: usize, c: usize },
}

impl std::fmt::Display for NotAGroupReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NotAGroupReason::NoIdentity => write!(f, "no identity element"),
            NotAGroupReason::MissingInverse { element } => {
                write!(f, "element {element} has no inverse")
            }
            NotAGroupReason::NonAssociative { a, b, c } => {
                write!(f, "non-associative triple ({a}, {b}, {c})")
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed group spec {text:?}: {reason}")]
    MalformedSpec { text: String, reason: String },

    #[error("Q{order}: quaternion order must be 2^k with k >= 3")]
    InvalidQuaternionOrder { order: u64 },

    #[error("H{p}: Heisenberg parameter must be an odd prime")]
    InvalidHeisenbergPrime { p: u64 },

    #[error("E{p}^{rank}: elementary abelian base must be prime and rank >= 1")]
    InvalidElementaryAbelian { p: u64, rank: u32 },

    #[error("D{order}: dihedral order must be even and >= 6")]
    InvalidDihedralOrder { order: u64 },

    #[error("Z{n}: cyclic order must be >= 1")]
    InvalidCyclicOrder { n: u64 },

    #[error("group order {order} exceeds the cap of {cap}")]
    OrderTooLarge { order: u64, cap: usize },

    #[error("malformed Cayley table: {0}")]
    MalformedTable(String),

    #[error("not a group: {0}")]
    NotAGroup(NotAGroupReason),

    #[error("group is not nilpotent: the {prime}-elements are not closed under multiplication")]
    NotNilpotent { prime: u64 },

    #[error("group is not a p-group (order {order})")]
    NotAPGroup { order: usize },

    #[error("operation requires a graph in {expected} mode, got {actual}")]
    Mode {
        expected: &'static str,
        actual: &'static str,
    },

    #[error("search exceeded the node budget of {budget}")]
    ResourceLimit { budget: u64 },

    #[error("graph has {vertices} vertices, brute force is limited to {max}")]
    TooLarge { vertices: usize, max: usize },

    #[error("invalid nilpotent profile: {0}")]
    ProfileInvalid(String),

    #[error("malformed catalog line {line}: {reason}")]
    MalformedCatalog { line: usize, reason: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
