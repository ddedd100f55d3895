use thiserror::Error;

use crate::root_lattice::RootVector;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("e must be at least 2, got {0}")]
    BadE(usize),
    #[error("mixed e: {0} vs {1}")]
    MixedE(usize, usize),
    #[error("height must be positive")]
    ZeroHeight,
    #[error("{0} is not a positive root")]
    NotARoot(RootVector),
    #[error("{0} is not an indivisible root")]
    NotInPsi(RootVector),
    #[error("entry {index} ({root}) is not a positive multiple of a root")]
    NotInPhiPrime { index: usize, root: RootVector },
    #[error("entry {index} breaks the weakly decreasing order")]
    KostantOrder { index: usize },
    #[error("total contents differ: {0} vs {1}")]
    ContentMismatch(RootVector, RootVector),
    #[error("node set is not a skew shape")]
    NotSkew,
    #[error("shape is empty")]
    EmptyShape,
    #[error("shape is not a ribbon")]
    NotRibbon,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("residue {residue} is not an initial residue of {root}")]
    NotInInit { root: RootVector, residue: usize },
    #[error("component {0} is empty or disconnected")]
    BadComponent(usize),
    #[error("shape has {nodes} nodes, cap is {cap}")]
    CapExceeded { nodes: usize, cap: usize },
    #[error("comparison of distinct indivisible roots came out equivalent")]
    Invariant,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
