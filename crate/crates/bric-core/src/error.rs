use thiserror::Error;

/// Errors for root-system, catalog, and integer-topology operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("rank {rank} is not valid for family {family}")]
    InvalidRank { family: String, rank: usize },

    #[error("missing multiplicity for orbit {0}")]
    MissingMultiplicity(String),

    #[error("multiplicity for orbit {0} must be >= 1")]
    ZeroMultiplicity(String),

    #[error("node index {index} out of range 1..={rank}")]
    NodeOutOfRange { index: usize, rank: usize },

    #[error("empty product")]
    EmptyProduct,

    #[error("parameters {0} and {1} are not coprime")]
    NotCoprime(i64, i64),

    #[error("{0}")]
    Precondition(String),

    #[error("unknown table id {0}")]
    UnknownTable(String),

    #[error("unknown output format {0}")]
    UnknownFormat(String),

    #[error("unknown space spec: {0}")]
    UnknownSpace(String),

    #[error("catalog data error: {0}")]
    Catalog(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
