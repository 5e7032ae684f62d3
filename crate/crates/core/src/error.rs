use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Axial and spinal quantities do not exist when `G_n` has no self-conjugate vertex.
    #[error("n = {0} is axisless; axial quantities are undefined")]
    Axisless(u32),

    #[error("brute-force clique oracle infeasible: degree {degree} exceeds bound {bound}")]
    OracleInfeasible { degree: usize, bound: usize },

    #[error("cannot parse partition {0:?}")]
    ParsePartition(String),

    #[error("unsupported graph format {0:?} (expected dot or graphml)")]
    UnsupportedFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
