use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("geometric factor needs a positive q-exponent, got {0}")]
    NonPositiveStep(i64),

    #[error("number of points must be non-negative, got {0}")]
    NegativePoints(i64),

    #[error("curve degree must be positive, got {0}")]
    NonPositiveDegree(i64),

    #[error("chi-independence check needs d >= 3, got {0}")]
    DegreeTooSmall(i64),

    /// Zero or several representatives of +-chi mod d in [-3d/2, -d].
    #[error("uniqueness violated: {count} representatives of +-{chi} mod {d} in [{low}, {high}]")]
    UniquenessViolated {
        d: i64,
        chi: i64,
        low: i64,
        high: i64,
        count: usize,
    },

    #[error(
        "Betti numbers are only determined for coprime d and chi \
         (gcd({d}, {chi}) = {gcd}); the moduli space need not be smooth"
    )]
    NotCoprime { d: i64, chi: i64, gcd: i64 },

    #[error("malformed class: {0}")]
    Malformed(String),

    #[error("cache file {path}: {source}")]
    CacheIo {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
