use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum LabError {
    #[error("{0} is not a face of the complex")]
    NotAFace(String),
    #[error("vertex sets clash: {0}")]
    VertexClash(String),
    #[error("face {0} has dimension 0; stellar subdivision needs dimension >= 1")]
    FaceTooSmall(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("{0} is not a prime")]
    BadPrime(u64),
    #[error("quotient is not Artinian below degree {cap}")]
    NotArtinian { cap: usize },
    #[error("degree {degree} is outside 0..={socle}")]
    DegreeOutOfRange { degree: usize, socle: usize },
    #[error("Hilbert function {0:?} is not symmetric")]
    NotGorensteinShaped(Vec<usize>),
    #[error("complex is not Gorenstein* over GF({prime}): {reason}")]
    NotGorensteinStar { prime: u32, reason: String },
    #[error("t = {t} outside 1..={d}")]
    BadT { t: usize, d: usize },
    #[error("seed ideal is not Artinian: {0}")]
    NotArtinianSeed(String),
    #[error("sequence has no left bound on its support")]
    UnboundedSupport,
    #[error("bad spec: {0}")]
    BadSpec(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = LabError> = std::result::Result<T, E>;
