use std::path::PathBuf;

use thiserror::Error;

/// Everything that can go wrong between reading a structure and reporting an energy.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported Lebedev grid size {0}")]
    UnsupportedGridSize(usize),

    #[error("direction is not a unit vector (norm {norm})")]
    NonUnitDirection { norm: f64 },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("argument must be positive, got {0}")]
    NonPositiveArgument(f64),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("structure contains no atoms")]
    EmptyStructure,

    #[error("evaluation point coincides with a point charge at {point:?}")]
    SingularEvaluation { point: [f64; 3] },

    #[error("coefficient shape mismatch: expected {expected} entries, got {got}")]
    ShapeMismatch { expected: usize, got: usize },

    #[error("screening constant must be positive for this operation, got {0}")]
    NonPositiveKappa(f64),

    #[error("dense assembly of dimension {dim} exceeds the cap of {cap}")]
    ProblemTooLarge { dim: usize, cap: usize },

    #[error("no convergence after {iterations} iterations (last increment {last_increment:e})")]
    NoConvergence {
        iterations: usize,
        last_increment: f64,
        energy_history: Vec<f64>,
    },

    #[error("no Lebedev node of any ball lies on the solvent-exposed surface")]
    NoExposedSurface,

    #[error("charge at {point:?} lies outside every ball of the cavity")]
    ChargeOutsideCavity { point: [f64; 3] },

    #[error("multipole series not converged at {terms} terms (last relative term {last_term:e})")]
    SeriesNotConverged { terms: usize, last_term: f64 },

    #[error("ionic strength must be non-negative, got {0}")]
    NegativeIonicStrength(f64),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
