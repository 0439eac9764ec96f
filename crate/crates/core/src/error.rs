use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("expected 16 amplitudes, got {0}")]
    WrongLength(usize),
    #[error("amplitude vector has zero norm")]
    ZeroNorm,
    #[error("amplitude {index} is not finite")]
    NonFinite { index: usize },
    #[error("state is not normalized (norm² = {0})")]
    NotNormalized(f64),
    #[error("invalid qubit {0}; qubits are numbered 1..=4")]
    InvalidQubit(usize),
    #[error("invalid qubit pair ({0}, {1}); need 1 <= i < j <= 4")]
    InvalidPair(usize, usize),
    #[error("operator is not Hermitian (max |M - M†| = {0:e})")]
    NotHermitian(f64),
    #[error("operator dimension {got} does not match expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("imaginary residue {0:e} exceeds tolerance")]
    ImaginaryResidue(f64),
    #[error("eigenvalue iteration did not converge after {0} iterations")]
    NoConvergence(usize),
    #[error("measurement direction is not a unit vector (norm = {0})")]
    NotUnitVector(f64),
    #[error("parameter {name} = {value} outside domain {domain}")]
    ParamOutOfRange {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },
    #[error("degenerate parameters: {0}")]
    Degenerate(&'static str),
    #[error("invalid state spec: {0}")]
    Spec(String),
    #[error("invalid sweep: {0}")]
    Sweep(String),
    #[error("state file schema violation: {0}")]
    Schema(String),
    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
}
