use thiserror::Error;

/// Errors raised by the phase-space, dynamics, eigenstate and oracle routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The state has non-negligible amplitude at the edge of its grid.
    #[error("grid too small: edge amplitude {edge_amplitude:.3e} exceeds {limit:.1e}")]
    GridTooSmall { edge_amplitude: f64, limit: f64 },

    #[error("state not normalized: norm {norm:.12} deviates from 1 by more than {tol:.1e}")]
    NonNormalized { norm: f64, tol: f64 },

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    /// More probability than allowed was pulled from outside the tabulated domain.
    #[error("extrapolation loss: {lost:.3e} of the mass left the grid (limit {limit:.1e})")]
    ExtrapolationLoss { lost: f64, limit: f64 },

    #[error("distribution not normalizable: edge mass {edge_mass:.3e} exceeds {limit:.1e}")]
    NotNormalizable { edge_mass: f64, limit: f64 },

    #[error("root finding failed: {0}")]
    ConvergenceFailure(String),

    /// The split-step wavefunction reached the boundary of the simulation box.
    #[error("wavefunction escaped the grid at t = {time:.6}: edge amplitude {edge_amplitude:.3e}")]
    GridEscape { time: f64, edge_amplitude: f64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
