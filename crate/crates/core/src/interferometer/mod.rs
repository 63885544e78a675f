//! The three-pulse light-pulse interferometer in phase space.

mod exit;
mod geometry;
mod paths;
mod sequence;

pub use exit::{
    assemble_exit_wigner, exit_probability_exact, exit_probability_weak, ExitReport, InitialState, WeakGradientTerms,
    WEAK_REGIME_LIMIT,
};
pub use geometry::{endpoints, gravity_phase, interference_phase, path_flow, separation, EndpointReport, Path, Separation};
pub use paths::{kick, kick_gaussian, propagate_path};
pub use sequence::{laser_phase_combination, PulseSequence};
