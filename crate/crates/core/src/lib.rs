//! Phase-space (Wigner function) simulation of cold atoms in gravity.
//!
//! The crate covers:
//!
//! * grids, wavefunctions and the Wigner transform ([`wigner`]),
//! * classical flows and Liouville transport for potentials up to quadratic order,
//!   plus the quantum correction operators ([`dynamics`]),
//! * Airy, bouncer, Coulomb and harmonic eigenproblems ([`eigen`]),
//! * the three-pulse light-pulse interferometer in phase space ([`interferometer`]),
//! * an independent split-step Schrödinger simulator used to check all of the above
//!   ([`oracle`]).
//!
//! Units are left to the caller; ħ is an ordinary parameter.

pub mod dynamics;
pub mod eigen;
pub mod error;
pub mod fd;
pub mod field;
pub mod fringe;
pub mod grid;
pub mod interferometer;
pub mod oracle;
pub mod spectral;
pub mod wavefunction;
pub mod wigner;

pub use num_complex::Complex64;

pub use dynamics::{
    classical_flow, classical_liouville_residual, quantum_correction_residual, thermal_distribution, transport,
    AffineFlow, PhysParams, PolynomialPotential, Source,
};
pub use eigen::{
    airy_ai, airy_ai_prime, airy_zero, bouncer_spectrum, gravitational_coulomb_spectrum, harmonic_wigner_eigenstate,
    linear_potential_eigenfunction, phase_space_eigen_residual, AirySolution, Spectrum,
};
pub use error::{Error, Result};
pub use field::{ComplexField, Field, RealField};
pub use grid::{Axis, GridSpec};
pub use interferometer::{
    assemble_exit_wigner, endpoints, exit_probability_exact, exit_probability_weak, interference_phase, kick,
    laser_phase_combination, propagate_path, separation, EndpointReport, ExitReport, InitialState, Path,
    PulseSequence, Separation,
};
pub use oracle::{
    apply_pulse, displacement_expectation, evolve, run_interferometer, wigner_of_exit, SplitStepConfig,
    TwoComponentState,
};
pub use wavefunction::{GaussianState, WaveFunction};
pub use wigner::{
    characteristic_transform, marginal_momentum, marginal_position, phase_space_overlap, wigner_transform,
    Characteristic,
};
