//! Energy eigenproblems: Airy, quantum bouncer, gravitational Coulomb, and harmonic
//! Wigner eigenstates.

mod airy;
mod harmonic;
mod spectra;

pub use airy::{airy_ai, airy_ai_prime, airy_pair, airy_zero};
pub use harmonic::{harmonic_wavefunction, harmonic_wigner_eigenstate, phase_space_eigen_residual, MAX_HARMONIC_LEVEL};
pub use spectra::{
    bouncer_spectrum, gravitational_coulomb_spectrum, linear_potential_eigenfunction, AirySolution, Spectrum,
    MAX_BOUNCER_LEVELS,
};
