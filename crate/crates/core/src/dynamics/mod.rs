//! Classical trajectories, Liouville transport and the quantum correction operators.

mod flow;
mod liouville;
mod params;
mod potential;
mod thermal;
pub mod transport;

pub use flow::{classical_flow, trig_kernels, AffineFlow};
pub(crate) use liouville::series_operator;
pub use liouville::{classical_liouville_residual, quantum_correction_residual};
pub use params::PhysParams;
pub use potential::{PolynomialPotential, MAX_DEGREE};
pub use thermal::thermal_distribution;
pub use transport::{transport, Source};
