use crate::error::{Error, Result};
use crate::field::RealField;
use crate::grid::GridSpec;

use super::{PhysParams, PolynomialPotential};

/// Largest fraction of the mass tolerated on the boundary rows and columns.
pub const EDGE_MASS_LIMIT: f64 = 1e-3;

/// Stationary Boltzmann distribution `f0 ∝ exp(−p²/(2 m_i kT) − V(z)/kT)`, normalised
/// to unit integral on `grid`. Multiply by a particle number if counts are wanted.
pub fn thermal_distribution(
    params: &PhysParams,
    kt: f64,
    potential: &PolynomialPotential,
    grid: &GridSpec,
) -> Result<RealField> {
    if !(kt.is_finite() && kt > 0.0) {
        return Err(Error::InvalidParameter(format!("kT must be positive, got {kt}")));
    }
    let vs: Vec<f64> = grid.z.points().map(|z| potential.value(z)).collect();
    let vmin = vs.iter().cloned().fold(f64::INFINITY, f64::min);
    if !vmin.is_finite() {
        return Err(Error::NotNormalizable { edge_mass: 1.0, limit: EDGE_MASS_LIMIT });
    }
    let mut values = Vec::with_capacity(grid.len());
    for v in &vs {
        let fz = (-(v - vmin) / kt).exp();
        for p in grid.p.points() {
            values.push(fz * (-p * p / (2.0 * params.m_i * kt)).exp());
        }
    }
    let total: f64 = values.iter().sum();
    let (nz, np) = (grid.z.len(), grid.p.len());
    // a z-edge only leaks if the distribution continues past it (no wall there)
    let h = grid.z.step();
    let open_below = potential.value(grid.z.min() - h).is_finite();
    let open_above = potential.value(grid.z.max()).is_finite();
    let mut edge = 0.0;
    for j in 0..nz {
        let z_edge = (j == 0 && open_below) || (j == nz - 1 && open_above);
        for m in 0..np {
            if z_edge || m == 0 || m == np - 1 {
                edge += values[j * np + m];
            }
        }
    }
    let edge_mass = edge / total;
    if !(edge_mass <= EDGE_MASS_LIMIT) {
        return Err(Error::NotNormalizable { edge_mass, limit: EDGE_MASS_LIMIT });
    }
    let scale = 1.0 / (total * grid.cell_area());
    values.iter_mut().for_each(|v| *v *= scale);
    RealField::new(*grid, params.hbar, values)
}
