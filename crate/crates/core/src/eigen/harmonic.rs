use std::f64::consts::PI;

use num_complex::Complex64;

use crate::dynamics::{series_operator, PhysParams, PolynomialPotential};
use crate::error::{Error, Result};
use crate::fd::{derivative, Direction};
use crate::field::RealField;
use crate::grid::{Axis, GridSpec};
use crate::wavefunction::WaveFunction;
use crate::wigner::wigner_transform;

pub const MAX_HARMONIC_LEVEL: usize = 30;

/// Normalised Hermite function `φ_n` of `½ m_i ω² z²` sampled on `axis`.
pub fn harmonic_wavefunction(n: usize, omega: f64, params: &PhysParams, axis: Axis) -> Result<WaveFunction> {
    let params = params.validated()?;
    if !(omega.is_finite() && omega > 0.0) {
        return Err(Error::InvalidParameter(format!("omega must be positive, got {omega}")));
    }
    let alpha = (params.m_i * omega / params.hbar).sqrt();
    let pref = (alpha * alpha / PI).powf(0.25);
    WaveFunction::from_fn(axis, params.hbar, |z| {
        let xi = alpha * z;
        let mut prev = 0.0;
        let mut cur = pref * (-0.5 * xi * xi).exp();
        for k in 0..n {
            let kf = k as f64;
            let next = (2.0 / (kf + 1.0)).sqrt() * xi * cur - (kf / (kf + 1.0)).sqrt() * prev;
            prev = cur;
            cur = next;
        }
        Complex64::new(cur, 0.0)
    })
}

/// Wigner function of the n-th oscillator eigenstate on `grid`. The wavefunction is
/// generated on the grid's z-range, refined until it resolves the state's momenta, so
/// a z-range too small for the state fails with `GridTooSmall`.
pub fn harmonic_wigner_eigenstate(n: usize, omega: f64, params: &PhysParams, grid: &GridSpec) -> Result<RealField> {
    if n > MAX_HARMONIC_LEVEL {
        return Err(Error::InvalidParameter(format!("level {n} exceeds {MAX_HARMONIC_LEVEL}")));
    }
    let ell = (params.hbar / (params.m_i * omega)).sqrt();
    // largest momentum carried with non-negligible weight, in units of ħ/ℓ
    let reach = (2.0 * n as f64 + 1.0).sqrt() + 8.0;
    let h_max = PI * ell / reach;
    let mut axis = grid.z;
    while axis.step() > h_max {
        axis = axis.refined(2)?;
    }
    let psi = harmonic_wavefunction(n, omega, params, axis)?;
    wigner_transform(&psi.normalize()?, grid)
}

/// `[p²/2m_i + V − (ħ²/8m_i)∂²_z + L_even − E] W`, where
/// `L_even = Σ_{l≥1} (−1)^l (ħ/2)^{2l}/(2l)! · V^{(2l)} ∂_p^{2l}`.
pub fn phase_space_eigen_residual(
    w: &RealField,
    energy: f64,
    potential: &PolynomialPotential,
    params: &PhysParams,
) -> Result<RealField> {
    let params = params.validated()?;
    let g = w.grid();
    let hb = params.hbar;
    let dzz = derivative(w, Direction::Z, 2);
    let even = series_operator(w, potential, hb, 0);
    let mut out = Vec::with_capacity(g.len());
    for j in 0..g.z.len() {
        let v = potential.value(g.z.point(j));
        for m in 0..g.p.len() {
            let i = g.index(j, m);
            let p = g.p.point(m);
            let h = p * p / (2.0 * params.m_i) + v;
            out.push((h - energy) * w.values()[i] - hb * hb / (8.0 * params.m_i) * dzz[i] + even.values()[i]);
        }
    }
    RealField::new(*g, w.hbar(), out)
}
