use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::dynamics::PhysParams;
use crate::error::{Error, Result};

use super::airy::{airy_ai, airy_zero};

/// Scaled solution `u(z) = 𝒩 Ai(κz − ε)` of the linear-potential Schrödinger equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AirySolution {
    /// `κ = (2 m_i m_g g / ħ²)^{1/3}`.
    pub kappa: f64,
    /// `ε = (2 m_i / (ħ² m_g² g²))^{1/3} E`.
    pub epsilon: f64,
    /// Chosen so the oscillatory envelope is `|κz − ε|^{-1/4}`.
    pub norm: f64,
}

impl AirySolution {
    pub fn new(params: &PhysParams, energy: f64) -> Result<Self> {
        let params = params.validated()?;
        if !(params.g > 0.0) {
            return Err(Error::InvalidParameter(format!("linear potential needs g > 0, got {}", params.g)));
        }
        if !energy.is_finite() {
            return Err(Error::InvalidParameter("non-finite energy".into()));
        }
        let hb2 = params.hbar * params.hbar;
        let kappa = (2.0 * params.m_i * params.m_g * params.g / hb2).cbrt();
        let scale = (2.0 * params.m_i / (hb2 * params.m_g * params.m_g * params.g * params.g)).cbrt();
        Ok(Self { kappa, epsilon: scale * energy, norm: PI.sqrt() })
    }

    pub fn value(&self, z: f64) -> f64 {
        self.norm * airy_ai(self.kappa * z - self.epsilon)
    }

    /// Position of the j-th node counted from the classical turning point (j ≥ 1).
    pub fn node(&self, j: usize) -> Result<f64> {
        Ok((self.epsilon + airy_zero(j)?) / self.kappa)
    }
}

/// Samples `u_E` on `z`, returning the solution parameters alongside.
pub fn linear_potential_eigenfunction(params: &PhysParams, energy: f64, z: &[f64]) -> Result<(AirySolution, Vec<f64>)> {
    let sol = AirySolution::new(params, energy)?;
    Ok((sol, z.iter().map(|&z| sol.value(z)).collect()))
}

/// Ordered energy levels `(n, E_n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub levels: Vec<(usize, f64)>,
}

impl Spectrum {
    pub fn energies(&self) -> Vec<f64> {
        self.levels.iter().map(|l| l.1).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("n,E_n\n");
        for (n, e) in &self.levels {
            writeln!(s, "{n},{e:.16e}").expect("writing to a String cannot fail");
        }
        s
    }
}

pub const MAX_BOUNCER_LEVELS: usize = 100;

/// Quantum bouncer above an ideal mirror at z = 0:
/// `E_n = (m_g² g² ħ² / (2 m_i))^{1/3} |a_{n+1}|` for `n = 0 .. n_max−1`.
pub fn bouncer_spectrum(params: &PhysParams, n_max: usize) -> Result<Spectrum> {
    let params = params.validated()?;
    if n_max == 0 || n_max > MAX_BOUNCER_LEVELS {
        return Err(Error::InvalidParameter(format!("n_max must be in 1..={MAX_BOUNCER_LEVELS}, got {n_max}")));
    }
    if !(params.g > 0.0) {
        return Err(Error::InvalidParameter(format!("bouncer needs g > 0, got {}", params.g)));
    }
    let scale = (params.m_g * params.m_g * params.g * params.g * params.hbar * params.hbar / (2.0 * params.m_i)).cbrt();
    let levels = (0..n_max)
        .map(|n| Ok((n, -scale * airy_zero(n + 1)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Spectrum { levels })
}

/// Bound states of `V = −G M m_g / r`: `E_n = −m_i m_g² (GM)² / (2ħ² n²)`, n = 1..=n_max.
pub fn gravitational_coulomb_spectrum(params: &PhysParams, source_mass: f64, g_newton: f64, n_max: usize) -> Result<Spectrum> {
    let params = params.validated()?;
    if n_max == 0 {
        return Err(Error::InvalidParameter("n_max must be at least 1".into()));
    }
    let gm = source_mass * g_newton;
    if !(gm.is_finite() && gm > 0.0) {
        return Err(Error::InvalidParameter(format!("G·M must be positive, got {gm}")));
    }
    let ry = params.m_i * params.m_g * params.m_g * gm * gm / (2.0 * params.hbar * params.hbar);
    let levels = (1..=n_max).map(|n| (n, -ry / (n * n) as f64)).collect();
    Ok(Spectrum { levels })
}
