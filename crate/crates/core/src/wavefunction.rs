//! Position-space wavefunctions and the canonical Gaussian initial state.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::{check_hbar, RealField};
use crate::grid::{Axis, GridSpec};
use crate::spectral::{trig_interpolate, ChirpZ};

/// Complex samples `ψ(z_j)` on a uniform position axis.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveFunction {
    grid: Axis,
    values: Vec<Complex64>,
    hbar: f64,
}

impl WaveFunction {
    pub fn new(grid: Axis, values: Vec<Complex64>, hbar: f64) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::InvalidGrid(format!("{} samples for {} grid points", values.len(), grid.len())));
        }
        check_hbar(hbar)?;
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter("non-finite wavefunction sample".into()));
        }
        Ok(Self { grid, values, hbar })
    }

    pub fn from_fn(grid: Axis, hbar: f64, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        Self::new(grid, grid.points().map(f).collect(), hbar)
    }

    pub fn grid(&self) -> &Axis {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// `∑ |ψ_j|² Δz`.
    pub fn norm_sqr(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() * self.grid.step()
    }

    pub fn normalize(&self) -> Result<Self> {
        let n = self.norm_sqr();
        if !(n > 0.0) {
            return Err(Error::InvalidParameter("cannot normalize a zero wavefunction".into()));
        }
        Ok(self.scaled(1.0 / n.sqrt()))
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self { grid: self.grid, values: self.values.iter().map(|v| v * factor).collect(), hbar: self.hbar }
    }

    /// Largest amplitude among the two boundary samples.
    pub fn edge_amplitude(&self) -> f64 {
        let n = self.values.len();
        self.values[0].norm().max(self.values[n - 1].norm())
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &WaveFunction) -> Result<Complex64> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch(format!("{:?} vs {:?}", self.grid, other.grid)));
        }
        let s: Complex64 = self.values.iter().zip(&other.values).map(|(a, b)| a.conj() * b).sum();
        Ok(s * self.grid.step())
    }

    pub fn density(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.norm_sqr()).collect()
    }

    /// `|ψ̃(p)|²` on `p_axis`, with `ψ̃(p) = (2πħ)^{-1/2} ∫ e^{−ipz/ħ} ψ(z) dz`.
    pub fn momentum_density(&self, p_axis: &Axis) -> Vec<f64> {
        let h = self.grid.step();
        let hb = self.hbar;
        let czt = ChirpZ::new(self.values.len(), p_axis.len(), -p_axis.min() * h / hb, -p_axis.step() * h / hb);
        let amp = czt.transform(&self.values);
        // the e^{−ip z_min/ħ} prefactor has unit modulus and drops out
        let scale = h * h / (2.0 * PI * hb);
        amp.iter().map(|a| a.norm_sqr() * scale).collect()
    }

    /// Band-limited resampling onto `axis`; zero outside the original box.
    pub fn resample(&self, axis: Axis) -> Result<Self> {
        let v = trig_interpolate(&self.values, self.grid.min(), self.grid.step(), axis.min(), axis.step(), axis.len());
        Self::new(axis, v, self.hbar)
    }

    /// `⟨ψ|p̂|ψ⟩` from the spectral derivative; assumes a normalized state.
    pub fn mean_momentum(&self) -> f64 {
        let n = self.values.len();
        let mut c = self.values.clone();
        crate::spectral::fft(&mut c);
        let dk = 2.0 * PI / (n as f64 * self.grid.step());
        let num: f64 = c
            .iter()
            .enumerate()
            .map(|(k, v)| v.norm_sqr() * crate::spectral::signed_index(k, n) * dk * self.hbar)
            .sum();
        let den: f64 = c.iter().map(|v| v.norm_sqr()).sum();
        num / den
    }

    /// `⟨ψ|ẑ|ψ⟩ / ⟨ψ|ψ⟩`.
    pub fn mean_position(&self) -> f64 {
        let (mut s, mut sz) = (0.0, 0.0);
        for (z, v) in self.grid.points().zip(&self.values) {
            s += v.norm_sqr();
            sz += z * v.norm_sqr();
        }
        sz / s
    }

    pub fn position_variance(&self) -> f64 {
        let m = self.mean_position();
        let (mut s, mut sz) = (0.0, 0.0);
        for (z, v) in self.grid.points().zip(&self.values) {
            s += v.norm_sqr();
            sz += (z - m) * (z - m) * v.norm_sqr();
        }
        sz / s
    }
}

/// Minimum-uncertainty packet `(2πσ²)^{-1/4} exp(−(z−z0)²/4σ² + i p0 (z−z0)/ħ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianState {
    pub z0: f64,
    pub p0: f64,
    pub sigma_z: f64,
    pub hbar: f64,
}

impl GaussianState {
    pub fn new(z0: f64, p0: f64, sigma_z: f64, hbar: f64) -> Result<Self> {
        if !(sigma_z.is_finite() && sigma_z > 0.0) {
            return Err(Error::InvalidParameter(format!("sigma_z must be positive, got {sigma_z}")));
        }
        if !(z0.is_finite() && p0.is_finite()) {
            return Err(Error::InvalidParameter("non-finite Gaussian centre".into()));
        }
        check_hbar(hbar)?;
        Ok(Self { z0, p0, sigma_z, hbar })
    }

    /// Momentum width `ħ/(2σ)`.
    pub fn sigma_p(&self) -> f64 {
        self.hbar / (2.0 * self.sigma_z)
    }

    pub fn amplitude(&self, z: f64) -> Complex64 {
        let s2 = self.sigma_z * self.sigma_z;
        let d = z - self.z0;
        let norm = (2.0 * PI * s2).powf(-0.25);
        Complex64::from_polar(norm * (-d * d / (4.0 * s2)).exp(), self.p0 * d / self.hbar)
    }

    pub fn sample(&self, grid: Axis) -> Result<WaveFunction> {
        WaveFunction::from_fn(grid, self.hbar, |z| self.amplitude(z))
    }

    /// `W(z,p) = (1/πħ) exp(−(z−z0)²/2σ² − 2σ²(p−p0)²/ħ²)`.
    pub fn wigner(&self, z: f64, p: f64) -> f64 {
        let s2 = self.sigma_z * self.sigma_z;
        let dz = z - self.z0;
        let dp = p - self.p0;
        (-dz * dz / (2.0 * s2) - 2.0 * s2 * dp * dp / (self.hbar * self.hbar)).exp() / (PI * self.hbar)
    }

    pub fn wigner_field(&self, grid: GridSpec) -> Result<RealField> {
        RealField::from_fn(grid, self.hbar, |z, p| self.wigner(z, p))
    }

    /// `∬ e^{i(ξp + qz)/ħ} W dz dp`.
    pub fn characteristic(&self, xi: f64, q: f64) -> Complex64 {
        let s2 = self.sigma_z * self.sigma_z;
        let hb = self.hbar;
        let amp = (-q * q * s2 / (2.0 * hb * hb) - xi * xi / (8.0 * s2)).exp();
        Complex64::from_polar(amp, (xi * self.p0 + q * self.z0) / hb)
    }

    pub fn displaced(&self, dz: f64, dp: f64) -> Self {
        Self { z0: self.z0 + dz, p0: self.p0 + dp, ..*self }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampled_gaussian_is_normalized() {
        let g = GaussianState::new(0.3, -1.0, 0.8, 1.0).unwrap();
        let psi = g.sample(Axis::new(-10.0, 10.0, 256).unwrap()).unwrap();
        assert!((psi.norm_sqr() - 1.0).abs() < 1e-12);
        assert!((psi.mean_position() - 0.3).abs() < 1e-12);
        assert!((psi.mean_momentum() + 1.0).abs() < 1e-10);
        assert!((psi.position_variance() - 0.64).abs() < 1e-12);
    }

    #[test]
    fn momentum_density_is_gaussian() {
        let g = GaussianState::new(1.0, 2.0, 0.5, 1.0).unwrap();
        let psi = g.sample(Axis::new(-10.0, 10.0, 512).unwrap()).unwrap();
        let pa = Axis::new(-4.0, 8.0, 64).unwrap();
        let sp = g.sigma_p();
        for (dens, p) in psi.momentum_density(&pa).iter().zip(pa.points()) {
            let want = (-(p - 2.0) * (p - 2.0) / (2.0 * sp * sp)).exp() / (2.0 * PI * sp * sp).sqrt();
            assert!((dens - want).abs() < 1e-12, "p={p}: {dens} vs {want}");
        }
    }

    #[test]
    fn resample_preserves_state() {
        let g = GaussianState::new(0.0, 1.5, 1.0, 1.0).unwrap();
        let psi = g.sample(Axis::new(-12.0, 12.0, 128).unwrap()).unwrap();
        let fine = psi.resample(Axis::new(-9.0, 9.0, 512).unwrap()).unwrap();
        for (z, v) in fine.grid().points().zip(fine.values()) {
            assert!((v - g.amplitude(z)).norm() < 1e-12);
        }
    }

    #[test]
    fn rejects_bad_states() {
        assert!(GaussianState::new(0.0, 0.0, 0.0, 1.0).is_err());
        assert!(GaussianState::new(0.0, 0.0, 1.0, -1.0).is_err());
        let a = Axis::new(0.0, 1.0, 8).unwrap();
        assert!(WaveFunction::new(a, vec![Complex64::new(0.0, 0.0); 8], 1.0).unwrap().normalize().is_err());
    }
}
