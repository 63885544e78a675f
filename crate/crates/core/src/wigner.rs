//! The Wigner transform and the phase-space integrals built on it.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::{ComplexField, Field, RealField, Sample};
use crate::grid::{Axis, GridSpec};
use crate::spectral::{trig_interpolate, ChirpZ};
use crate::wavefunction::WaveFunction;

/// Acceptance thresholds for the input state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WignerTolerances {
    /// Largest boundary amplitude `|ψ|` accepted.
    pub edge_amplitude: f64,
    /// Largest accepted `|‖ψ‖² − 1|`.
    pub norm: f64,
}

impl Default for WignerTolerances {
    fn default() -> Self {
        Self { edge_amplitude: 1e-6, norm: 1e-6 }
    }
}

/// `W(z,p) = (2πħ)^{-1} ∫ dζ e^{−ipζ/ħ} ψ*(z−ζ/2) ψ(z+ζ/2)` sampled on `grid`.
pub fn wigner_transform(psi: &WaveFunction, grid: &GridSpec) -> Result<RealField> {
    wigner_transform_with(psi, grid, &WignerTolerances::default())
}

pub fn wigner_transform_with(psi: &WaveFunction, grid: &GridSpec, tol: &WignerTolerances) -> Result<RealField> {
    Ok(wigner_transform_raw(psi, grid, tol)?.re())
}

/// The transform before discarding the imaginary part, which is pure round-off for a
/// valid state. Useful for checking realness.
pub fn wigner_transform_raw(psi: &WaveFunction, grid: &GridSpec, tol: &WignerTolerances) -> Result<ComplexField> {
    let edge = psi.edge_amplitude();
    if edge > tol.edge_amplitude {
        return Err(Error::GridTooSmall { edge_amplitude: edge, limit: tol.edge_amplitude });
    }
    let norm = psi.norm_sqr();
    if (norm - 1.0).abs() > tol.norm {
        return Err(Error::NonNormalized { norm, tol: tol.norm });
    }

    // Working axis: aligned with the field's z-samples, at most half the state's
    // spacing (so the ζ = 2s ladder is no coarser than the original samples), and
    // covering both the state and the field.
    let src = psi.grid();
    let (dz_g, h) = (grid.z.step(), src.step());
    let r = ((dz_g / (0.5 * h)) * (1.0 - 1e-12)).ceil().max(1.0) as usize;
    let hw = dz_g / r as f64;
    let lo = src.min().min(grid.z.min());
    let hi = (src.max() - h).max(grid.z.point(grid.z.len() - 1));
    let i_lo = ((lo - grid.z.min()) / hw).floor() as i64;
    let i_hi = ((hi - grid.z.min()) / hw).ceil() as i64;
    let len = (i_hi - i_lo + 1) as usize;
    let work = trig_interpolate(psi.values(), src.min(), h, grid.z.min() + i_lo as f64 * hw, hw, len);

    let centre = |j: usize| (j * r) as i64 - i_lo;
    let n_half = (0..grid.z.len())
        .map(|j| {
            let c = centre(j);
            c.min(len as i64 - 1 - c).max(0) as usize
        })
        .max()
        .unwrap_or(0);

    let hb = psi.hbar();
    let dzeta = 2.0 * hw;
    let n_lag = 2 * n_half + 1;
    let czt = ChirpZ::new(n_lag, grid.p.len(), -dzeta * grid.p.min() / hb, -dzeta * grid.p.step() / hb);
    let post: Vec<Complex64> = grid
        .p
        .points()
        .map(|p| Complex64::from_polar(dzeta / (2.0 * PI * hb), p * dzeta * n_half as f64 / hb))
        .collect();

    let mut values = Vec::with_capacity(grid.len());
    let mut corr = vec![Complex64::new(0.0, 0.0); n_lag];
    let mut row = vec![Complex64::new(0.0, 0.0); grid.p.len()];
    let mut scratch = Vec::new();
    for j in 0..grid.z.len() {
        let c = centre(j);
        corr.iter_mut().for_each(|v| *v = Complex64::new(0.0, 0.0));
        for n in -(n_half as i64)..=(n_half as i64) {
            let (a, b) = (c - n, c + n);
            if a >= 0 && b >= 0 && (a as usize) < len && (b as usize) < len {
                corr[(n + n_half as i64) as usize] = work[a as usize].conj() * work[b as usize];
            }
        }
        czt.process(&corr, &mut row, &mut scratch);
        values.extend(row.iter().zip(&post).map(|(v, s)| v * s));
    }
    Field::new(*grid, hb, values)
}

/// `P(z_j) = ∑_m W(z_j, p_m) Δp`.
pub fn marginal_position(w: &RealField) -> Vec<f64> {
    let dp = w.grid().p.step();
    (0..w.grid().z.len()).map(|j| w.row(j).iter().sum::<f64>() * dp).collect()
}

/// `P̃(p_m) = ∑_j W(z_j, p_m) Δz`.
pub fn marginal_momentum(w: &RealField) -> Vec<f64> {
    let g = w.grid();
    let mut out = vec![0.0; g.p.len()];
    for j in 0..g.z.len() {
        for (o, v) in out.iter_mut().zip(w.row(j)) {
            *o += v;
        }
    }
    let dz = g.z.step();
    out.iter_mut().for_each(|v| *v *= dz);
    out
}

/// `2πħ ∑∑ W1 W2 Δz Δp`, which equals `|⟨ψ1|ψ2⟩|²` for pure states.
pub fn phase_space_overlap(w1: &RealField, w2: &RealField) -> Result<f64> {
    w1.ensure_compatible(w2)?;
    let s: f64 = w1.values().iter().zip(w2.values()).map(|(a, b)| a * b).sum();
    Ok(2.0 * PI * w1.hbar() * s * w1.grid().cell_area())
}

/// Value of the characteristic function, split as `|⟨D⟩| e^{iβ}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Characteristic {
    pub value: Complex64,
}

impl Characteristic {
    pub fn amplitude(&self) -> f64 {
        self.value.norm()
    }

    /// The phase β.
    pub fn beta(&self) -> f64 {
        self.value.arg()
    }
}

/// `W̃(ξ,q) = ∑∑ e^{i(ξp + qz)/ħ} W Δz Δp`, the phase-space average of the displacement
/// operator `exp(i(ξp̂ + qẑ)/ħ)`.
pub fn characteristic_transform<T: Sample>(w: &Field<T>, xi: f64, q: f64) -> Characteristic {
    let g = w.grid();
    let hb = w.hbar();
    let ep = phases(&g.p, xi / hb);
    let ez = phases(&g.z, q / hb);
    let mut acc = Complex64::new(0.0, 0.0);
    for (j, ezj) in ez.iter().enumerate() {
        let row: Complex64 = w.row(j).iter().zip(&ep).map(|(v, e)| v.to_complex() * e).sum();
        acc += row * ezj;
    }
    Characteristic { value: acc * g.cell_area() }
}

fn phases(axis: &Axis, rate: f64) -> Vec<Complex64> {
    axis.points().map(|x| Complex64::from_polar(1.0, rate * x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wavefunction::GaussianState;

    fn setup() -> (GaussianState, WaveFunction, GridSpec) {
        let g = GaussianState::new(0.0, 0.0, 1.0, 1.0).unwrap();
        let psi = g.sample(Axis::new(-12.0, 12.0, 256).unwrap()).unwrap();
        let grid = GridSpec::new(-8.0, 8.0, 64, -4.0, 4.0, 64).unwrap();
        (g, psi, grid)
    }

    #[test]
    fn gaussian_matches_closed_form() {
        let (g, psi, grid) = setup();
        let w = wigner_transform(&psi, &grid).unwrap();
        for j in 0..grid.z.len() {
            for m in 0..grid.p.len() {
                let (z, p) = (grid.z.point(j), grid.p.point(m));
                assert!((w.get(j, m) - g.wigner(z, p)).abs() < 1e-10, "({z},{p})");
            }
        }
    }

    #[test]
    fn raw_transform_is_real() {
        let g = GaussianState::new(0.5, 1.3, 0.7, 1.0).unwrap();
        let psi = g.sample(Axis::new(-10.0, 10.0, 256).unwrap()).unwrap();
        let grid = GridSpec::new(-4.0, 4.0, 32, -3.0, 5.0, 64).unwrap();
        let raw = wigner_transform_raw(&psi, &grid, &WignerTolerances::default()).unwrap();
        let peak = raw.re().max_abs();
        assert!(raw.max_imag() < 1e-10 * peak);
    }

    #[test]
    fn input_validation() {
        let (g, _, grid) = setup();
        let narrow = g.sample(Axis::new(-3.0, 3.0, 64).unwrap()).unwrap();
        assert!(matches!(wigner_transform(&narrow.normalize().unwrap(), &grid), Err(Error::GridTooSmall { .. })));
        let wide = g.sample(Axis::new(-12.0, 12.0, 256).unwrap()).unwrap().scaled(1.1);
        assert!(matches!(wigner_transform(&wide, &grid), Err(Error::NonNormalized { .. })));
    }

    #[test]
    fn overlap_rejects_mismatched_grids() {
        let (_, psi, grid) = setup();
        let w = wigner_transform(&psi, &grid).unwrap();
        let other = GridSpec::new(-8.0, 8.0, 64, -4.0, 4.0, 32).unwrap();
        let w2 = wigner_transform(&psi, &other).unwrap();
        assert!(matches!(phase_space_overlap(&w, &w2), Err(Error::GridMismatch(_))));
    }
}
