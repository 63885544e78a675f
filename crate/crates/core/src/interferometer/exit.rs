use std::fmt::Write as _;

use num_complex::Complex64;

use crate::dynamics::PhysParams;
use crate::error::Result;
use crate::field::{ComplexField, RealField};
use crate::grid::{Axis, GridSpec};
use crate::wavefunction::{GaussianState, WaveFunction};
use crate::wigner::{characteristic_transform, wigner_transform, Characteristic};

use super::geometry::{gravity_phase, separation};
use super::{laser_phase_combination, PulseSequence};

/// Above this Γ′T² the weak-gradient expansion is flagged as unreliable.
pub const WEAK_REGIME_LIMIT: f64 = 0.3;

/// Initial centre-of-mass state.
#[derive(Debug, Clone, PartialEq)]
pub enum InitialState {
    Gaussian(GaussianState),
    Wave(WaveFunction),
}

impl InitialState {
    /// `W̃0(ξ, q)`. Gaussians use the closed form; sampled states go through the
    /// Wigner transform on the state's own band-limited phase-space grid.
    pub fn characteristic(&self, xi: f64, q: f64) -> Result<Characteristic> {
        match self {
            InitialState::Gaussian(g) => Ok(Characteristic { value: g.characteristic(xi, q) }),
            InitialState::Wave(psi) => {
                let za = *psi.grid();
                let n = za.len();
                let dp = 2.0 * std::f64::consts::PI * psi.hbar() / (n as f64 * za.step());
                let pa = Axis::centered(psi.mean_momentum(), dp, n)?;
                let w = wigner_transform(psi, &GridSpec::from_axes(za, pa))?;
                Ok(characteristic_transform(&w, xi, q))
            }
        }
    }
}

/// Terms of the weak-gradient expansion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeakGradientTerms {
    /// `δφ_g = (m_g/m_i) k g T²`.
    pub delta_phi_g: f64,
    /// `δφ_g (1 − 7/12 Γ′T²)`.
    pub delta_phi_g_tilde: f64,
    /// `(m_g/m_i) Γ T² · (ħk²/2m_i) T`.
    pub recoil_phase: f64,
    /// `−(m_g/m_i)(ħk/m_i) Γ T³`.
    pub delta_z_tilde: f64,
    /// `−(m_g/m_i) ħk Γ T²`.
    pub delta_p_tilde: f64,
    /// `Γ′T²`.
    pub gamma_t2: f64,
}

impl WeakGradientTerms {
    pub fn new(seq: &PulseSequence, params: &PhysParams) -> Self {
        let t = seq.t;
        let ratio = params.mass_ratio();
        let gamma_t2 = params.gamma_eff() * t * t;
        let delta_phi_g = ratio * seq.k * params.g * t * t;
        let hk = params.hbar * seq.k;
        Self {
            delta_phi_g,
            delta_phi_g_tilde: delta_phi_g * (1.0 - 7.0 / 12.0 * gamma_t2),
            recoil_phase: ratio * params.gamma * t * t * params.recoil_frequency(seq.k) * t,
            delta_z_tilde: -ratio * hk / params.m_i * params.gamma * t * t * t,
            delta_p_tilde: -ratio * hk * params.gamma * t * t,
            gamma_t2,
        }
    }

    pub fn outside_weak_regime(&self) -> bool {
        self.gamma_t2.abs() >= WEAK_REGIME_LIMIT
    }
}

/// Exit-port observables of one interferometer run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExitReport {
    pub p_g1: f64,
    /// `|⟨D⟩|` at the separation used.
    pub contrast: f64,
    pub beta: f64,
    /// Argument of the cosine in `P_g1 = ½[1 + contrast · cos(total_phase)]`.
    pub total_phase: f64,
    pub laser_phase: f64,
    /// Separation used for the contrast (exact, or the weak-gradient approximation).
    pub delta_z: f64,
    pub delta_p: f64,
    pub weak_gradient_terms: WeakGradientTerms,
}

const KEYS: [&str; 14] = [
    "P_g1",
    "P_g2",
    "contrast",
    "beta",
    "total_phase",
    "laser_phase",
    "delta_z",
    "delta_p",
    "delta_phi_g",
    "delta_phi_g_tilde",
    "recoil_phase",
    "delta_z_tilde",
    "delta_p_tilde",
    "gamma_t2",
];

impl ExitReport {
    /// The other port, by unitarity.
    pub fn p_g2(&self) -> f64 {
        1.0 - self.p_g1
    }

    fn fields(&self) -> [f64; 14] {
        let w = &self.weak_gradient_terms;
        [
            self.p_g1,
            self.p_g2(),
            self.contrast,
            self.beta,
            self.total_phase,
            self.laser_phase,
            self.delta_z,
            self.delta_p,
            w.delta_phi_g,
            w.delta_phi_g_tilde,
            w.recoil_phase,
            w.delta_z_tilde,
            w.delta_p_tilde,
            w.gamma_t2,
        ]
    }

    /// One `key = value` per line.
    pub fn to_key_values(&self) -> String {
        let mut s = String::new();
        for (k, v) in KEYS.iter().zip(self.fields()) {
            writeln!(s, "{k} = {v:.16e}").expect("writing to a String cannot fail");
        }
        s
    }

    pub fn csv_header() -> String {
        KEYS.join(",")
    }

    pub fn csv_row(&self) -> String {
        self.fields().iter().map(|v| format!("{v:.16e}")).collect::<Vec<_>>().join(",")
    }
}

/// `P_g1 = ½[1 + |W̃0(Δz,Δp)| cos(δφ + g′Δp/(ħΓ′) + ½kΔz + β)]`, valid for any Γ.
pub fn exit_probability_exact(seq: &PulseSequence, params: &PhysParams, psi0: &InitialState) -> Result<ExitReport> {
    let sep = separation(seq, params)?;
    let ch = psi0.characteristic(sep.delta_z, sep.delta_p)?;
    let laser = laser_phase_combination(seq);
    let total = laser + gravity_phase(seq, params) + 0.5 * seq.k * sep.delta_z + ch.beta();
    Ok(ExitReport {
        p_g1: 0.5 * (1.0 + ch.amplitude() * total.cos()),
        contrast: ch.amplitude(),
        beta: ch.beta(),
        total_phase: total,
        laser_phase: laser,
        delta_z: sep.delta_z,
        delta_p: sep.delta_p,
        weak_gradient_terms: WeakGradientTerms::new(seq, params),
    })
}

/// First-order-in-Γ version: `½[1 + |W̃0(Δz̃,Δp̃)| cos(δφ − δφ̃_g − recoil + β)]`.
/// Check `weak_gradient_terms.outside_weak_regime()` before trusting it.
pub fn exit_probability_weak(seq: &PulseSequence, params: &PhysParams, psi0: &InitialState) -> Result<ExitReport> {
    let seq = seq.validated()?;
    let params = params.validated()?;
    let w = WeakGradientTerms::new(&seq, &params);
    let ch = psi0.characteristic(w.delta_z_tilde, w.delta_p_tilde)?;
    let laser = laser_phase_combination(&seq);
    let total = laser - w.delta_phi_g_tilde - w.recoil_phase + ch.beta();
    Ok(ExitReport {
        p_g1: 0.5 * (1.0 + ch.amplitude() * total.cos()),
        contrast: ch.amplitude(),
        beta: ch.beta(),
        total_phase: total,
        laser_phase: laser,
        delta_z: w.delta_z_tilde,
        delta_p: w.delta_p_tilde,
        weak_gradient_terms: w,
    })
}

/// `W_g1 = ¼[W_u + W_l + e^{iδφ} W_i + e^{−iδφ} W_i*]` with `δφ` the laser phase.
pub fn assemble_exit_wigner(
    w_u: &ComplexField,
    w_l: &ComplexField,
    w_i: &ComplexField,
    laser_phase: f64,
) -> Result<RealField> {
    w_u.ensure_compatible(w_l)?;
    w_u.ensure_compatible(w_i)?;
    let rot = Complex64::from_polar(1.0, laser_phase);
    let values = w_u
        .values()
        .iter()
        .zip(w_l.values())
        .zip(w_i.values())
        .map(|((u, l), i)| 0.25 * (u.re + l.re + 2.0 * (rot * i).re))
        .collect();
    RealField::new(*w_u.grid(), w_u.hbar(), values)
}
