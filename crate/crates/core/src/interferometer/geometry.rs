use crate::dynamics::{classical_flow, trig_kernels, AffineFlow, PhysParams};
use crate::error::Result;

use super::PulseSequence;

/// Path separations and the discrete trigonometric differences behind them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Separation {
    /// `z_u − z_l`.
    pub delta_z: f64,
    /// `p_u − p_l`.
    pub delta_p: f64,
    /// `2 s (c − 1)` with `s = sin √Γ′T`, `c = cos √Γ′T`.
    pub delta_s: f64,
    /// `2 c (c − 1)`.
    pub delta_c: f64,
}

/// Closed-form separations. Everything is written through `(1 − c)/Γ′` so that Γ → 0
/// is regular; for Γ′ < 0 the hyperbolic continuation is used and `δs` keeps the
/// relation `Δz = (ħk/m_i) δs/√|Γ′|`.
pub fn separation(seq: &PulseSequence, params: &PhysParams) -> Result<Separation> {
    let seq = seq.validated()?;
    let params = params.validated()?;
    let gam = params.gamma_eff();
    let (c, s, cm) = trig_kernels(gam, seq.t);
    let hk = params.hbar * seq.k;
    let delta_z = -2.0 * hk / params.m_i * gam * s * cm;
    let delta_p = -2.0 * hk * gam * c * cm;
    Ok(Separation {
        delta_z,
        delta_p,
        delta_s: -2.0 * gam * gam.abs().sqrt() * s * cm,
        delta_c: -2.0 * gam * c * cm,
    })
}

/// Phase-space end points at 2T of the three branches started from `(z0, p0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EndpointReport {
    pub z_u: f64,
    pub p_u: f64,
    pub z_l: f64,
    pub p_l: f64,
    pub z_i: f64,
    pub p_i: f64,
    pub delta_z: f64,
    pub delta_p: f64,
    pub delta_s: f64,
    pub delta_c: f64,
}

/// Upper and lower endpoints sit symmetrically about the interference endpoint
/// `(z̄(z0, p0 + ½ħk; 2T), p̄(…; 2T) − ½ħk)`.
pub fn endpoints(seq: &PulseSequence, params: &PhysParams, z0: f64, p0: f64) -> Result<EndpointReport> {
    let sep = separation(seq, params)?;
    let half = 0.5 * params.hbar * seq.k;
    let (z_i, p) = classical_flow(params, 2.0 * seq.t)?.apply(z0, p0 + half);
    let p_i = p - half;
    Ok(EndpointReport {
        z_u: z_i + 0.5 * sep.delta_z,
        p_u: p_i + 0.5 * sep.delta_p,
        z_l: z_i - 0.5 * sep.delta_z,
        p_l: p_i - 0.5 * sep.delta_p,
        z_i,
        p_i,
        delta_z: sep.delta_z,
        delta_p: sep.delta_p,
        delta_s: sep.delta_s,
        delta_c: sep.delta_c,
    })
}

/// `g′Δp/(ħΓ′)`, evaluated without the 0/0 at Γ′ = 0 (limit `−k g′ T²`).
pub fn gravity_phase(seq: &PulseSequence, params: &PhysParams) -> f64 {
    let (c, _, cm) = trig_kernels(params.gamma_eff(), seq.t);
    -2.0 * params.g_eff() * seq.k * c * cm
}

/// `δφ(z0, p0) = g′Δp/(ħΓ′) + ½kΔz + (Δp z0 + Δz p0)/ħ`.
pub fn interference_phase(seq: &PulseSequence, params: &PhysParams, z0: f64, p0: f64) -> Result<f64> {
    let sep = separation(seq, params)?;
    Ok(gravity_phase(seq, params) + 0.5 * seq.k * sep.delta_z + (sep.delta_p * z0 + sep.delta_z * p0) / params.hbar)
}

/// Which pair of kick/flow histories a Wigner function follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Path {
    Upper,
    Lower,
    Interference,
}

/// Total affine map of a path from t = 0 to t = 2T.
pub fn path_flow(path: Path, seq: &PulseSequence, params: &PhysParams) -> Result<AffineFlow> {
    let seq = seq.validated()?;
    let hk = params.hbar * seq.k;
    let f = |t| classical_flow(params, t);
    let kick = |j: f64| AffineFlow::momentum_kick(j * hk);
    Ok(match path {
        Path::Upper => kick(1.0).then(&f(seq.t)?).then(&kick(-1.0)).then(&f(seq.t)?),
        Path::Lower => f(seq.t)?.then(&kick(1.0)).then(&f(seq.t)?).then(&kick(-1.0)),
        Path::Interference => kick(0.5).then(&f(2.0 * seq.t)?).then(&kick(-0.5)),
    })
}
