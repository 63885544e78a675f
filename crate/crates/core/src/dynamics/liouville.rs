use crate::error::{Error, Result};
use crate::fd::{derivative, Direction};
use crate::field::RealField;

use super::{PhysParams, PolynomialPotential};

/// `(∂_t + (p/m_i)∂_z − V′(z)∂_p) W` at the middle sample of an equally spaced time
/// series, with a centred time difference and fourth-order phase-space stencils.
pub fn classical_liouville_residual(
    series: &[RealField],
    dt: f64,
    params: &PhysParams,
    potential: &PolynomialPotential,
) -> Result<RealField> {
    if series.len() < 3 || series.len() % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "need an odd number (≥ 3) of time samples, got {}",
            series.len()
        )));
    }
    if !(dt.is_finite() && dt > 0.0) {
        return Err(Error::InvalidParameter(format!("time step must be positive, got {dt}")));
    }
    for w in series {
        series[0].ensure_compatible(w)?;
    }
    let mid = series.len() / 2;
    let (before, now, after) = (&series[mid - 1], &series[mid], &series[mid + 1]);
    let g = now.grid();
    let dz = derivative(now, Direction::Z, 1);
    let dp = derivative(now, Direction::P, 1);
    let mut out = Vec::with_capacity(g.len());
    for j in 0..g.z.len() {
        let force = potential.derivative(1, g.z.point(j));
        for m in 0..g.p.len() {
            let i = g.index(j, m);
            let dt_w = (after.values()[i] - before.values()[i]) / (2.0 * dt);
            out.push(dt_w + g.p.point(m) / params.m_i * dz[i] - force * dp[i]);
        }
    }
    RealField::new(*g, now.hbar(), out)
}

/// `Σ_{l≥1} (−1)^l (ħ/2)^{2l}/(2l+1)! · V^{(2l+1)}(z) ∂_p^{2l+1} W`: the odd-derivative
/// quantum corrections to the Liouville operator.
pub fn quantum_correction_residual(w: &RealField, potential: &PolynomialPotential, params: &PhysParams) -> RealField {
    series_operator(w, potential, params.hbar, 1)
}

/// Shared engine for the odd (`parity = 1`) and even (`parity = 0`) operator series
/// `Σ_{l≥1} (−1)^l (ħ/2)^{2l}/(2l+parity)! · V^{(2l+parity)} ∂_p^{2l+parity}`.
pub(crate) fn series_operator(w: &RealField, potential: &PolynomialPotential, hbar: f64, parity: usize) -> RealField {
    let g = w.grid();
    let mut out = vec![0.0; g.len()];
    let mut l = 1;
    while 2 * l + parity <= potential.degree() {
        let order = 2 * l + parity;
        let fact: f64 = (1..=order).map(|v| v as f64).product();
        let coef = if l % 2 == 1 { -1.0 } else { 1.0 } * (0.5 * hbar).powi(2 * l as i32) / fact;
        let d = derivative(w, Direction::P, order);
        for j in 0..g.z.len() {
            let vder = potential.derivative(order, g.z.point(j));
            if vder == 0.0 {
                continue;
            }
            for m in 0..g.p.len() {
                let i = g.index(j, m);
                out[i] += coef * vder * d[i];
            }
        }
        l += 1;
    }
    RealField::new(*g, w.hbar(), out).expect("finite inputs give finite output")
}
