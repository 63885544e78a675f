use crate::error::{Error, Result};

use super::PhysParams;

/// Below this `|x| t²` the trigonometric kernels switch to their Taylor series.
const TAYLOR_SWITCH: f64 = 1e-8;

/// `(C, S, Cm) = (cos √x t, sin(√x t)/√x, (1 − cos √x t)/x)`, continued to x ≤ 0.
pub fn trig_kernels(x: f64, t: f64) -> (f64, f64, f64) {
    let u = x * t * t;
    if u.abs() < TAYLOR_SWITCH {
        let c = 1.0 - u / 2.0 + u * u / 24.0;
        let s = t * (1.0 - u / 6.0 + u * u / 120.0);
        let cm = 0.5 * t * t * (1.0 - u / 12.0 + u * u / 360.0);
        return (c, s, cm);
    }
    if x > 0.0 {
        let w = x.sqrt();
        let half = (0.5 * w * t).sin();
        ((w * t).cos(), (w * t).sin() / w, 2.0 * half * half / x)
    } else {
        let w = (-x).sqrt();
        let half = (0.5 * w * t).sinh();
        ((w * t).cosh(), (w * t).sinh() / w, 2.0 * half * half / (-x))
    }
}

/// Affine phase-space map `x ↦ M x + b` generated by a quadratic Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineFlow {
    pub matrix: [[f64; 2]; 2],
    pub offset: [f64; 2],
    pub duration: f64,
}

impl AffineFlow {
    pub fn identity() -> Self {
        Self { matrix: [[1.0, 0.0], [0.0, 1.0]], offset: [0.0, 0.0], duration: 0.0 }
    }

    /// Instantaneous momentum displacement by `dp`.
    pub fn momentum_kick(dp: f64) -> Self {
        Self { offset: [0.0, dp], ..Self::identity() }
    }

    pub fn apply(&self, z: f64, p: f64) -> (f64, f64) {
        let m = &self.matrix;
        (m[0][0] * z + m[0][1] * p + self.offset[0], m[1][0] * z + m[1][1] * p + self.offset[1])
    }

    pub fn det(&self) -> f64 {
        let m = &self.matrix;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    /// `next ∘ self`: first `self`, then `next`.
    pub fn then(&self, next: &AffineFlow) -> AffineFlow {
        let (a, b) = (&next.matrix, &self.matrix);
        let mut m = [[0.0; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        let (oz, op) = next.apply(self.offset[0], self.offset[1]);
        AffineFlow { matrix: m, offset: [oz, op], duration: self.duration + next.duration }
    }

    pub fn inverse(&self) -> AffineFlow {
        let m = &self.matrix;
        let d = self.det();
        let inv = [[m[1][1] / d, -m[0][1] / d], [-m[1][0] / d, m[0][0] / d]];
        let oz = -(inv[0][0] * self.offset[0] + inv[0][1] * self.offset[1]);
        let op = -(inv[1][0] * self.offset[0] + inv[1][1] * self.offset[1]);
        AffineFlow { matrix: inv, offset: [oz, op], duration: -self.duration }
    }
}

/// Newtonian flow in `V(z) = m_g g z + ½ m_g Γ z²` over a time `t ≥ 0`.
pub fn classical_flow(params: &PhysParams, t: f64) -> Result<AffineFlow> {
    if !(t.is_finite() && t >= 0.0) {
        return Err(Error::InvalidParameter(format!("flow time must be non-negative, got {t}")));
    }
    let (m, gp, gam) = (params.m_i, params.g_eff(), params.gamma_eff());
    let (c, s, cm) = trig_kernels(gam, t);
    Ok(AffineFlow {
        matrix: [[c, s / m], [-m * gam * s, c]],
        offset: [-gp * cm, -m * gp * s],
        duration: t,
    })
}
