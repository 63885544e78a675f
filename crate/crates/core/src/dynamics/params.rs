use crate::error::{Error, Result};

/// Physical constants of a run.
///
/// `g` and `gamma` are the accelerations felt by a unit gravitational charge; what the
/// atom actually experiences is scaled by `m_g/m_i` (see [`PhysParams::g_eff`]).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysParams {
    pub m_i: f64,
    pub m_g: f64,
    pub g: f64,
    pub gamma: f64,
    pub hbar: f64,
    /// Effective laser wave number.
    pub k: f64,
}

impl Default for PhysParams {
    fn default() -> Self {
        Self { m_i: 1.0, m_g: 1.0, g: 0.0, gamma: 0.0, hbar: 1.0, k: 0.0 }
    }
}

impl PhysParams {
    pub fn new(m_i: f64, m_g: f64, g: f64, gamma: f64, hbar: f64, k: f64) -> Result<Self> {
        Self { m_i, m_g, g, gamma, hbar, k }.validated()
    }

    pub fn validated(self) -> Result<Self> {
        let pos = |name: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!("{name} must be positive and finite, got {v}")))
            }
        };
        pos("m_i", self.m_i)?;
        pos("m_g", self.m_g)?;
        pos("hbar", self.hbar)?;
        for (name, v) in [("g", self.g), ("gamma", self.gamma), ("k", self.k)] {
            if !v.is_finite() {
                return Err(Error::InvalidParameter(format!("{name} must be finite, got {v}")));
            }
        }
        Ok(self)
    }

    pub fn mass_ratio(&self) -> f64 {
        self.m_g / self.m_i
    }

    /// `g′ = (m_g/m_i) g`.
    pub fn g_eff(&self) -> f64 {
        self.mass_ratio() * self.g
    }

    /// `Γ′ = (m_g/m_i) Γ`.
    pub fn gamma_eff(&self) -> f64 {
        self.mass_ratio() * self.gamma
    }

    /// `ħk²/(2m_i)`.
    pub fn recoil_frequency(&self, k: f64) -> f64 {
        self.hbar * k * k / (2.0 * self.m_i)
    }
}
