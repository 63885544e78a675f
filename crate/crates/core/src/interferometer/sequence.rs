use crate::error::{Error, Result};

/// Timing, wave number and laser phases of the three-pulse sequence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseSequence {
    /// Time between pulses.
    pub t: f64,
    pub phi0: f64,
    pub phi_t: f64,
    pub phi_2t: f64,
    /// Effective wave number; a transition g1 → g2 imparts +ħk.
    pub k: f64,
}

impl PulseSequence {
    pub fn new(t: f64, k: f64) -> Result<Self> {
        Self { t, phi0: 0.0, phi_t: 0.0, phi_2t: 0.0, k }.validated()
    }

    pub fn validated(self) -> Result<Self> {
        if !(self.t.is_finite() && self.t > 0.0) {
            return Err(Error::InvalidParameter(format!("pulse separation T must be positive, got {}", self.t)));
        }
        if ![self.phi0, self.phi_t, self.phi_2t, self.k].iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidParameter("non-finite laser phase or wave number".into()));
        }
        Ok(self)
    }

    /// Phases `(φ(0), φ(T), φ(2T))`.
    pub fn with_phases(self, phi0: f64, phi_t: f64, phi_2t: f64) -> Self {
        Self { phi0, phi_t, phi_2t, ..self }
    }

    /// Puts the whole laser phase difference on the last pulse.
    pub fn with_laser_phase(self, delta_phi: f64) -> Self {
        self.with_phases(0.0, 0.0, delta_phi)
    }

    /// Samples the phases from a laser phase history `φ(t)`.
    pub fn from_phase_fn(t: f64, k: f64, phi: impl Fn(f64) -> f64) -> Result<Self> {
        Ok(Self::new(t, k)?.with_phases(phi(0.0), phi(t), phi(2.0 * t)))
    }
}

/// `δφ = φ(2T) − 2φ(T) + φ(0)`.
pub fn laser_phase_combination(seq: &PulseSequence) -> f64 {
    seq.phi_2t - 2.0 * seq.phi_t + seq.phi0
}
