use crate::error::{Error, Result};

use super::PhysParams;

/// `V(z) = Σ_j V_j z^j`, degree ≤ 6, optionally with an impenetrable wall below `wall`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialPotential {
    coeffs: Vec<f64>,
    wall: Option<f64>,
}

pub const MAX_DEGREE: usize = 6;

impl PolynomialPotential {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        let mut coeffs = coeffs;
        while coeffs.len() > 1 && coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.len() > MAX_DEGREE + 1 {
            return Err(Error::InvalidParameter(format!(
                "potential degree {} exceeds {MAX_DEGREE}",
                coeffs.len() - 1
            )));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidParameter("non-finite potential coefficient".into()));
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Ok(Self { coeffs, wall: None })
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![0.0], wall: None }
    }

    /// `m_g g z + ½ m_g Γ z²`.
    pub fn gravity(params: &PhysParams) -> Self {
        Self::new(vec![0.0, params.m_g * params.g, 0.5 * params.m_g * params.gamma]).expect("finite params")
    }

    /// `½ m ω² z²`.
    pub fn harmonic(mass: f64, omega: f64) -> Self {
        Self::new(vec![0.0, 0.0, 0.5 * mass * omega * omega]).expect("finite params")
    }

    /// Adds an infinitely high wall: `V = ∞` for `z < wall`.
    pub fn with_wall(mut self, wall: f64) -> Self {
        self.wall = Some(wall);
        self
    }

    pub fn wall(&self) -> Option<f64> {
        self.wall
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn value(&self, z: f64) -> f64 {
        if matches!(self.wall, Some(w) if z < w) {
            return f64::INFINITY;
        }
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * z + c)
    }

    /// `V^{(order)}(z)` of the polynomial part (the wall is ignored).
    pub fn derivative(&self, order: usize, z: f64) -> f64 {
        let mut acc = 0.0;
        for (j, c) in self.coeffs.iter().enumerate().skip(order).rev() {
            let falling: f64 = ((j - order + 1)..=j).map(|v| v as f64).product();
            acc = acc * z + c * falling;
        }
        acc
    }
}
