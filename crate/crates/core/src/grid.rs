//! Uniform sampling grids.
//!
//! Every axis is half-open: `n` points `min + j * step` for `j in 0..n`, with
//! `step = (max - min) / n`. This is the periodic layout FFTs expect, so the
//! point `max` itself is never sampled.

use crate::error::{Error, Result};

/// A uniform, half-open, power-of-two sampled axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    min: f64,
    max: f64,
    n: usize,
}

impl Axis {
    pub fn new(min: f64, max: f64, n: usize) -> Result<Self> {
        if !(min.is_finite() && max.is_finite()) {
            return Err(Error::InvalidGrid(format!("non-finite bounds [{min}, {max})")));
        }
        if max <= min {
            return Err(Error::InvalidGrid(format!("max {max} must exceed min {min}")));
        }
        if n < 8 || !n.is_power_of_two() {
            return Err(Error::InvalidGrid(format!(
                "point count {n} must be a power of two and at least 8"
            )));
        }
        Ok(Self { min, max, n })
    }

    /// Axis of `n` points with spacing `step` centred (to within half a step) on `center`.
    pub fn centered(center: f64, step: f64, n: usize) -> Result<Self> {
        let half = step * (n / 2) as f64;
        Self::new(center - half, center - half + step * n as f64, n)
    }

    pub fn min(&self) -> f64 {
        self.min
    }

    pub fn max(&self) -> f64 {
        self.max
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn step(&self) -> f64 {
        (self.max - self.min) / self.n as f64
    }

    pub fn point(&self, j: usize) -> f64 {
        self.min + j as f64 * self.step()
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        (0..self.n).map(move |j| self.point(j))
    }

    /// Fractional index of `x`; integer values land exactly on samples.
    pub fn fractional_index(&self, x: f64) -> f64 {
        (x - self.min) / self.step()
    }

    /// Nearest sample index, if `x` lies within half a step of the sampled range.
    pub fn nearest(&self, x: f64) -> Option<usize> {
        let f = self.fractional_index(x).round();
        if f >= 0.0 && (f as usize) < self.n {
            Some(f as usize)
        } else {
            None
        }
    }

    /// Same axis with `n` scaled by `factor` (a power of two), keeping the bounds.
    pub fn refined(&self, factor: usize) -> Result<Self> {
        Self::new(self.min, self.max, self.n * factor)
    }
}

/// Rectangular (z, p) phase-space grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub z: Axis,
    pub p: Axis,
}

impl GridSpec {
    pub fn new(z_min: f64, z_max: f64, n_z: usize, p_min: f64, p_max: f64, n_p: usize) -> Result<Self> {
        Ok(Self {
            z: Axis::new(z_min, z_max, n_z)?,
            p: Axis::new(p_min, p_max, n_p)?,
        })
    }

    pub fn from_axes(z: Axis, p: Axis) -> Self {
        Self { z, p }
    }

    /// Phase-space area of one cell, `dz * dp`.
    pub fn cell_area(&self) -> f64 {
        self.z.step() * self.p.step()
    }

    pub fn len(&self) -> usize {
        self.z.len() * self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Flat index of sample (j, m); storage is z-major.
    #[inline]
    pub fn index(&self, j: usize, m: usize) -> usize {
        j * self.p.len() + m
    }

    pub fn ensure_same(&self, other: &GridSpec) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::GridMismatch(format!("{self:?} vs {other:?}")))
        }
    }
}
