//! Least-squares fit of interference fringes `P(δφ) = a + b cos δφ + c sin δφ`.

use crate::error::{Error, Result};

/// Fitted fringe `P = offset + ½ contrast · cos(δφ − phase)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FringeFit {
    pub offset: f64,
    pub contrast: f64,
    pub phase: f64,
    /// Largest |data − fit|.
    pub max_residual: f64,
}

impl FringeFit {
    pub fn eval(&self, dphi: f64) -> f64 {
        self.offset + 0.5 * self.contrast * (dphi - self.phase).cos()
    }
}

pub fn fit_fringe(dphi: &[f64], p: &[f64]) -> Result<FringeFit> {
    if dphi.len() != p.len() || dphi.len() < 3 {
        return Err(Error::InvalidParameter("fringe fit needs ≥ 3 paired samples".into()));
    }
    // normal equations for the basis {1, cos, sin}
    let mut ata = [[0.0f64; 3]; 3];
    let mut atb = [0.0f64; 3];
    for (&x, &y) in dphi.iter().zip(p) {
        let row = [1.0, x.cos(), x.sin()];
        for i in 0..3 {
            atb[i] += row[i] * y;
            for j in 0..3 {
                ata[i][j] += row[i] * row[j];
            }
        }
    }
    let sol = solve3(ata, atb).ok_or_else(|| Error::InvalidParameter("degenerate fringe samples".into()))?;
    let (b, c) = (sol[1], sol[2]);
    let fit = FringeFit { offset: sol[0], contrast: 2.0 * b.hypot(c), phase: c.atan2(b), max_residual: 0.0 };
    let max_residual = dphi.iter().zip(p).map(|(&x, &y)| (y - fit.eval(x)).abs()).fold(0.0, f64::max);
    Ok(FringeFit { max_residual, ..fit })
}

fn solve3(mut a: [[f64; 3]; 3], mut b: [f64; 3]) -> Option<[f64; 3]> {
    for col in 0..3 {
        let piv = (col..3).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[piv][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for r in col + 1..3 {
            let f = a[r][col] / a[col][col];
            for c in col..3 {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    let mut x = [0.0; 3];
    for r in (0..3).rev() {
        let s: f64 = (r + 1..3).map(|c| a[r][c] * x[c]).sum();
        x[r] = (b[r] - s) / a[r][r];
    }
    Some(x)
}
