use num_complex::Complex64;

use crate::dynamics::transport::{bilinear, check_loss, pull_back};
use crate::dynamics::{AffineFlow, PhysParams, Source};
use crate::error::{Error, Result};
use crate::field::{ComplexField, Field, Sample};
use crate::grid::GridSpec;
use crate::wavefunction::GaussianState;

use super::geometry::{interference_phase, path_flow, Path};
use super::PulseSequence;

fn check_kick_index(j: f64) -> Result<()> {
    if [-1.0, -0.5, 0.5, 1.0].contains(&j) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("kick index must be one of ±1/2, ±1, got {j}")))
    }
}

/// `W′(z, p) = W(z, p − jħk)` for a tabulated field (linear interpolation along p).
pub fn kick<T: Sample>(w: &Field<T>, j: f64, k: f64) -> Result<Field<T>> {
    check_kick_index(j)?;
    pull_back(w, &AffineFlow::momentum_kick(j * w.hbar() * k), w.grid())
}

/// Exact momentum kick of a Gaussian.
pub fn kick_gaussian(state: &GaussianState, j: f64, k: f64) -> Result<GaussianState> {
    check_kick_index(j)?;
    Ok(state.displaced(0.0, j * state.hbar * k))
}

/// Wigner function of one branch at 2T, sampled on `grid`.
///
/// Upper and lower paths are pure pull-backs of `W0` through their kick/flow history.
/// The interference path is the pull-back through the half-kicked flow multiplied by
/// `e^{iδφ(z0, p0)}` evaluated at the pre-image.
pub fn propagate_path(
    source: Source<'_>,
    path: Path,
    seq: &PulseSequence,
    params: &PhysParams,
    grid: &GridSpec,
) -> Result<ComplexField> {
    let params = params.validated()?;
    let flow = path_flow(path, seq, &params)?;
    if let Source::Tabulated(w) = source {
        check_loss(w, &flow, grid)?;
    }
    let inv = flow.inverse();
    let hbar = source.hbar();
    // δφ is affine in (z0, p0); read off its coefficients once.
    let phase0 = interference_phase(seq, &params, 0.0, 0.0)?;
    let dz_coef = interference_phase(seq, &params, 1.0, 0.0)? - phase0;
    let dp_coef = interference_phase(seq, &params, 0.0, 1.0)? - phase0;
    let eval = |z0: f64, p0: f64| -> f64 {
        match source {
            Source::Gaussian(g) => g.wigner(z0, p0),
            Source::Tabulated(w) => bilinear(w, z0, p0),
        }
    };
    Field::from_fn(*grid, hbar, |z, p| {
        let (z0, p0) = inv.apply(z, p);
        let w = eval(z0, p0);
        match path {
            Path::Interference => Complex64::from_polar(w, phase0 + dz_coef * z0 + dp_coef * p0),
            _ => Complex64::new(w, 0.0),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kick_round_trip() {
        let g = GaussianState::new(0.0, 0.3, 1.0, 1.0).unwrap();
        let back = kick_gaussian(&kick_gaussian(&g, 0.5, 7.0).unwrap(), -0.5, 7.0).unwrap();
        assert!((back.p0 - g.p0).abs() < 1e-12);
        assert!(kick_gaussian(&g, 2.0, 1.0).is_err());
    }

    #[test]
    fn tabulated_kick_moves_the_peak() {
        let g = GaussianState::new(0.0, 0.0, 1.0, 1.0).unwrap();
        let grid = GridSpec::new(-8.0, 8.0, 64, -8.0, 8.0, 128).unwrap();
        let w = g.wigner_field(grid).unwrap();
        let k = 2.0 * grid.p.step() * 8.0;
        let moved = kick(&w, 1.0, k).unwrap();
        let (_, mp) = moved.mean();
        assert!((mp - k).abs() < 1e-10);
        let (_, vp) = moved.variance();
        assert!((vp - 0.25).abs() < 1e-8);
    }
}
