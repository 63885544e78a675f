use crate::error::{Error, Result};
use crate::field::{Field, RealField, Sample};
use crate::grid::GridSpec;
use crate::wavefunction::GaussianState;

use super::AffineFlow;

/// Largest fraction of `∬|W|` allowed to leave the grid under a pull-back.
pub const EXTRAPOLATION_LIMIT: f64 = 1e-3;

/// Initial phase-space distribution: either closed-form or tabulated.
#[derive(Debug, Clone, Copy)]
pub enum Source<'a> {
    Gaussian(&'a GaussianState),
    Tabulated(&'a RealField),
}

impl Source<'_> {
    pub fn hbar(&self) -> f64 {
        match self {
            Source::Gaussian(g) => g.hbar,
            Source::Tabulated(f) => f.hbar(),
        }
    }
}

/// `W(x) = W0(flow⁻¹(x))` on `grid`.
///
/// Gaussian sources are pulled back exactly; tabulated ones are interpolated
/// bilinearly and fail with [`Error::ExtrapolationLoss`] if too much of their mass is
/// carried off the grid.
pub fn transport(source: Source<'_>, flow: &AffineFlow, grid: &GridSpec) -> Result<RealField> {
    match source {
        Source::Gaussian(g) => {
            let inv = flow.inverse();
            RealField::from_fn(*grid, g.hbar, |z, p| {
                let (z0, p0) = inv.apply(z, p);
                g.wigner(z0, p0)
            })
        }
        Source::Tabulated(w) => pull_back(w, flow, grid),
    }
}

/// Bilinear pull-back of a tabulated field through `flow`, onto `grid`.
pub fn pull_back<T: Sample>(w: &Field<T>, flow: &AffineFlow, grid: &GridSpec) -> Result<Field<T>> {
    check_loss(w, flow, grid)?;
    let inv = flow.inverse();
    Field::from_fn(*grid, w.hbar(), |z, p| {
        let (z0, p0) = inv.apply(z, p);
        bilinear(w, z0, p0)
    })
}

/// Fraction of `∬|W|` whose forward image leaves `grid`; errors above the limit.
pub fn check_loss<T: Sample>(w: &Field<T>, flow: &AffineFlow, grid: &GridSpec) -> Result<f64> {
    let src = w.grid();
    let (zlo, zhi) = (grid.z.min(), grid.z.point(grid.z.len() - 1));
    let (plo, phi) = (grid.p.min(), grid.p.point(grid.p.len() - 1));
    let (mut total, mut lost) = (0.0, 0.0);
    for j in 0..src.z.len() {
        let z = src.z.point(j);
        for m in 0..src.p.len() {
            let a = w.get(j, m).abs();
            if a == 0.0 {
                continue;
            }
            total += a;
            let (z1, p1) = flow.apply(z, src.p.point(m));
            if !(z1 >= zlo && z1 <= zhi && p1 >= plo && p1 <= phi) {
                lost += a;
            }
        }
    }
    let frac = if total > 0.0 { lost / total } else { 0.0 };
    if frac > EXTRAPOLATION_LIMIT {
        return Err(Error::ExtrapolationLoss { lost: frac, limit: EXTRAPOLATION_LIMIT });
    }
    Ok(frac)
}

/// Bilinear interpolation; samples beyond the grid are zero.
pub fn bilinear<T: Sample>(w: &Field<T>, z: f64, p: f64) -> T {
    let g = w.grid();
    let fz = g.z.fractional_index(z);
    let fp = g.p.fractional_index(p);
    if !(fz > -1.0 && fp > -1.0 && fz < g.z.len() as f64 && fp < g.p.len() as f64) {
        return T::default();
    }
    let (j0, m0) = (fz.floor(), fp.floor());
    let (tz, tp) = (fz - j0, fp - m0);
    let (j0, m0) = (j0 as i64, m0 as i64);
    let at = |j: i64, m: i64| -> T {
        if j >= 0 && m >= 0 && (j as usize) < g.z.len() && (m as usize) < g.p.len() {
            w.get(j as usize, m as usize)
        } else {
            T::default()
        }
    };
    at(j0, m0) * ((1.0 - tz) * (1.0 - tp))
        + at(j0 + 1, m0) * (tz * (1.0 - tp))
        + at(j0, m0 + 1) * ((1.0 - tz) * tp)
        + at(j0 + 1, m0 + 1) * (tz * tp)
}
