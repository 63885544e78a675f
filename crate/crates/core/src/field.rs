//! Sampled functions on a rectangular (z, p) grid, plus their CSV form.

use std::io::{BufRead, Write};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::GridSpec;

/// A scalar type that can live in a phase-space field.
pub trait Sample:
    Copy
    + Default
    + PartialEq
    + std::fmt::Debug
    + Send
    + Sync
    + std::ops::Add<Output = Self>
    + std::ops::Mul<f64, Output = Self>
    + 'static
{
    fn is_finite(&self) -> bool;
    fn to_complex(self) -> Complex64;
    fn abs(self) -> f64;
    /// Number of CSV value columns (`re` or `re,im`).
    const COLUMNS: usize;
    fn write_columns(&self, out: &mut String);
    fn from_columns(cols: &[f64]) -> Self;
}

impl Sample for f64 {
    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }
    fn to_complex(self) -> Complex64 {
        Complex64::new(self, 0.0)
    }
    fn abs(self) -> f64 {
        f64::abs(self)
    }
    const COLUMNS: usize = 1;
    fn write_columns(&self, out: &mut String) {
        out.push_str(&format!("{:.16e}", self));
    }
    fn from_columns(cols: &[f64]) -> Self {
        cols[0]
    }
}

impl Sample for Complex64 {
    fn is_finite(&self) -> bool {
        Complex64::is_finite(*self)
    }
    fn to_complex(self) -> Complex64 {
        self
    }
    fn abs(self) -> f64 {
        self.norm()
    }
    const COLUMNS: usize = 2;
    fn write_columns(&self, out: &mut String) {
        out.push_str(&format!("{:.16e},{:.16e}", self.re, self.im));
    }
    fn from_columns(cols: &[f64]) -> Self {
        Complex64::new(cols[0], cols[1])
    }
}

/// Values `W(z_j, p_m)` stored z-major, together with the grid and ħ.
#[derive(Debug, Clone, PartialEq)]
pub struct Field<T> {
    grid: GridSpec,
    hbar: f64,
    values: Vec<T>,
}

/// Real phase-space function, e.g. a Wigner function.
pub type RealField = Field<f64>;
/// Complex phase-space function, e.g. an interference-path Wigner function.
pub type ComplexField = Field<Complex64>;

impl<T: Sample> Field<T> {
    pub fn new(grid: GridSpec, hbar: f64, values: Vec<T>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::InvalidGrid(format!(
                "{} values for a {}x{} grid",
                values.len(),
                grid.z.len(),
                grid.p.len()
            )));
        }
        check_hbar(hbar)?;
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter(format!("non-finite field value at index {i}")));
        }
        Ok(Self { grid, hbar, values })
    }

    /// Tabulates `f(z, p)` on `grid`.
    pub fn from_fn(grid: GridSpec, hbar: f64, mut f: impl FnMut(f64, f64) -> T) -> Result<Self> {
        let mut values = Vec::with_capacity(grid.len());
        for j in 0..grid.z.len() {
            let z = grid.z.point(j);
            for m in 0..grid.p.len() {
                values.push(f(z, grid.p.point(m)));
            }
        }
        Self::new(grid, hbar, values)
    }

    pub fn zeros(grid: GridSpec, hbar: f64) -> Result<Self> {
        Self::new(grid, hbar, vec![T::default(); grid.len()])
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    #[inline]
    pub fn get(&self, j: usize, m: usize) -> T {
        self.values[self.grid.index(j, m)]
    }

    /// Row of p-samples at z-index `j`.
    pub fn row(&self, j: usize) -> &[T] {
        let n = self.grid.p.len();
        &self.values[j * n..(j + 1) * n]
    }

    /// Applies `f` sample-wise, keeping the grid.
    pub fn map<U: Sample>(&self, f: impl Fn(T) -> U) -> Result<Field<U>> {
        Field::new(self.grid, self.hbar, self.values.iter().map(|&v| f(v)).collect())
    }

    /// Errors unless `other` shares grid and ħ.
    pub fn ensure_compatible<U: Sample>(&self, other: &Field<U>) -> Result<()> {
        self.grid.ensure_same(&other.grid)?;
        if self.hbar != other.hbar {
            return Err(Error::GridMismatch(format!("hbar {} vs {}", self.hbar, other.hbar)));
        }
        Ok(())
    }

    /// `∑∑ |W| Δz Δp`.
    pub fn abs_integral(&self) -> f64 {
        self.values.iter().map(|v| v.abs()).sum::<f64>() * self.grid.cell_area()
    }

    /// Writes the header, optional `# cfg` provenance lines, then `z,p,value...` rows.
    pub fn write_csv<W: Write>(&self, mut out: W, provenance: &[(String, String)]) -> Result<()> {
        let g = &self.grid;
        writeln!(out, "# z_min,z_max,n_z,p_min,p_max,n_p,hbar")?;
        writeln!(
            out,
            "# {:.16e},{:.16e},{},{:.16e},{:.16e},{},{:.16e}",
            g.z.min(),
            g.z.max(),
            g.z.len(),
            g.p.min(),
            g.p.max(),
            g.p.len(),
            self.hbar
        )?;
        for (k, v) in provenance {
            writeln!(out, "# cfg {k} = {v}")?;
        }
        let mut line = String::with_capacity(96);
        for j in 0..g.z.len() {
            let z = g.z.point(j);
            for m in 0..g.p.len() {
                line.clear();
                line.push_str(&format!("{:.16e},{:.16e},", z, g.p.point(m)));
                self.get(j, m).write_columns(&mut line);
                line.push('\n');
                out.write_all(line.as_bytes())?;
            }
        }
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf, &[]).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("csv output is ascii")
    }

    /// Parses the format produced by [`Field::write_csv`]; provenance lines are skipped.
    pub fn read_csv<R: BufRead>(input: R) -> Result<Self> {
        let mut lines = input.lines();
        let mut next_line = || -> Result<String> {
            lines.next().ok_or_else(|| Error::Parse("unexpected end of file".into()))?.map_err(Error::from)
        };
        let header = next_line()?;
        if header.trim() != "# z_min,z_max,n_z,p_min,p_max,n_p,hbar" {
            return Err(Error::Parse(format!("unexpected header {header:?}")));
        }
        let meta = next_line()?;
        let meta: Vec<&str> = meta
            .trim()
            .strip_prefix('#')
            .ok_or_else(|| Error::Parse("missing grid line".into()))?
            .split(',')
            .map(str::trim)
            .collect();
        if meta.len() != 7 {
            return Err(Error::Parse(format!("grid line has {} fields, expected 7", meta.len())));
        }
        let f = |s: &str| s.parse::<f64>().map_err(|e| Error::Parse(format!("{s:?}: {e}")));
        let u = |s: &str| s.parse::<usize>().map_err(|e| Error::Parse(format!("{s:?}: {e}")));
        let grid = GridSpec::new(f(meta[0])?, f(meta[1])?, u(meta[2])?, f(meta[3])?, f(meta[4])?, u(meta[5])?)?;
        let hbar = f(meta[6])?;

        let mut values = Vec::with_capacity(grid.len());
        let mut cols = Vec::with_capacity(2 + T::COLUMNS);
        for line in lines {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            cols.clear();
            for tok in line.split(',') {
                cols.push(f(tok.trim())?);
            }
            if cols.len() != 2 + T::COLUMNS {
                return Err(Error::Parse(format!("row {:?} has {} columns", line, cols.len())));
            }
            let idx = values.len();
            if idx >= grid.len() {
                return Err(Error::Parse("more rows than grid points".into()));
            }
            let (j, m) = (idx / grid.p.len(), idx % grid.p.len());
            let tol_z = 1e-9 * grid.z.step();
            let tol_p = 1e-9 * grid.p.step();
            if (cols[0] - grid.z.point(j)).abs() > tol_z || (cols[1] - grid.p.point(m)).abs() > tol_p {
                return Err(Error::Parse(format!("row {idx} is off-grid: ({}, {})", cols[0], cols[1])));
            }
            values.push(T::from_columns(&cols[2..]));
        }
        if values.len() != grid.len() {
            return Err(Error::Parse(format!("{} rows, expected {}", values.len(), grid.len())));
        }
        Self::new(grid, hbar, values)
    }
}

impl RealField {
    /// `∑∑ W Δz Δp`.
    pub fn integral(&self) -> f64 {
        self.values.iter().sum::<f64>() * self.grid.cell_area()
    }

    /// Phase-space averages `(⟨z⟩, ⟨p⟩)`, normalised by the integral.
    pub fn mean(&self) -> (f64, f64) {
        let (mut s, mut sz, mut sp) = (0.0, 0.0, 0.0);
        for j in 0..self.grid.z.len() {
            let z = self.grid.z.point(j);
            for m in 0..self.grid.p.len() {
                let w = self.get(j, m);
                s += w;
                sz += w * z;
                sp += w * self.grid.p.point(m);
            }
        }
        (sz / s, sp / s)
    }

    /// Central second moments `(var z, var p)`.
    pub fn variance(&self) -> (f64, f64) {
        let (mz, mp) = self.mean();
        let (mut s, mut vz, mut vp) = (0.0, 0.0, 0.0);
        for j in 0..self.grid.z.len() {
            let dz = self.grid.z.point(j) - mz;
            for m in 0..self.grid.p.len() {
                let w = self.get(j, m);
                let dp = self.grid.p.point(m) - mp;
                s += w;
                vz += w * dz * dz;
                vp += w * dp * dp;
            }
        }
        (vz / s, vp / s)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |a, v| a.max(v.abs()))
    }

    pub fn scaled(&self, factor: f64) -> Result<Self> {
        self.map(|v| v * factor)
    }
}

impl ComplexField {
    pub fn integral(&self) -> Complex64 {
        self.values.iter().sum::<Complex64>() * self.grid.cell_area()
    }

    pub fn re(&self) -> RealField {
        Field { grid: self.grid, hbar: self.hbar, values: self.values.iter().map(|v| v.re).collect() }
    }

    pub fn max_imag(&self) -> f64 {
        self.values.iter().fold(0.0, |a, v| a.max(v.im.abs()))
    }
}

impl From<RealField> for ComplexField {
    fn from(f: RealField) -> Self {
        Field { grid: f.grid, hbar: f.hbar, values: f.values.into_iter().map(|v| Complex64::new(v, 0.0)).collect() }
    }
}

pub(crate) fn check_hbar(hbar: f64) -> Result<()> {
    if hbar.is_finite() && hbar > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("hbar must be positive and finite, got {hbar}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> GridSpec {
        GridSpec::new(-1.0, 1.0, 8, -2.0, 3.0, 16).unwrap()
    }

    #[test]
    fn csv_round_trip_is_bit_exact() {
        let f = RealField::from_fn(grid(), 0.7, |z, p| (z * 1.234567).sin() * (p / 3.0).exp() / 7.0).unwrap();
        let text = f.to_csv_string();
        let back = RealField::read_csv(text.as_bytes()).unwrap();
        assert_eq!(f, back);

        let c = ComplexField::from_fn(grid(), 1.0, |z, p| Complex64::new(z / 3.0, p * 0.1)).unwrap();
        let back = ComplexField::read_csv(c.to_csv_string().as_bytes()).unwrap();
        assert_eq!(c, back);
    }

    #[test]
    fn provenance_lines_are_skipped() {
        let f = RealField::from_fn(grid(), 1.0, |z, p| z + p).unwrap();
        let mut buf = Vec::new();
        f.write_csv(&mut buf, &[("mode".into(), "gaussian".into())]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("# cfg mode = gaussian"));
        assert_eq!(RealField::read_csv(text.as_bytes()).unwrap(), f);
    }

    #[test]
    fn rejects_wrong_shapes_and_nan() {
        assert!(RealField::new(grid(), 1.0, vec![0.0; 3]).is_err());
        let mut v = vec![0.0; grid().len()];
        v[5] = f64::NAN;
        assert!(RealField::new(grid(), 1.0, v).is_err());
        assert!(RealField::zeros(grid(), 0.0).is_err());
    }

    #[test]
    fn truncated_csv_is_an_error() {
        let f = RealField::from_fn(grid(), 1.0, |z, _| z).unwrap();
        let text = f.to_csv_string();
        let cut: String = text.lines().take(20).map(|l| format!("{l}\n")).collect();
        assert!(matches!(RealField::read_csv(cut.as_bytes()), Err(Error::Parse(_))));
    }
}
