use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::dynamics::{PhysParams, PolynomialPotential};
use crate::error::{Error, Result};
use crate::field::RealField;
use crate::grid::{Axis, GridSpec};
use crate::interferometer::PulseSequence;
use crate::spectral::{fft, ifft, signed_index};
use crate::wavefunction::WaveFunction;
use crate::wigner::wigner_transform;

/// Internal states |g1⟩, |g2⟩ with their centre-of-mass wavefunctions.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoComponentState {
    pub psi1: WaveFunction,
    pub psi2: WaveFunction,
}

impl TwoComponentState {
    pub fn new(psi1: WaveFunction, psi2: WaveFunction) -> Result<Self> {
        if psi1.grid() != psi2.grid() || psi1.hbar() != psi2.hbar() {
            return Err(Error::GridMismatch("components must share grid and hbar".into()));
        }
        Ok(Self { psi1, psi2 })
    }

    /// Everything in |g1⟩.
    pub fn ground(psi: WaveFunction) -> Self {
        let zero = WaveFunction::new(*psi.grid(), vec![Complex64::new(0.0, 0.0); psi.grid().len()], psi.hbar())
            .expect("same shape as psi");
        Self { psi1: psi, psi2: zero }
    }

    pub fn norms(&self) -> (f64, f64) {
        (self.psi1.norm_sqr(), self.psi2.norm_sqr())
    }

    pub fn norm_sqr(&self) -> f64 {
        let (a, b) = self.norms();
        a + b
    }

    /// Largest boundary amplitude of either component.
    pub fn edge_amplitude(&self) -> f64 {
        self.psi1.edge_amplitude().max(self.psi2.edge_amplitude())
    }

    /// `z,re1,im1,re2,im2` rows.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("z,re1,im1,re2,im2\n");
        for ((z, a), b) in self.psi1.grid().points().zip(self.psi1.values()).zip(self.psi2.values()) {
            writeln!(s, "{z:.16e},{:.16e},{:.16e},{:.16e},{:.16e}", a.re, a.im, b.re, b.im)
                .expect("writing to a String cannot fail");
        }
        s
    }
}

/// Steps per free-evolution segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitStepConfig {
    pub n_steps: usize,
    /// Boundary amplitude that counts as escaping the box.
    pub edge_limit: f64,
}

impl Default for SplitStepConfig {
    fn default() -> Self {
        Self { n_steps: 256, edge_limit: 1e-6 }
    }
}

impl SplitStepConfig {
    pub fn new(n_steps: usize) -> Result<Self> {
        if n_steps == 0 {
            return Err(Error::InvalidParameter("n_steps must be positive".into()));
        }
        Ok(Self { n_steps, ..Self::default() })
    }

    /// `dt = T / n_steps`.
    pub fn dt(&self, t: f64) -> f64 {
        t / self.n_steps as f64
    }
}

/// Instantaneous two-level pulse of area θ:
/// `cos θ · 1 − i sin θ [e^{i(kz+φ)} |g2⟩⟨g1| + e^{−i(kz+φ)} |g1⟩⟨g2|]`.
pub fn apply_pulse(state: &TwoComponentState, theta: f64, k: f64, phi: f64) -> TwoComponentState {
    let (s, c) = theta.sin_cos();
    let grid = *state.psi1.grid();
    let hbar = state.psi1.hbar();
    let mut a = Vec::with_capacity(grid.len());
    let mut b = Vec::with_capacity(grid.len());
    for ((z, &p1), &p2) in grid.points().zip(state.psi1.values()).zip(state.psi2.values()) {
        let up = Complex64::from_polar(1.0, k * z + phi);
        let mi = Complex64::new(0.0, -s);
        a.push(c * p1 + mi * up.conj() * p2);
        b.push(c * p2 + mi * up * p1);
    }
    TwoComponentState {
        psi1: WaveFunction::new(grid, a, hbar).expect("unitary map keeps samples finite"),
        psi2: WaveFunction::new(grid, b, hbar).expect("unitary map keeps samples finite"),
    }
}

/// Both components under `H = p²/2m_i + V(z)` for time `t` (Strang splitting).
pub fn evolve(
    state: &TwoComponentState,
    params: &PhysParams,
    potential: &PolynomialPotential,
    t: f64,
    cfg: &SplitStepConfig,
) -> Result<TwoComponentState> {
    let params = params.validated()?;
    if !(t.is_finite() && t >= 0.0) {
        return Err(Error::InvalidParameter(format!("evolution time must be non-negative, got {t}")));
    }
    if cfg.n_steps == 0 {
        return Err(Error::InvalidParameter("n_steps must be positive".into()));
    }
    let grid = *state.psi1.grid();
    let hbar = state.psi1.hbar();
    let n = grid.len();
    let dt = cfg.dt(t);

    let half_v: Vec<Complex64> = grid
        .points()
        .map(|z| {
            let v = potential.value(z);
            if v.is_finite() {
                Complex64::from_polar(1.0, -0.5 * v * dt / hbar)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
        .collect();
    let dk = 2.0 * PI / (n as f64 * grid.step());
    let kin: Vec<Complex64> = (0..n)
        .map(|i| {
            let kk = signed_index(i, n) * dk;
            Complex64::from_polar(1.0, -hbar * kk * kk * dt / (2.0 * params.m_i))
        })
        .collect();

    let mut planner = FftPlanner::new();
    let fwd = planner.plan_fft_forward(n);
    let inv = planner.plan_fft_inverse(n);
    let scale = 1.0 / n as f64;
    let mut comps = [state.psi1.values().to_vec(), state.psi2.values().to_vec()];
    let edge = |c: &[Vec<Complex64>; 2]| {
        c.iter().map(|v| v[0].norm().max(v[n - 1].norm())).fold(0.0, f64::max)
    };
    for step in 0..cfg.n_steps {
        for psi in comps.iter_mut() {
            for (v, f) in psi.iter_mut().zip(&half_v) {
                *v *= f;
            }
            fwd.process(psi);
            for (v, f) in psi.iter_mut().zip(&kin) {
                *v *= f * scale;
            }
            inv.process(psi);
            for (v, f) in psi.iter_mut().zip(&half_v) {
                *v *= f;
            }
        }
        let e = edge(&comps);
        if e > cfg.edge_limit {
            return Err(Error::GridEscape { time: (step + 1) as f64 * dt, edge_amplitude: e });
        }
    }
    let [a, b] = comps;
    Ok(TwoComponentState { psi1: WaveFunction::new(grid, a, hbar)?, psi2: WaveFunction::new(grid, b, hbar)? })
}

/// Stage names, in order, for the six ledger snapshots.
pub const STAGE_LABELS: [&str; 6] = [
    "before_first_pulse",
    "after_first_pulse",
    "before_second_pulse",
    "after_second_pulse",
    "before_third_pulse",
    "after_third_pulse",
];

#[derive(Debug, Clone, PartialEq)]
pub struct LedgerStage {
    pub label: &'static str,
    pub time: f64,
    pub state: TwoComponentState,
}

impl LedgerStage {
    pub fn file_name(&self) -> String {
        format!("{}.csv", self.label)
    }
}

/// Result of a full oracle run.
#[derive(Debug, Clone, PartialEq)]
pub struct InterferometerRun {
    pub p_g1: f64,
    pub p_g2: f64,
    pub exit: TwoComponentState,
    pub ledger: Vec<LedgerStage>,
}

impl InterferometerRun {
    /// Writes one CSV per ledger stage into `dir`.
    pub fn write_ledger(&self, dir: &Path) -> Result<Vec<PathBuf>> {
        std::fs::create_dir_all(dir)?;
        self.ledger
            .iter()
            .map(|stage| {
                let path = dir.join(stage.file_name());
                std::fs::write(&path, stage.state.to_csv())?;
                Ok(path)
            })
            .collect()
    }
}

/// π/4 pulse at 0, evolve T, π/2 pulse at T, evolve T, π/4 pulse at 2T.
pub fn run_interferometer(
    seq: &PulseSequence,
    params: &PhysParams,
    potential: &PolynomialPotential,
    psi0: &WaveFunction,
    cfg: &SplitStepConfig,
) -> Result<InterferometerRun> {
    let seq = seq.validated()?;
    let norm = psi0.norm_sqr();
    if (norm - 1.0).abs() > 1e-6 {
        return Err(Error::NonNormalized { norm, tol: 1e-6 });
    }
    let mut ledger = Vec::with_capacity(6);
    let mut record = |i: usize, time: f64, s: &TwoComponentState| {
        ledger.push(LedgerStage { label: STAGE_LABELS[i], time, state: s.clone() })
    };
    let s = TwoComponentState::ground(psi0.clone());
    record(0, 0.0, &s);
    let s = apply_pulse(&s, PI / 4.0, seq.k, seq.phi0);
    record(1, 0.0, &s);
    let s = evolve(&s, params, potential, seq.t, cfg)?;
    record(2, seq.t, &s);
    let s = apply_pulse(&s, PI / 2.0, seq.k, seq.phi_t);
    record(3, seq.t, &s);
    let s = evolve(&s, params, potential, seq.t, cfg)?;
    record(4, 2.0 * seq.t, &s);
    let s = apply_pulse(&s, PI / 4.0, seq.k, seq.phi_2t);
    record(5, 2.0 * seq.t, &s);
    let (p1, p2) = s.norms();
    Ok(InterferometerRun { p_g1: p1, p_g2: p2, exit: s, ledger })
}

/// Wigner function of the normalised |g1⟩ exit component, on `grid`.
pub fn wigner_of_exit(exit: &TwoComponentState, grid: &GridSpec) -> Result<RealField> {
    wigner_transform(&exit.psi1.normalize()?, grid)
}

/// `⟨ψ| exp(i(ξp̂ + qẑ)/ħ) |ψ⟩ = e^{iqξ/2ħ} ∫ ψ*(z) e^{iqz/ħ} ψ(z+ξ) dz`, with the
/// translation done spectrally on a zero-padded copy of the grid.
pub fn displacement_expectation(psi: &WaveFunction, xi: f64, q: f64) -> Result<Complex64> {
    let a = psi.grid();
    let (n, h) = (a.len(), a.step());
    let pad = n / 2;
    let big = Axis::new(a.min() - pad as f64 * h, a.max() + pad as f64 * h, 2 * n)?;
    let mut v = vec![Complex64::new(0.0, 0.0); 2 * n];
    v[pad..pad + n].copy_from_slice(psi.values());
    let mut shifted = v.clone();
    fft(&mut shifted);
    let dk = 2.0 * PI / (2.0 * n as f64 * h);
    for (i, c) in shifted.iter_mut().enumerate() {
        *c *= Complex64::from_polar(1.0, signed_index(i, 2 * n) * dk * xi);
    }
    ifft(&mut shifted);
    let hb = psi.hbar();
    let s: Complex64 = big
        .points()
        .zip(v.iter().zip(&shifted))
        .map(|(z, (a, b))| a.conj() * Complex64::from_polar(1.0, q * z / hb) * b)
        .sum();
    Ok(s * h * Complex64::from_polar(1.0, q * xi / (2.0 * hb)))
}
