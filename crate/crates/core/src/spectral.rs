//! FFT utilities: chirp-z evaluation and trigonometric interpolation.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

/// Evaluates `X_m = ∑_k x_k exp(i (w0 + m dw) k)` for `m in 0..m_out` via Bluestein's
/// algorithm. A plan is tied to an input length and frequency ladder and can be reused.
pub struct ChirpZ {
    n_in: usize,
    m_out: usize,
    len: usize,
    pre: Vec<Complex64>,
    post: Vec<Complex64>,
    filter_hat: Vec<Complex64>,
    fwd: Arc<dyn Fft<f64>>,
    inv: Arc<dyn Fft<f64>>,
}

impl ChirpZ {
    pub fn new(n_in: usize, m_out: usize, w0: f64, dw: f64) -> Self {
        let len = (n_in + m_out - 1).next_power_of_two();
        let mut planner = FftPlanner::new();
        let fwd = planner.plan_fft_forward(len);
        let inv = planner.plan_fft_inverse(len);

        // mk = (m² + k² − (m−k)²)/2
        let chirp = |n: i64| -> Complex64 {
            let n = n as f64;
            Complex64::from_polar(1.0, 0.5 * dw * n * n)
        };
        let pre = (0..n_in).map(|k| Complex64::from_polar(1.0, w0 * k as f64) * chirp(k as i64)).collect();
        let post = (0..m_out).map(|m| chirp(m as i64)).collect();

        let mut filter = vec![Complex64::new(0.0, 0.0); len];
        for (n, slot) in filter.iter_mut().enumerate().take(m_out) {
            *slot = chirp(n as i64).conj();
        }
        for n in 1..n_in {
            filter[len - n] = chirp(n as i64).conj();
        }
        fwd.process(&mut filter);
        let scale = 1.0 / len as f64;
        for v in &mut filter {
            *v *= scale;
        }
        Self { n_in, m_out, len, pre, post, filter_hat: filter, fwd, inv }
    }

    pub fn input_len(&self) -> usize {
        self.n_in
    }

    pub fn output_len(&self) -> usize {
        self.m_out
    }

    /// Transforms `x` (length `input_len`) into `out` (length `output_len`).
    /// `scratch` is resized as needed and may be reused between calls.
    pub fn process(&self, x: &[Complex64], out: &mut [Complex64], scratch: &mut Vec<Complex64>) {
        assert_eq!(x.len(), self.n_in);
        assert_eq!(out.len(), self.m_out);
        scratch.clear();
        scratch.resize(self.len, Complex64::new(0.0, 0.0));
        for ((s, &xi), &c) in scratch.iter_mut().zip(x).zip(&self.pre) {
            *s = xi * c;
        }
        self.fwd.process(scratch);
        for (s, &h) in scratch.iter_mut().zip(&self.filter_hat) {
            *s *= h;
        }
        self.inv.process(scratch);
        for ((o, &s), &c) in out.iter_mut().zip(scratch.iter()).zip(&self.post) {
            *o = s * c;
        }
    }

    pub fn transform(&self, x: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); self.m_out];
        self.process(x, &mut out, &mut Vec::new());
        out
    }
}

/// In-place forward FFT (no normalisation).
pub fn fft(data: &mut [Complex64]) {
    FftPlanner::new().plan_fft_forward(data.len()).process(data);
}

/// In-place inverse FFT, normalised by `1/n`.
pub fn ifft(data: &mut [Complex64]) {
    FftPlanner::new().plan_fft_inverse(data.len()).process(data);
    let s = 1.0 / data.len() as f64;
    for v in data.iter_mut() {
        *v *= s;
    }
}

/// Signed FFT frequency index of bin `k` for length `n`.
#[inline]
pub fn signed_index(k: usize, n: usize) -> f64 {
    if k < n / 2 {
        k as f64
    } else {
        k as f64 - n as f64
    }
}

/// Band-limited (trigonometric) interpolation of periodic samples `y_j = f(x0 + j h)`
/// onto the points `x1 + i h1`, `i in 0..m`. Points outside `[x0, x0 + n h)` are set to
/// zero, since callers use it for states that vanish outside their box.
pub fn trig_interpolate(y: &[Complex64], x0: f64, h: f64, x1: f64, h1: f64, m: usize) -> Vec<Complex64> {
    let n = y.len();
    let mut c = y.to_vec();
    fft(&mut c);
    let period = n as f64 * h;
    // Reorder to k = −n/2 .. n/2−1 and fold in the offset of the target ladder.
    // The Nyquist bin is split evenly between ±n/2 so real data stays real.
    let mut x = vec![Complex64::new(0.0, 0.0); n + 1];
    let shift = x1 - x0;
    let half = n / 2;
    for (kk, slot) in x.iter_mut().enumerate() {
        let k = kk as f64 - half as f64;
        let src = if kk == n { c[half] } else { c[(kk + half) % n] };
        let w = if kk == 0 || kk == n { 0.5 } else { 1.0 };
        *slot = src * w * Complex64::from_polar(1.0 / n as f64, 2.0 * PI * k * shift / period);
    }
    let dw = 2.0 * PI * h1 / period;
    let czt = ChirpZ::new(n + 1, m, 0.0, dw);
    let mut out = czt.transform(&x);
    for (i, v) in out.iter_mut().enumerate() {
        let xi = x1 + i as f64 * h1;
        let inside = xi >= x0 - 1e-12 * h && xi <= x0 + (n - 1) as f64 * h + 1e-12 * h;
        if inside {
            // undo the k → kk offset of −n/2
            *v *= Complex64::from_polar(1.0, -PI * (n as f64) * (i as f64) * h1 / period);
        } else {
            *v = Complex64::new(0.0, 0.0);
        }
    }
    out
}
