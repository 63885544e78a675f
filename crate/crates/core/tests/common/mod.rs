//! Independent reference implementations used only by the tests. None of these call
//! into the library's numerical kernels.
#![allow(dead_code)]

use std::f64::consts::PI;

use gravphase_core::Complex64;

/// Composite Simpson rule on [a, b] with `n` (even) intervals.
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
    let n = n + n % 2;
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        s += w * f(a + i as f64 * h);
    }
    s * h / 3.0
}

pub fn simpson_c<F: Fn(f64) -> Complex64>(f: F, a: f64, b: f64, n: usize) -> Complex64 {
    let re = simpson(|x| f(x).re, a, b, n);
    let im = simpson(|x| f(x).im, a, b, n);
    Complex64::new(re, im)
}

/// `W(z,p) = (1/πħ) ∫ ds e^{−2ips/ħ} ψ*(z−s) ψ(z+s)` by direct quadrature.
pub fn wigner_quadrature(psi: &dyn Fn(f64) -> Complex64, z: f64, p: f64, hbar: f64, reach: f64) -> f64 {
    let integrand = |s: f64| (Complex64::from_polar(1.0, -2.0 * p * s / hbar) * psi(z - s).conj() * psi(z + s)).re;
    simpson(integrand, -reach, reach, 8000) / (PI * hbar)
}

/// Ai(x) from the integral representation rotated onto the steepest-descent ray:
/// `Ai(x) = (1/π) Re[e^{iπ/6} ∫_0^∞ exp(−s³/3 − xs/2 + i(√3/2) x s) ds]`.
pub fn airy_quadrature(x: f64) -> f64 {
    let rot = Complex64::from_polar(1.0, PI / 6.0);
    let f = |s: f64| {
        let e = Complex64::new(-s * s * s / 3.0 - 0.5 * x * s, 0.5 * 3f64.sqrt() * x * s);
        (rot * e.exp()).re
    };
    let upper = 4.0 + 2.0 * x.abs().sqrt();
    simpson(f, 0.0, upper, 20_000) / PI
}

/// Bisection on a sign change of `f` in [lo, hi].
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut flo = f(lo);
    assert!(flo * f(hi) < 0.0, "no sign change in [{lo}, {hi}]");
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm * flo > 0.0 {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Physicists' Hermite polynomial by the three-term recurrence.
pub fn hermite(n: usize, x: f64) -> f64 {
    let (mut a, mut b) = (1.0, 2.0 * x);
    if n == 0 {
        return a;
    }
    for k in 1..n {
        let c = 2.0 * x * b - 2.0 * k as f64 * a;
        a = b;
        b = c;
    }
    b
}

/// Oscillator eigenfunction from the textbook closed form.
pub fn oscillator_eigenfunction(n: usize, z: f64, mass: f64, omega: f64, hbar: f64) -> f64 {
    let alpha = (mass * omega / hbar).sqrt();
    let fact: f64 = (1..=n).map(|k| k as f64).product();
    let norm = (alpha / PI.sqrt() / (2f64.powi(n as i32) * fact)).sqrt();
    norm * hermite(n, alpha * z) * (-0.5 * alpha * alpha * z * z).exp()
}

pub fn laguerre(n: usize, x: f64) -> f64 {
    let (mut a, mut b) = (1.0, 1.0 - x);
    if n == 0 {
        return a;
    }
    for k in 1..n {
        let kf = k as f64;
        let c = ((2.0 * kf + 1.0 - x) * b - kf * a) / (kf + 1.0);
        a = b;
        b = c;
    }
    b
}

/// `W_n = ((−1)^n/πħ) e^{−2H/ħω} L_n(4H/ħω)`.
pub fn oscillator_wigner(n: usize, z: f64, p: f64, mass: f64, omega: f64, hbar: f64) -> f64 {
    let h = p * p / (2.0 * mass) + 0.5 * mass * omega * omega * z * z;
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    sign / (PI * hbar) * (-2.0 * h / (hbar * omega)).exp() * laguerre(n, 4.0 * h / (hbar * omega))
}

/// Classical phase-space point under `H = p²/2m + m_g g z + ½ m_g Γ z²`, integrated with
/// classical fourth-order Runge–Kutta.
pub fn newton_rk4(z: f64, p: f64, m_i: f64, m_g: f64, g: f64, gamma: f64, t: f64, steps: usize) -> (f64, f64) {
    let force = |z: f64| -m_g * g - m_g * gamma * z;
    let dt = t / steps as f64;
    let (mut z, mut p) = (z, p);
    for _ in 0..steps {
        let (k1z, k1p) = (p / m_i, force(z));
        let (k2z, k2p) = ((p + 0.5 * dt * k1p) / m_i, force(z + 0.5 * dt * k1z));
        let (k3z, k3p) = ((p + 0.5 * dt * k2p) / m_i, force(z + 0.5 * dt * k2z));
        let (k4z, k4p) = ((p + dt * k3p) / m_i, force(z + dt * k3z));
        z += dt / 6.0 * (k1z + 2.0 * k2z + 2.0 * k3z + k4z);
        p += dt / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    }
    (z, p)
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

/// Relative L² distance `‖a − b‖ / ‖b‖`.
pub fn rel_l2(a: &[f64], b: &[f64]) -> f64 {
    let num: f64 = a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum();
    let den: f64 = b.iter().map(|y| y * y).sum();
    (num / den).sqrt()
}

/// Number of sign changes in a sequence, ignoring samples below `floor` in magnitude.
pub fn sign_changes(values: &[f64], floor: f64) -> usize {
    let mut last = 0.0f64;
    let mut count = 0;
    for &v in values {
        if v.abs() < floor {
            continue;
        }
        if last != 0.0 && v.signum() != last.signum() {
            count += 1;
        }
        last = v;
    }
    count
}

/// Dominant period of a real sequence with spacing `h`, from a zero-padded DFT with
/// parabolic peak interpolation. The mean is removed first.
pub fn dominant_period(samples: &[f64], h: f64) -> f64 {
    let n = samples.len();
    let pad = 16 * n;
    let mean = samples.iter().sum::<f64>() / n as f64;
    let power = |k: usize| {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, &s) in samples.iter().enumerate() {
            acc += (s - mean) * Complex64::from_polar(1.0, -2.0 * PI * (k * j) as f64 / pad as f64);
        }
        acc.norm_sqr()
    };
    let spectrum: Vec<f64> = (0..pad / 2).map(power).collect();
    let k = (1..pad / 2 - 1).max_by(|&a, &b| spectrum[a].total_cmp(&spectrum[b])).unwrap();
    let (a, b, c) = (spectrum[k - 1], spectrum[k], spectrum[k + 1]);
    let shift = 0.5 * (a - c) / (a - 2.0 * b + c);
    let freq = (k as f64 + shift) / (pad as f64 * h);
    1.0 / freq
}
