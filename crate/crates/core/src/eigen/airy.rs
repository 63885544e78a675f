//! The Airy function Ai and its zeros.
//!
//! Three regimes: the Maclaurin series near the origin, the large-|x| asymptotic
//! expansions for |x| ≥ 12, and in between a high-order Taylor integration of
//! `y″ = x y` seeded from whichever end is numerically stable. On the decaying side
//! the series alone loses too many digits to cancellation beyond x ≈ 2, and the
//! asymptotic expansion is not yet accurate to 1e-10 at moderate |x|.

use std::f64::consts::PI;

use crate::error::{Error, Result};

const AI0: f64 = 0.355_028_053_887_817_239_26;
const AIP0: f64 = -0.258_819_403_792_806_798_41;
const ASYMPTOTIC: f64 = 12.0;
const SERIES_POS: f64 = 2.0;
const SERIES_NEG: f64 = -4.5;

/// `Ai(x)`.
pub fn airy_ai(x: f64) -> f64 {
    airy_pair(x).0
}

/// `Ai′(x)`.
pub fn airy_ai_prime(x: f64) -> f64 {
    airy_pair(x).1
}

/// `(Ai(x), Ai′(x))`.
pub fn airy_pair(x: f64) -> (f64, f64) {
    if x.is_nan() {
        return (f64::NAN, f64::NAN);
    }
    if x > 105.0 {
        return (0.0, -0.0);
    }
    if x.abs() >= ASYMPTOTIC {
        return asymptotic(x);
    }
    if (SERIES_NEG..=SERIES_POS).contains(&x) {
        return maclaurin(x);
    }
    if x > 0.0 {
        let (y, dy) = asymptotic(ASYMPTOTIC);
        taylor_walk(ASYMPTOTIC, y, dy, x)
    } else {
        let (y, dy) = maclaurin(SERIES_NEG);
        taylor_walk(SERIES_NEG, y, dy, x)
    }
}

fn maclaurin(x: f64) -> (f64, f64) {
    let x3 = x * x * x;
    // f = Σ a_k x^{3k}, g = Σ b_k x^{3k+1}, Ai = Ai(0) f + Ai′(0) g
    let (mut f, mut g) = (1.0, x);
    let (mut tf, mut tg) = (1.0, x);
    let (mut df, mut dg) = (0.0, 1.0);
    let (mut tdf, mut tdg) = (x * x / 2.0, 1.0);
    df += tdf;
    for k in 1..200 {
        let kf = k as f64;
        tf *= x3 / ((3.0 * kf - 1.0) * (3.0 * kf));
        tg *= x3 / ((3.0 * kf) * (3.0 * kf + 1.0));
        tdg *= x3 / ((3.0 * kf) * (3.0 * kf - 2.0));
        if k > 1 {
            tdf *= x3 / ((3.0 * kf - 1.0) * (3.0 * kf - 3.0));
            df += tdf;
        }
        f += tf;
        g += tg;
        dg += tdg;
        let small = 1e-18 * (f.abs() + g.abs() + df.abs() + dg.abs() + 1e-300);
        if tf.abs() + tg.abs() + tdf.abs() + tdg.abs() < small {
            break;
        }
    }
    (AI0 * f + AIP0 * g, AI0 * df + AIP0 * dg)
}

fn asymptotic_coeffs(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut u = vec![1.0];
    let mut v = vec![1.0];
    for k in 1..n {
        let kf = k as f64;
        let uk = u[k - 1] * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0) / ((2.0 * kf - 1.0) * 216.0 * kf);
        u.push(uk);
        v.push(-(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * uk);
    }
    (u, v)
}

/// Sums `Σ_k s(k) c_k / ζ^k` over `ks`, stopping once terms stop decreasing.
fn tail_sum(c: &[f64], zeta: f64, ks: impl Iterator<Item = usize>, sign: impl Fn(usize) -> f64) -> f64 {
    let mut acc = 0.0;
    let mut last = f64::INFINITY;
    for k in ks {
        let t = sign(k) * c[k] / zeta.powi(k as i32);
        if t.abs() > last {
            break;
        }
        acc += t;
        last = t.abs();
        if t.abs() < 1e-18 * acc.abs() {
            break;
        }
    }
    acc
}

fn asymptotic(x: f64) -> (f64, f64) {
    let (u, v) = asymptotic_coeffs(40);
    let sqrt_pi = PI.sqrt();
    if x > 0.0 {
        let zeta = 2.0 / 3.0 * x.powf(1.5);
        let alt = |k: usize| if k % 2 == 0 { 1.0 } else { -1.0 };
        let su = tail_sum(&u, zeta, 0..u.len(), alt);
        let sv = tail_sum(&v, zeta, 0..v.len(), alt);
        let e = (-zeta).exp();
        let q = x.powf(0.25);
        (e / (2.0 * sqrt_pi * q) * su, -q * e / (2.0 * sqrt_pi) * sv)
    } else {
        let y = -x;
        let zeta = 2.0 / 3.0 * y.powf(1.5);
        let alt = |k: usize| if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        let even_u = tail_sum(&u, zeta, (0..u.len()).step_by(2), &alt);
        let odd_u = tail_sum(&u, zeta, (1..u.len()).step_by(2), &alt);
        let even_v = tail_sum(&v, zeta, (0..v.len()).step_by(2), &alt);
        let odd_v = tail_sum(&v, zeta, (1..v.len()).step_by(2), &alt);
        let (s, c) = (zeta - PI / 4.0).sin_cos();
        let q = y.powf(0.25);
        ((c * even_u + s * odd_u) / (sqrt_pi * q), q / sqrt_pi * (s * even_v - c * odd_v))
    }
}

/// Integrates `y″ = x y` from `(x0, y0, y0′)` to `x1` with local Taylor expansions.
fn taylor_walk(x0: f64, y0: f64, dy0: f64, x1: f64) -> (f64, f64) {
    let (mut x, mut y, mut dy) = (x0, y0, dy0);
    let mut a = [0.0f64; 64];
    while x != x1 {
        let hmax = 0.5 / x.abs().sqrt().max(1.0);
        let h = if (x1 - x).abs() <= hmax { x1 - x } else { hmax * (x1 - x).signum() };
        // a_n = y^{(n)}(x)/n!, a_{n+2} = (x a_n + a_{n−1}) / ((n+1)(n+2))
        a[0] = y;
        a[1] = dy;
        a[2] = x * y / 2.0;
        let (mut ny, mut ndy) = (a[0] + a[1] * h + a[2] * h * h, a[1] + 2.0 * a[2] * h);
        let mut hp = h * h; // h^{n-1} for the derivative sum at n = 3
        for n in 1..61 {
            a[n + 2] = (x * a[n] + a[n - 1]) / (((n + 1) * (n + 2)) as f64);
            let k = n + 2;
            let term_d = k as f64 * a[k] * hp;
            hp *= h;
            let term = a[k] * hp;
            ny += term;
            ndy += term_d;
            if term.abs() < 1e-20 * ny.abs() && term_d.abs() < 1e-20 * ndy.abs() {
                break;
            }
        }
        if (x1 - x).abs() <= hmax {
            x = x1;
        } else {
            x += h;
        }
        y = ny;
        dy = ndy;
    }
    (y, dy)
}

/// The n-th zero `a_n < 0` of Ai (n ≥ 1), refined to 1e-12.
pub fn airy_zero(n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidParameter("Airy zeros are numbered from 1".into()));
    }
    let t = 3.0 * PI * (4.0 * n as f64 - 1.0) / 8.0;
    let guess = -t.powf(2.0 / 3.0) * (1.0 + 5.0 / (48.0 * t * t));
    let (mut lo, mut hi) = (guess - 0.1, guess + 0.1);
    let (mut flo, fhi) = (airy_ai(lo), airy_ai(hi));
    if flo.signum() == fhi.signum() {
        return Err(Error::ConvergenceFailure(format!("no sign change bracketing Airy zero {n}")));
    }
    let mut x = guess;
    for _ in 0..200 {
        let (f, df) = airy_pair(x);
        if f == 0.0 {
            return Ok(x);
        }
        if f.signum() == flo.signum() {
            lo = x;
            flo = f;
        } else {
            hi = x;
        }
        let newton = x - f / df;
        let next = if newton > lo.min(hi) && newton < lo.max(hi) { newton } else { 0.5 * (lo + hi) };
        let step = (next - x).abs();
        x = next;
        if step < 1e-14 * x.abs().max(1.0) || (hi - lo).abs() < 1e-13 {
            return Ok(x);
        }
    }
    Err(Error::ConvergenceFailure(format!("Airy zero {n} did not converge to 1e-12")))
}
