mod common;

use gravphase_core::eigen::harmonic_wavefunction;
use gravphase_core::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

#[test]
fn airy_against_quadrature() {
    for x in [-9.0, -6.5, -4.5, -3.0, -1.0, 0.0, 0.7, 2.0, 3.5] {
        let want = airy_quadrature(x);
        let got = airy_ai(x);
        assert!((got - want).abs() < 1e-10 * want.abs().max(1e-3), "Ai({x}) = {got} vs {want}");
    }
    assert!((airy_ai(0.0) - 0.355_028_053_887_817_24).abs() < 1e-15);
    let far = airy_ai(8.0);
    assert!(far > 0.0 && far < 1e-7);
}

#[test]
fn airy_ode_at_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    let h = 1e-3;
    for _ in 0..50 {
        let x: f64 = rng.gen_range(-10.0..5.0);
        let y = airy_ai(x);
        let d2 = (airy_ai(x + h) - 2.0 * y + airy_ai(x - h)) / (h * h);
        let scale = 1.0 + x.abs();
        assert!((d2 - x * y).abs() < 1e-6 * scale, "x={x}: {d2} vs {}", x * y);
    }
    let x = 1.3;
    let h = 1e-3;
    let ratio = (airy_ai(x + h) - 2.0 * airy_ai(x) + airy_ai(x - h)) / (h * h) / airy_ai(x);
    assert!((ratio - 1.3).abs() < 1e-6);
}

#[test]
fn airy_zeros_against_quadrature_root_finding() {
    let zeros: Vec<f64> = (1..=5).map(|n| airy_zero(n).unwrap()).collect();
    for (n, &a) in zeros.iter().enumerate() {
        let root = bisect(airy_quadrature, a - 0.05, a + 0.05, 1e-12);
        assert!((root - a).abs() < 1e-9, "zero {}: {a} vs {root}", n + 1);
    }
    assert!((-zeros[0] - 2.338_107_41).abs() < 1e-7);
    // consecutive zeros are separated by more than π/√|a| and interlace
    assert!(zeros.windows(2).all(|w| w[1] < w[0]));
}

#[test]
fn bouncer_levels() {
    let params = PhysParams::new(1.0, 1.0, 1.0, 0.0, 1.0, 0.0).unwrap();
    let s = bouncer_spectrum(&params, 10).unwrap();
    assert_eq!(s.levels.len(), 10);
    let e = s.energies();
    assert!(e.windows(2).all(|w| w[0] < w[1]));
    // in these units E_n = |a_{n+1}| / 2^{1/3}
    assert!((e[0] - 2.338_107_410_459_767 / 2f64.cbrt()).abs() < 1e-12);
    assert!(s.to_csv().starts_with("n,E_n\n0,"));
    assert_eq!(bouncer_spectrum(&params, 100).unwrap().levels.len(), 100);
    assert!(bouncer_spectrum(&params, 101).is_err());
}

#[test]
fn bouncer_states_have_n_nodes() {
    let params = PhysParams::new(1.2, 0.8, 1.5, 0.0, 1.0, 0.0).unwrap();
    let e = bouncer_spectrum(&params, 6).unwrap().energies();
    for (n, &en) in e.iter().enumerate() {
        let sol = AirySolution::new(&params, en).unwrap();
        // vanishes at the mirror
        assert!(sol.value(0.0).abs() < 1e-10);
        let top = (sol.epsilon + 6.0) / sol.kappa;
        let zs: Vec<f64> = (1..4000).map(|i| top * i as f64 / 4000.0).collect();
        let (_, u) = linear_potential_eigenfunction(&params, en, &zs).unwrap();
        assert_eq!(sign_changes(&u, 1e-9), n, "level {n}");
    }
}

#[test]
fn linear_potential_solution() {
    let params = PhysParams::new(1.0, 1.0, 1.0, 0.0, 1.0, 0.0).unwrap();
    let big = PhysParams { m_i: 2.0, m_g: 2.0, g: 2.0, ..params };
    let a = AirySolution::new(&params, 0.0).unwrap();
    let b = AirySolution::new(&big, 0.0).unwrap();
    assert!((b.kappa / a.kappa - 2.0).abs() < 1e-14);

    // nodes at (ε + a_j)/κ: check sign changes bracket them
    let e = 0.7;
    let sol = AirySolution::new(&params, e).unwrap();
    for j in 1..=4 {
        let z = sol.node(j).unwrap();
        let root = bisect(|z| sol.value(z), z - 1e-3, z + 1e-3, 1e-13);
        assert!((root - z).abs() < 1e-10);
    }

    // stationary Schrödinger equation −ħ²/2m u″ + m_g g z u = E u, in units of κ
    let params = PhysParams::new(1.3, 0.6, 2.0, 0.0, 0.8, 0.0).unwrap();
    let e = 1.1;
    let sol = AirySolution::new(&params, e).unwrap();
    let h = 1e-3 / sol.kappa;
    let energy_unit = e / sol.epsilon;
    let mut worst = 0.0f64;
    for i in 0..200 {
        let z = -3.0 / sol.kappa + i as f64 * 0.05 / sol.kappa;
        let u = sol.value(z);
        let d2 = (sol.value(z + h) - 2.0 * u + sol.value(z - h)) / (h * h);
        let lhs = -params.hbar * params.hbar / (2.0 * params.m_i) * d2 + params.m_g * params.g * z * u;
        worst = worst.max(((lhs - e * u) / energy_unit).abs());
    }
    assert!(worst < 1e-6, "{worst:e}");
}

#[test]
fn coulomb_levels() {
    let params = PhysParams::new(1.0, 1.0, 1.0, 0.0, 1.0, 0.0).unwrap();
    let s = gravitational_coulomb_spectrum(&params, 2.0, 1.0, 3).unwrap();
    let e = s.energies();
    let unit = -e[0];
    let eps: Vec<f64> = e.iter().map(|v| v / unit).collect();
    assert!((eps[0] + 1.0).abs() < 1e-15 && (eps[1] + 0.25).abs() < 1e-15 && (eps[2] + 1.0 / 9.0).abs() < 1e-15);
    assert!((e[0] / e[1] - 4.0).abs() < 1e-14);
    assert!(e.windows(2).all(|w| w[0] < w[1] && w[1] < 0.0));
}

#[test]
fn harmonic_eigenstates_in_phase_space() {
    let params = PhysParams::default();
    let grid = GridSpec::new(-8.0, 8.0, 128, -8.0, 8.0, 128).unwrap();
    let w0 = harmonic_wigner_eigenstate(0, 1.0, &params, &grid).unwrap();
    assert!(w0.values().iter().all(|&v| v > -1e-15));
    assert!(w0.values().iter().filter(|&&v| v.abs() > 1e-12).all(|&v| v > 0.0));
    let w6 = harmonic_wigner_eigenstate(6, 1.0, &params, &grid).unwrap();
    assert!((phase_space_overlap(&w6, &w6).unwrap() - 1.0).abs() < 1e-6);
    let want = RealField::from_fn(grid, 1.0, |z, p| oscillator_wigner(6, z, p, 1.0, 1.0, 1.0)).unwrap();
    let err = max_abs_diff(w6.values(), want.values());
    assert!(err < 1e-8, "{err:e}");
    let m0 = grid.p.nearest(0.0).unwrap();
    let j0 = grid.z.nearest(0.0).unwrap();
    let cut: Vec<f64> = (j0..grid.z.len()).map(|j| w6.get(j, m0)).collect();
    assert_eq!(sign_changes(&cut, 1e-9), 6);
    let small = GridSpec::new(-2.0, 2.0, 64, -8.0, 8.0, 64).unwrap();
    assert!(matches!(harmonic_wigner_eigenstate(6, 1.0, &params, &small), Err(Error::GridTooSmall { .. })));
}

#[test]
fn harmonic_wavefunction_matches_textbook_form() {
    let params = PhysParams { m_i: 1.7, hbar: 0.6, ..Default::default() };
    let axis = Axis::new(-6.0, 6.0, 256).unwrap();
    for n in [0, 1, 4, 9] {
        let psi = harmonic_wavefunction(n, 1.3, &params, axis).unwrap();
        let want: Vec<f64> = axis.points().map(|z| oscillator_eigenfunction(n, z, 1.7, 1.3, 0.6)).collect();
        let got: Vec<f64> = psi.values().iter().map(|c| c.re).collect();
        assert!(max_abs_diff(&got, &want) < 1e-12, "n={n}");
    }
}

#[test]
fn eigen_residual_of_ground_state_converges() {
    let params = PhysParams::default();
    let v = PolynomialPotential::harmonic(1.0, 1.0);
    let mut last = f64::INFINITY;
    for n in [64, 128, 256] {
        let grid = GridSpec::new(-8.0, 8.0, n, -8.0, 8.0, n).unwrap();
        let w = harmonic_wigner_eigenstate(0, 1.0, &params, &grid).unwrap();
        let r = phase_space_eigen_residual(&w, 0.5, &v, &params).unwrap().max_abs();
        assert!(r < last);
        last = r;
    }
    assert!(last < 1e-4, "{last:e}");
}

#[test]
fn eigen_residual_of_excited_state_and_energy_shift() {
    let params = PhysParams::default();
    let v = PolynomialPotential::harmonic(1.0, 1.0);
    let grid = GridSpec::new(-8.0, 8.0, 256, -8.0, 8.0, 256).unwrap();
    let w = harmonic_wigner_eigenstate(3, 1.0, &params, &grid).unwrap();
    let r = phase_space_eigen_residual(&w, 3.5, &v, &params).unwrap();
    assert!(r.max_abs() < 1e-3 * w.max_abs());
    let wrong = phase_space_eigen_residual(&w, 3.5 + 0.3, &v, &params).unwrap();
    for ((a, b), wv) in wrong.values().iter().zip(r.values()).zip(w.values()) {
        assert!((a - b + 0.3 * wv).abs() < 1e-12);
    }
}

#[test]
fn quartic_eigen_residual_uses_even_corrections() {
    // V = λz⁴: L_even = −(ħ²/8)·12λz² ∂²_p + (ħ⁴/384)·24λ ∂⁴_p, on a Gaussian W
    let params = PhysParams::default();
    let sigma = 0.8;
    let g = GaussianState::new(0.0, 0.0, sigma, 1.0).unwrap();
    let grid = GridSpec::new(-6.0, 6.0, 256, -6.0, 6.0, 512).unwrap();
    let w = g.wigner_field(grid).unwrap();
    let lambda = 0.3;
    let v = PolynomialPotential::new(vec![0.0, 0.0, 0.0, 0.0, lambda]).unwrap();
    let energy = 0.4;
    let got = phase_space_eigen_residual(&w, energy, &v, &params).unwrap();
    let a = 2.0 * sigma * sigma;
    let want = RealField::from_fn(grid, 1.0, |z, p| {
        let e = g.wigner(z, p);
        let dzz = (z * z / sigma.powi(4) - 1.0 / (sigma * sigma)) * e;
        let dpp = (4.0 * a * a * p * p - 2.0 * a) * e;
        let dpppp = (16.0 * a.powi(4) * p.powi(4) - 48.0 * a.powi(3) * p * p + 12.0 * a * a) * e;
        (p * p / 2.0 + lambda * z.powi(4) - energy) * e - dzz / 8.0 - 1.5 * lambda * z * z * dpp
            + 24.0 * lambda / 384.0 * dpppp
    })
    .unwrap();
    let err = max_abs_diff(got.values(), want.values()) / want.max_abs();
    assert!(err < 1e-5, "{err:e}");
}

#[test]
fn constant_potential_only_position_curvature_depends_on_hbar() {
    let g = GaussianState::new(0.0, 1.0, 1.0, 1.0).unwrap();
    let grid = GridSpec::new(-8.0, 8.0, 128, -6.0, 8.0, 128).unwrap();
    let w = g.wigner_field(grid).unwrap();
    let v = PolynomialPotential::new(vec![0.7]).unwrap();
    let p1 = PhysParams::default();
    let p2 = PhysParams { hbar: 3.0, ..p1 };
    let r1 = phase_space_eigen_residual(&w, 0.2, &v, &p1).unwrap();
    let r2 = phase_space_eigen_residual(&w, 0.2, &v, &p2).unwrap();
    let d2 = gravphase_core::fd::derivative(&w, gravphase_core::fd::Direction::Z, 2);
    for ((a, b), d) in r1.values().iter().zip(r2.values()).zip(&d2) {
        assert!((b - a + (9.0 - 1.0) / 8.0 * d).abs() < 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bouncer_mass_power_law(m_i in 0.2f64..5.0, m_g in 0.2f64..5.0, g in 0.1f64..10.0, lambda in 0.1f64..10.0) {
        let base = PhysParams::new(m_i, m_g, g, 0.0, 1.0, 0.0).unwrap();
        let e0 = bouncer_spectrum(&base, 5).unwrap().energies();
        // m_g → λ m_g together with m_i → λ² m_i leaves E_n unchanged
        let inv = PhysParams { m_g: lambda * m_g, m_i: lambda * lambda * m_i, ..base };
        let e1 = bouncer_spectrum(&inv, 5).unwrap().energies();
        for (a, b) in e0.iter().zip(&e1) {
            prop_assert!((a / b - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn coulomb_rydberg_and_mass_law(m_i in 0.2f64..5.0, m_g in 0.2f64..5.0, lambda in 0.1f64..10.0) {
        let base = PhysParams::new(m_i, m_g, 0.0, 0.0, 1.0, 0.0).unwrap();
        let e = gravitational_coulomb_spectrum(&base, 2.0, 0.3, 8).unwrap();
        for (n, en) in &e.levels {
            prop_assert!((en * (n * n) as f64 / e.levels[0].1 - 1.0).abs() < 1e-12);
        }
        let inv = PhysParams { m_g: lambda * m_g, m_i: m_i / (lambda * lambda), ..base };
        let e1 = gravitational_coulomb_spectrum(&inv, 2.0, 0.3, 8).unwrap();
        for (a, b) in e.energies().iter().zip(&e1.energies()) {
            prop_assert!((a / b - 1.0).abs() < 1e-12);
        }
    }
}
