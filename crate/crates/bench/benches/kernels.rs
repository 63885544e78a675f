use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gravphase_core::{
    airy_ai, airy_zero, classical_flow, evolve, exit_probability_exact, propagate_path, run_interferometer,
    transport, wigner_transform, Axis, GaussianState, GridSpec, InitialState, Path, PhysParams,
    PolynomialPotential, PulseSequence, Source, SplitStepConfig, TwoComponentState,
};

fn params() -> PhysParams {
    PhysParams::new(1.0, 1.0, 2.0, 0.1, 1.0, 4.0).unwrap()
}

fn wigner(c: &mut Criterion) {
    let mut group = c.benchmark_group("wigner_transform");
    for n in [64usize, 128, 256] {
        let g = GaussianState::new(0.3, -0.5, 1.0, 1.0).unwrap();
        let psi = g.sample(Axis::new(-16.0, 16.0, 4 * n).unwrap()).unwrap();
        let grid = GridSpec::new(-8.0, 8.0, n, -8.0, 8.0, n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| wigner_transform(black_box(&psi), &grid).unwrap())
        });
    }
    group.finish();
}

fn liouville(c: &mut Criterion) {
    let p = params();
    let g = GaussianState::new(0.0, 0.0, 1.0, 1.0).unwrap();
    let grid = GridSpec::new(-16.0, 16.0, 256, -16.0, 16.0, 256).unwrap();
    let flow = classical_flow(&p, 1.0).unwrap();
    let table = g.wigner_field(grid).unwrap();
    c.bench_function("transport/gaussian_256", |b| b.iter(|| transport(Source::Gaussian(&g), &flow, &grid).unwrap()));
    c.bench_function("transport/tabulated_256", |b| {
        b.iter(|| transport(Source::Tabulated(&table), &flow, &grid).unwrap())
    });
    let seq = PulseSequence::new(1.0, 4.0).unwrap();
    c.bench_function("propagate_path/interference_256", |b| {
        b.iter(|| propagate_path(Source::Gaussian(&g), Path::Interference, &seq, &p, &grid).unwrap())
    });
}

fn interferometer(c: &mut Criterion) {
    let p = params();
    let seq = PulseSequence::new(1.0, 4.0).unwrap().with_laser_phase(0.4);
    let g = InitialState::Gaussian(GaussianState::new(0.0, 0.0, 1.0, 1.0).unwrap());
    c.bench_function("exit_probability_exact", |b| b.iter(|| exit_probability_exact(black_box(&seq), &p, &g).unwrap()));
}

fn oracle(c: &mut Criterion) {
    let p = params();
    let v = PolynomialPotential::gravity(&p);
    let psi = GaussianState::new(0.0, 0.0, 1.0, 1.0).unwrap().sample(Axis::new(-40.0, 40.0, 2048).unwrap()).unwrap();
    let cfg = SplitStepConfig::new(256).unwrap();
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    let s = TwoComponentState::ground(psi.clone());
    group.bench_function("evolve_2048x256", |b| b.iter(|| evolve(&s, &p, &v, 1.0, &cfg).unwrap()));
    let seq = PulseSequence::new(1.0, 4.0).unwrap();
    group.bench_function("run_interferometer_2048", |b| b.iter(|| run_interferometer(&seq, &p, &v, &psi, &cfg).unwrap()));
    group.finish();
}

fn airy(c: &mut Criterion) {
    let xs: Vec<f64> = (0..1000).map(|i| -50.0 + 0.1 * i as f64).collect();
    c.bench_function("airy_ai/1000_points", |b| b.iter(|| xs.iter().map(|&x| airy_ai(black_box(x))).sum::<f64>()));
    c.bench_function("airy_zero/n=1..20", |b| b.iter(|| (1..=20).map(|n| airy_zero(n).unwrap()).sum::<f64>()));
}

criterion_group!(benches, wigner, liouville, interferometer, oracle, airy);
criterion_main!(benches);
