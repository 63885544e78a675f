//! Criterion benchmarks for gravphase-core live in `benches/`.
