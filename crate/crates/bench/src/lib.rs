//! Criterion benchmarks for the nczeta pipeline; see `benches/`.
