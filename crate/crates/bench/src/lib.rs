//! Criterion benchmarks for `masterint`; see `benches/`.
