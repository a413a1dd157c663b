//! Criterion benchmarks for the quotient engine; see `benches/`.
