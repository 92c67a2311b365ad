//! Criterion benchmarks for `isogroth`; see `benches/`.
