//! Criterion benchmarks for `sdl-core`; see `benches/`.
