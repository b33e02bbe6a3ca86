//! Benchmark-only crate; the measurements live in `benches/main.rs`.
