//! Instance fixtures shared by the benchmarks.

use udgds_core::instances::{generate, GeneratorConfig};
use udgds_core::spatial::build_adjacency;
use udgds_core::{Graph, PointInstance};

/// Threshold used for every benchmark instance.
pub const THRESHOLD: i64 = 1_000_000;

/// Expected points per threshold-by-threshold square.
pub const DENSITY: f64 = 2.0;

/// Uniform points at [`DENSITY`]; the box grows with `sqrt(n)`.
pub fn uniform_points(n: usize, seed: u64) -> PointInstance {
    generate(&GeneratorConfig::with_density(n, THRESHOLD, DENSITY, seed)).expect("valid config")
}

/// Points together with their unit disk graph.
pub fn uniform_instance(n: usize, seed: u64) -> (PointInstance, Graph) {
    let points = uniform_points(n, seed);
    let graph = build_adjacency(&points);
    (points, graph)
}
