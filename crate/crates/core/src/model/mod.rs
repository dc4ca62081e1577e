//! Domain types shared by every solver, plus the elementary predicates.

mod graph;
mod order;
mod points;
mod solution;
mod vertex_set;

pub use graph::{hop_distance_within, is_dominating, is_independent, BoundedBfs, Graph};
pub use order::{OrderPolicy, Ranking};
pub use points::{Point, PointInstance, MAX_COORDINATE};
pub use solution::{Algorithm, Solution};
pub use vertex_set::VertexSet;
