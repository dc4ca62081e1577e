//! Grid index over integer points, exact adjacency construction, the
//! geometric maximal independent set and common intersections of disks.

mod grid;
mod mis;
mod region;

pub use grid::{build_adjacency, build_grid, GridIndex};
pub use mis::geometric_mis;
pub use region::{disks_common_intersection, region_contains, Arc, Region};
