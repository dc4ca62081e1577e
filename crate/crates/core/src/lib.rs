//! Approximation algorithms for minimum (independent) dominating sets in
//! unit disk graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`model`] holds the shared domain types ([`Graph`], [`PointInstance`],
//!   [`VertexSet`], [`Solution`]) and the elementary predicates.
//! * [`spatial`] has the grid index, exact adjacency construction, the
//!   geometric maximal independent set and the disk-intersection [`Region`].
//! * [`algorithms`] implements the 5-approximation (maximal independent set),
//!   the corona-reduction 44/9-approximations (graph-based and geometric) and
//!   the weak-reduction 43/9-approximation.
//! * [`oracle`] provides exact solvers and structural checkers used to test
//!   the approximation guarantees on small instances.
//! * [`instances`] covers random generation, the two built-in lower-bound
//!   instances and the text file formats.

pub mod algorithms;
pub mod error;
pub mod instances;
pub mod model;
pub mod oracle;
pub mod spatial;

pub use algorithms::{Corona, ReductionPlan, SolveOptions};
pub use error::{Error, Result};
pub use model::{
    hop_distance_within, is_dominating, is_independent, Algorithm, Graph, OrderPolicy, Point,
    PointInstance, Ranking, Solution, VertexSet,
};
pub use spatial::{GridIndex, Region};
