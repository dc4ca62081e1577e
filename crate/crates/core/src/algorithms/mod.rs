//! The approximation algorithms.
//!
//! All of them start from a greedy maximal independent set `D` (a
//! 5-approximation) and then repeatedly replace the five petals of a corona by
//! one of its cores, possibly together with up to three witnesses, until no
//! such replacement remains.

mod adversarial;
mod corona;
mod geo44;
mod mis;
mod reduce44;
mod spread;
mod weak43;

pub use adversarial::{adversarial_search, AdversarialOutcome};
pub use corona::{
    enumerate_coronas, find_reduction_core, find_weak_reduction, sole_dominated, Corona,
    ReductionPlan,
};
pub use geo44::reduce44_geometric;
pub use mis::{maximal_independent_set, mis5};
pub use reduce44::reduce44_graph;
pub use spread::select_spread_cores;
pub use weak43::weak43;

use crate::error::{Error, Result};
use crate::model::{is_dominating, is_independent, Graph, OrderPolicy, VertexSet};

/// Minimum pairwise hop distance between cores reduced in the same pass of the
/// plain reduction loop.
pub const REDUCE_MIN_HOP: usize = 5;

/// Minimum pairwise hop distance between cores reduced in the same pass of the
/// weak reduction loop. Witnesses sit at distance two from their core, so two
/// witness sets inserted together can only touch when the cores are at most
/// five hops apart.
pub const WEAK_MIN_HOP: usize = 6;

#[derive(Debug, Clone, Default)]
pub struct SolveOptions {
    pub order: OrderPolicy,
    /// Verify independence and domination after every pass, not only at the
    /// end.
    pub check_iterations: bool,
}

impl SolveOptions {
    pub fn with_order(order: OrderPolicy) -> Self {
        Self {
            order,
            check_iterations: false,
        }
    }
}

pub(crate) fn verify_independent_dominating(g: &Graph, d: &VertexSet, what: &str) -> Result<()> {
    if !is_independent(g, d)? {
        return Err(Error::Invariant(format!(
            "{what}: solution is not independent"
        )));
    }
    if !is_dominating(g, d)? {
        return Err(Error::Invariant(format!(
            "{what}: solution is not dominating"
        )));
    }
    Ok(())
}
