use crate::error::{Error, Result};
use crate::model::{Algorithm, Graph, Solution, VertexSet};

use super::{
    enumerate_coronas, find_reduction_core, maximal_independent_set, select_spread_cores,
    verify_independent_dominating, ReductionPlan, SolveOptions, REDUCE_MIN_HOP,
};

/// Graph-based 44/9-approximation.
///
/// Starting from a greedy maximal independent set, each pass lists the
/// coronas, finds the reducible ones, keeps a subset whose cores are pairwise
/// at least five hops apart and reduces them all. The loop stops at the first
/// pass with nothing to reduce, so the result has no reducible corona.
pub fn reduce44_graph(g: &Graph, opts: &SolveOptions) -> Result<Solution> {
    let start = maximal_independent_set(g, &opts.order)?;
    let mut in_d = start.mask().to_vec();
    let mut history = vec![start.len()];
    let cap = g.n() + 1;
    let mut iterations = 0;
    let set = loop {
        iterations += 1;
        if iterations > cap {
            return Err(Error::IterationCap {
                algorithm: "reduce44",
                cap,
            });
        }
        let d = VertexSet::from_mask(in_d.clone());
        let plans: Vec<ReductionPlan> = enumerate_coronas(g, &d)?
            .into_iter()
            .filter_map(|corona| {
                find_reduction_core(g, &d, &corona).map(|core| ReductionPlan {
                    core,
                    corona,
                    witnesses: Vec::new(),
                })
            })
            .collect();
        let chosen = select_spread_cores(g, plans, REDUCE_MIN_HOP);
        if chosen.is_empty() {
            break d;
        }
        for plan in &chosen {
            plan.apply(&mut in_d);
        }
        history.push(history.last().unwrap() - 4 * chosen.len());
        if opts.check_iterations {
            verify_independent_dominating(g, &VertexSet::from_mask(in_d.clone()), "reduce44")?;
        }
    };
    verify_independent_dominating(g, &set, "reduce44")?;
    debug_assert_eq!(set.len(), *history.last().unwrap());
    Ok(Solution {
        set,
        algorithm: Algorithm::Reduce44,
        iterations,
        order: opts.order.clone(),
        history,
    })
}
