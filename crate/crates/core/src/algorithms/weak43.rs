use crate::error::{Error, Result};
use crate::model::{Algorithm, Graph, Solution, VertexSet};

use super::{
    enumerate_coronas, find_weak_reduction, maximal_independent_set, select_spread_cores,
    verify_independent_dominating, ReductionPlan, SolveOptions, WEAK_MIN_HOP,
};

/// Graph-based 43/9-approximation using weak reductions.
///
/// Like [`super::reduce44_graph`], but a corona may also be replaced by a core
/// together with at most three independent witnesses. On termination every
/// remaining corona has only overwhelmed cores. Weak reductions can create new
/// weakly reducible coronas, so the number of passes is only bounded by `n`.
pub fn weak43(g: &Graph, opts: &SolveOptions) -> Result<Solution> {
    let ranking = opts.order.ranking(g.n())?;
    let start = maximal_independent_set(g, &opts.order)?;
    let mut in_d = start.mask().to_vec();
    let mut history = vec![start.len()];
    let cap = g.n() + 1;
    let mut iterations = 0;
    let set = loop {
        iterations += 1;
        if iterations > cap {
            return Err(Error::IterationCap {
                algorithm: "weak43",
                cap,
            });
        }
        let d = VertexSet::from_mask(in_d.clone());
        let plans: Vec<ReductionPlan> = enumerate_coronas(g, &d)?
            .iter()
            .filter_map(|corona| find_weak_reduction(g, &d, corona, &ranking))
            .collect();
        let chosen = select_spread_cores(g, plans, WEAK_MIN_HOP);
        if chosen.is_empty() {
            break d;
        }
        let mut size = *history.last().unwrap() as isize;
        for plan in &chosen {
            plan.apply(&mut in_d);
            size += plan.delta();
        }
        history.push(size as usize);
        if opts.check_iterations {
            verify_independent_dominating(g, &VertexSet::from_mask(in_d.clone()), "weak43")?;
        }
    };
    verify_independent_dominating(g, &set, "weak43")?;
    debug_assert_eq!(set.len(), *history.last().unwrap());
    Ok(Solution {
        set,
        algorithm: Algorithm::Weak43,
        iterations,
        order: opts.order.clone(),
        history,
    })
}
