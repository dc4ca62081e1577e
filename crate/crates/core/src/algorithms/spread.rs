use crate::model::{BoundedBfs, Graph};

use super::ReductionPlan;

/// Greedily keeps plans in ascending core order, dropping any plan whose core
/// lies within `min_hop - 1` hops of an already kept core.
///
/// Each candidate costs one BFS truncated at depth `min_hop - 1`.
pub fn select_spread_cores(
    g: &Graph,
    mut plans: Vec<ReductionPlan>,
    min_hop: usize,
) -> Vec<ReductionPlan> {
    plans.sort_by_key(|p| p.core);
    let mut kept_mark = vec![false; g.n()];
    let mut bfs = BoundedBfs::new(g.n());
    let mut kept = Vec::new();
    for plan in plans {
        let depth = min_hop.saturating_sub(1);
        if bfs.ball_any(g, plan.core, depth, |v| kept_mark[v]) {
            continue;
        }
        kept_mark[plan.core] = true;
        kept.push(plan);
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::Corona;

    fn plan(core: usize) -> ReductionPlan {
        ReductionPlan {
            core,
            corona: Corona {
                petals: [0; 5],
                cores: vec![core],
            },
            witnesses: vec![],
        }
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn single_plan_survives() {
        let kept = select_spread_cores(&path(3), vec![plan(1)], 5);
        assert_eq!(kept.len(), 1);
    }

    #[test]
    fn close_cores_keep_the_first() {
        let kept = select_spread_cores(&path(10), vec![plan(6), plan(2)], 5);
        assert_eq!(kept.iter().map(|p| p.core).collect::<Vec<_>>(), vec![2]);
        let kept = select_spread_cores(&path(10), vec![plan(7), plan(2)], 5);
        assert_eq!(kept.len(), 2);
    }

    #[test]
    fn disconnected_cores_both_survive() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(select_spread_cores(&g, vec![plan(0), plan(3)], 5).len(), 2);
    }
}
