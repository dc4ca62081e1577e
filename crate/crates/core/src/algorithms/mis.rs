use crate::error::Result;
use crate::model::{Algorithm, Graph, OrderPolicy, Solution, VertexSet};

use super::{verify_independent_dominating, SolveOptions};

/// Greedy maximal independent set: scan vertices in the order policy and keep
/// every vertex with no kept neighbor. Runs in `O(n + m)`.
pub fn maximal_independent_set(g: &Graph, order: &OrderPolicy) -> Result<VertexSet> {
    let mut covered = vec![false; g.n()];
    let mut chosen = vec![false; g.n()];
    for v in order.permutation(g.n())? {
        if covered[v] {
            continue;
        }
        chosen[v] = true;
        covered[v] = true;
        for &w in g.neighbors(v) {
            covered[w] = true;
        }
    }
    Ok(VertexSet::from_mask(chosen))
}

/// The 5-approximation: a maximal independent set wrapped as a [`Solution`].
pub fn mis5(g: &Graph, opts: &SolveOptions) -> Result<Solution> {
    let set = maximal_independent_set(g, &opts.order)?;
    verify_independent_dominating(g, &set, "mis5")?;
    Ok(Solution {
        history: vec![set.len()],
        set,
        algorithm: Algorithm::Mis5,
        iterations: 0,
        order: opts.order.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|l| (0, l)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    #[test]
    fn star_center_first() {
        let s = maximal_independent_set(&star(6), &OrderPolicy::Id).unwrap();
        assert_eq!(s.as_slice(), &[0]);
    }

    #[test]
    fn star_leaves_first() {
        let order = OrderPolicy::Explicit(vec![1, 2, 3, 4, 5, 6, 0]);
        let s = maximal_independent_set(&star(6), &order).unwrap();
        assert_eq!(s.as_slice(), &[1, 2, 3, 4, 5, 6]);
    }
}
