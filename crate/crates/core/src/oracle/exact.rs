use crate::error::{Error, Result};
use crate::model::{is_dominating, is_independent, Graph, VertexSet};

use super::bits::Bits;

/// Default search-node budget for the branch-and-bound solvers.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

struct Search<'g> {
    n: usize,
    closed: Vec<Bits>,
    independent: bool,
    nodes: u64,
    budget: u64,
    chosen: Vec<usize>,
    gains: Vec<usize>,
    g: &'g Graph,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, independent: bool, budget: u64) -> Self {
        let n = g.n();
        let closed = (0..n)
            .map(|v| {
                let mut b = Bits::new(n);
                b.insert(v);
                for &w in g.neighbors(v) {
                    b.insert(w);
                }
                b
            })
            .collect();
        Self {
            n,
            closed,
            independent,
            nodes: 0,
            budget,
            chosen: Vec::new(),
            gains: Vec::with_capacity(n),
            g,
        }
    }

    /// Can the undominated vertices be covered with `k` more picks?
    fn dfs(&mut self, dominated: &Bits, k: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Budget { limit: self.budget });
        }
        let undominated = self.n - dominated.count();
        if undominated == 0 {
            return Ok(true);
        }
        if k == 0 {
            return Ok(false);
        }

        // the k largest gains must cover everything still undominated
        self.gains.clear();
        for u in 0..self.n {
            if self.independent && dominated.contains(u) {
                continue;
            }
            let covered = self.closed[u].intersection_count(dominated);
            let gain = self.closed[u].count() - covered;
            if gain > 0 {
                self.gains.push(gain);
            }
        }
        self.gains.sort_unstable_by(|a, b| b.cmp(a));
        if self.gains.iter().take(k).sum::<usize>() < undominated {
            return Ok(false);
        }

        // branch on the undominated vertex with the fewest options
        let mut pivot = None;
        let mut fewest = usize::MAX;
        for v in (0..self.n).filter(|&v| !dominated.contains(v)) {
            let options = self.options(v, dominated).count();
            if options < fewest {
                fewest = options;
                pivot = Some(v);
                if options <= 1 {
                    break;
                }
            }
        }
        let pivot = pivot.expect("an undominated vertex exists");
        let mut options: Vec<(usize, usize)> = self
            .options(pivot, dominated)
            .map(|u| {
                (
                    self.closed[u].count() - self.closed[u].intersection_count(dominated),
                    u,
                )
            })
            .collect();
        options.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (_, u) in options {
            let mut next = dominated.clone();
            next.union_with(&self.closed[u]);
            self.chosen.push(u);
            if self.dfs(&next, k - 1)? {
                return Ok(true);
            }
            self.chosen.pop();
        }
        Ok(false)
    }

    /// Vertices that may be picked to dominate `v`.
    fn options<'a>(&'a self, v: usize, dominated: &'a Bits) -> impl Iterator<Item = usize> + 'a {
        std::iter::once(v)
            .chain(self.g.neighbors(v).iter().copied())
            .filter(move |&u| !self.independent || !dominated.contains(u))
    }
}

fn solve(g: &Graph, cap: usize, budget: u64, independent: bool) -> Result<Option<VertexSet>> {
    if cap == 0 {
        return Err(Error::InvalidInput("oracle cap must be at least 1".into()));
    }
    if g.n() == 0 {
        return Ok(Some(VertexSet::empty(0)));
    }
    let mut search = Search::new(g, independent, budget);
    let start = Bits::new(g.n());
    for k in 1..=cap.min(g.n()) {
        search.chosen.clear();
        if search.dfs(&start, k)? {
            let set = VertexSet::new(g.n(), search.chosen.iter().copied())?;
            debug_assert!(is_dominating(g, &set)?);
            debug_assert!(!independent || is_independent(g, &set)?);
            return Ok(Some(set));
        }
    }
    Ok(None)
}

/// Minimum dominating set if one of size at most `cap` exists.
///
/// Iterative deepening on the target size; each round branches on the
/// undominated vertex with the smallest closed neighborhood and prunes when
/// the largest remaining coverage gains cannot dominate what is left. Every
/// search node counts against `budget`.
pub fn exact_min_dominating_set(g: &Graph, cap: usize, budget: u64) -> Result<Option<VertexSet>> {
    solve(g, cap, budget, false)
}

/// Minimum independent dominating set if one of size at most `cap` exists.
pub fn exact_min_independent_dominating_set(
    g: &Graph,
    cap: usize,
    budget: u64,
) -> Result<Option<VertexSet>> {
    solve(g, cap, budget, true)
}

/// Minimum dominating set by plain enumeration of subsets in increasing size.
/// Limited to 30 vertices; used to cross-check the branch-and-bound.
pub fn enumerate_min_dominating_set(g: &Graph) -> Result<VertexSet> {
    let n = g.n();
    if n > 30 {
        return Err(Error::InvalidInput(format!(
            "enumeration limited to 30 vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok(VertexSet::empty(0));
    }
    let closed: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(1u32 << v, |m, &w| m | 1 << w))
        .collect();
    let all = (1u32 << n) - 1;
    for k in 1..=n {
        // Gosper's hack over all k-subsets
        let mut s: u64 = (1u64 << k) - 1;
        while s < 1u64 << n {
            let mut cover = 0u32;
            let mut rest = s;
            while rest != 0 {
                cover |= closed[rest.trailing_zeros() as usize];
                rest &= rest - 1;
            }
            if cover == all {
                return VertexSet::new(n, (0..n).filter(|&v| s >> v & 1 == 1));
            }
            let c = s & s.wrapping_neg();
            let r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    unreachable!("the full vertex set dominates")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|l| (0, l)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn star_optimum() {
        let s = exact_min_dominating_set(&star(5), 3, DEFAULT_BUDGET)
            .unwrap()
            .unwrap();
        assert_eq!(s.as_slice(), &[0]);
        let s = exact_min_independent_dominating_set(&star(5), 3, DEFAULT_BUDGET)
            .unwrap()
            .unwrap();
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn five_cycle() {
        let g = cycle(5);
        assert_eq!(
            exact_min_independent_dominating_set(&g, 5, DEFAULT_BUDGET)
                .unwrap()
                .unwrap()
                .len(),
            2
        );
        assert_eq!(enumerate_min_dominating_set(&g).unwrap().len(), 2);
    }

    #[test]
    fn cap_and_budget() {
        let g = cycle(9);
        assert!(exact_min_dominating_set(&g, 2, DEFAULT_BUDGET)
            .unwrap()
            .is_none());
        assert_eq!(
            exact_min_dominating_set(&g, 3, DEFAULT_BUDGET)
                .unwrap()
                .unwrap()
                .len(),
            3
        );
        assert!(matches!(
            exact_min_dominating_set(&cycle(30), 10, 5),
            Err(Error::Budget { limit: 5 })
        ));
        assert!(exact_min_dominating_set(&g, 0, DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn independent_optimum_can_exceed_plain_optimum() {
        // double star: adjacent centers 0 and 1, three leaves each
        let mut edges = vec![(0, 1)];
        edges.extend((2..5).map(|l| (0, l)));
        edges.extend((5..8).map(|l| (1, l)));
        let g = Graph::from_edges(8, &edges).unwrap();
        assert_eq!(
            exact_min_dominating_set(&g, 8, DEFAULT_BUDGET)
                .unwrap()
                .unwrap()
                .len(),
            2
        );
        assert_eq!(
            exact_min_independent_dominating_set(&g, 8, DEFAULT_BUDGET)
                .unwrap()
                .unwrap()
                .len(),
            4
        );
    }
}
