use crate::error::{Error, Result};
use crate::model::{Graph, Ranking, VertexSet};

/// Five pairwise non-adjacent solution vertices (the petals) together with
/// every non-solution vertex adjacent to all five (the cores).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corona {
    /// Sorted ascending.
    pub petals: [usize; 5],
    /// Sorted ascending, never empty.
    pub cores: Vec<usize>,
}

impl Corona {
    #[inline]
    pub fn has_petal(&self, v: usize) -> bool {
        self.petals.contains(&v)
    }
}

/// A replacement of a corona's petals by one core plus (for weak reductions)
/// up to three witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionPlan {
    pub core: usize,
    pub corona: Corona,
    /// Sorted ascending; empty for plain reductions.
    pub witnesses: Vec<usize>,
}

impl ReductionPlan {
    /// Net change of the solution size (always negative).
    pub fn delta(&self) -> isize {
        self.witnesses.len() as isize + 1 - 5
    }

    /// Applies the plan to a membership mask.
    pub(crate) fn apply(&self, in_d: &mut [bool]) {
        for &p in &self.corona.petals {
            in_d[p] = false;
        }
        in_d[self.core] = true;
        for &w in &self.witnesses {
            in_d[w] = true;
        }
    }
}

/// Groups vertices with exactly five solution neighbors into coronas, ordered
/// by their petal tuples.
///
/// `dominators(v)` yields `N_D(v)` for a non-solution vertex `v`, ascending.
/// Petals must be vertex ids; `v` may live in any index space of size `n`
/// (cores are reported in that space). Only the few candidate vertices are
/// stored and grouped by sorting, so no per-vertex table is allocated.
pub(crate) fn group_coronas(
    n: usize,
    in_d: impl Fn(usize) -> bool,
    mut dominators: impl FnMut(usize, &mut Vec<usize>),
) -> Result<Vec<Corona>> {
    let mut candidates: Vec<([usize; 5], usize)> = Vec::new();
    let mut buf = Vec::with_capacity(8);
    for v in 0..n {
        if in_d(v) {
            continue;
        }
        buf.clear();
        dominators(v, &mut buf);
        match buf.len() {
            0..=4 => continue,
            5 => candidates.push((buf[..].try_into().expect("five dominators"), v)),
            k => {
                return Err(Error::NotUnitDisk {
                    vertex: v,
                    dominators: k,
                })
            }
        }
    }
    candidates.sort_unstable();
    let mut coronas: Vec<Corona> = Vec::new();
    for (petals, core) in candidates {
        match coronas.last_mut() {
            Some(last) if last.petals == petals => last.cores.push(core),
            _ => coronas.push(Corona {
                petals,
                cores: vec![core],
            }),
        }
    }
    Ok(coronas)
}

/// Lists every corona of the independent dominating set `d`, each with all of
/// its cores, ordered by petals. Runs in `O(n + m + k log k)` for `k`
/// vertices with five solution neighbors.
///
/// Fails with [`Error::NotUnitDisk`] when some vertex has six or more
/// neighbors in `d`, which exhibits an induced `K_{1,6}`.
pub fn enumerate_coronas(g: &Graph, d: &VertexSet) -> Result<Vec<Corona>> {
    g.check_set(d)?;
    group_coronas(
        g.n(),
        |v| d.contains(v),
        |v, out| out.extend(g.neighbors(v).iter().copied().filter(|&w| d.contains(w))),
    )
}

/// Vertices adjacent to some petal whose only solution neighbors are petals of
/// this corona. Every core is among them.
pub fn sole_dominated(g: &Graph, d: &VertexSet, corona: &Corona) -> Vec<usize> {
    let mut reach: Vec<usize> = corona
        .petals
        .iter()
        .flat_map(|&p| g.neighbors(p).iter().copied())
        .collect();
    reach.sort_unstable();
    reach.dedup();
    reach.retain(|&w| {
        !d.contains(w)
            && g.neighbors(w)
                .iter()
                .all(|&x| !d.contains(x) || corona.has_petal(x))
    });
    reach
}

/// Returns the smallest vertex adjacent to every petal and to every vertex
/// dominated only by the petals, i.e. the smallest core `c` for which
/// `D + c - petals` still dominates. `None` certifies that every core has a
/// witness.
pub fn find_reduction_core(g: &Graph, d: &VertexSet, corona: &Corona) -> Option<usize> {
    let exclusive = sole_dominated(g, d, corona);
    let mut common = g.closed_neighborhood(corona.petals[0]);
    for v in corona.petals[1..].iter().chain(&exclusive).copied() {
        common.retain(|&x| x == v || g.is_adjacent(v, x));
        if common.is_empty() {
            return None;
        }
    }
    common.first().copied()
}

/// Looks for a weak reduction of the corona.
///
/// Cores are tried in ascending id. For each, the witnesses are the vertices
/// dominated only by the petals and not in `N[core]`; a maximal independent
/// subset of them is built greedily in `ranking` order. The first core whose
/// subset has at most three vertices yields a plan. Cores with four or more
/// independent witnesses are overwhelmed; `None` means all of them are.
pub fn find_weak_reduction(
    g: &Graph,
    d: &VertexSet,
    corona: &Corona,
    ranking: &Ranking,
) -> Option<ReductionPlan> {
    let exclusive = sole_dominated(g, d, corona);
    let mut chosen = Vec::with_capacity(4);
    for &core in &corona.cores {
        let mut witnesses: Vec<usize> = exclusive
            .iter()
            .copied()
            .filter(|&w| w != core && !g.is_adjacent(core, w))
            .collect();
        witnesses.sort_by_key(|&w| ranking.rank(w));
        chosen.clear();
        for w in witnesses {
            if chosen.iter().all(|&x| !g.is_adjacent(w, x)) {
                chosen.push(w);
                if chosen.len() > 3 {
                    break;
                }
            }
        }
        if chosen.len() <= 3 {
            let mut witnesses = chosen.clone();
            witnesses.sort_unstable();
            return Some(ReductionPlan {
                core,
                corona: corona.clone(),
                witnesses,
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::is_dominating;

    fn set(n: usize, ids: &[usize]) -> VertexSet {
        VertexSet::new(n, ids.iter().copied()).unwrap()
    }

    /// Star with center 0 and leaves 1..=5, plus extra edges.
    fn star5_with(extra_n: usize, extra: &[(usize, usize)]) -> Graph {
        let mut edges: Vec<_> = (1..=5).map(|l| (0, l)).collect();
        edges.extend_from_slice(extra);
        Graph::from_edges(6 + extra_n, &edges).unwrap()
    }

    #[test]
    fn star_corona() {
        let g = star5_with(0, &[]);
        let d = set(6, &[1, 2, 3, 4, 5]);
        let cs = enumerate_coronas(&g, &d).unwrap();
        assert_eq!(
            cs,
            vec![Corona {
                petals: [1, 2, 3, 4, 5],
                cores: vec![0]
            }]
        );
        assert_eq!(find_reduction_core(&g, &d, &cs[0]), Some(0));
        let plan = find_weak_reduction(&g, &d, &cs[0], &Ranking::identity(6)).unwrap();
        assert_eq!((plan.core, plan.witnesses.len(), plan.delta()), (0, 0, -4));
    }

    #[test]
    fn path_has_no_coronas() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(enumerate_coronas(&g, &set(3, &[0, 2])).unwrap().is_empty());
    }

    #[test]
    fn pendant_witness_blocks_reduction() {
        // vertex 6 hangs off leaf 1 only
        let g = star5_with(1, &[(1, 6)]);
        let d = set(7, &[1, 2, 3, 4, 5]);
        let cs = enumerate_coronas(&g, &d).unwrap();
        assert_eq!(sole_dominated(&g, &d, &cs[0]), vec![0, 6]);
        assert_eq!(find_reduction_core(&g, &d, &cs[0]), None);
        // one witness: the weak reduction takes it along
        let plan = find_weak_reduction(&g, &d, &cs[0], &Ranking::identity(7)).unwrap();
        assert_eq!(plan.witnesses, vec![6]);
        assert_eq!(plan.delta(), -3);
    }

    #[test]
    fn three_witnesses_still_reduce_weakly() {
        let g = star5_with(3, &[(1, 6), (2, 7), (3, 8)]);
        let d = set(9, &[1, 2, 3, 4, 5]);
        let c = &enumerate_coronas(&g, &d).unwrap()[0];
        let plan = find_weak_reduction(&g, &d, c, &Ranking::identity(9)).unwrap();
        assert_eq!(plan.witnesses, vec![6, 7, 8]);
        assert_eq!(plan.delta(), -1);
        let mut mask = d.mask().to_vec();
        plan.apply(&mut mask);
        assert!(is_dominating(&g, &VertexSet::from_mask(mask)).unwrap());
    }

    #[test]
    fn four_independent_witnesses_overwhelm() {
        let g = star5_with(4, &[(1, 6), (2, 7), (3, 8), (4, 9)]);
        let d = set(10, &[1, 2, 3, 4, 5]);
        let c = &enumerate_coronas(&g, &d).unwrap()[0];
        assert!(find_weak_reduction(&g, &d, c, &Ranking::identity(10)).is_none());
    }

    #[test]
    fn adjacent_witnesses_need_only_one() {
        // witnesses 6 and 7 are adjacent; one of them dominates both
        let g = star5_with(4, &[(1, 6), (2, 7), (6, 7), (3, 8), (4, 9)]);
        let d = set(10, &[1, 2, 3, 4, 5]);
        let c = &enumerate_coronas(&g, &d).unwrap()[0];
        let plan = find_weak_reduction(&g, &d, c, &Ranking::identity(10)).unwrap();
        assert_eq!(plan.witnesses, vec![6, 8, 9]);
    }

    #[test]
    fn six_dominators_are_rejected() {
        let edges: Vec<_> = (1..=6).map(|l| (0, l)).collect();
        let g = Graph::from_edges(7, &edges).unwrap();
        let d = set(7, &[1, 2, 3, 4, 5, 6]);
        assert!(matches!(
            enumerate_coronas(&g, &d),
            Err(Error::NotUnitDisk {
                vertex: 0,
                dominators: 6
            })
        ));
    }

    #[test]
    fn shared_petals_merge_cores() {
        // two cores 0 and 6 over the same five petals
        let mut edges: Vec<_> = (1..=5).flat_map(|l| [(0, l), (6, l)]).collect();
        edges.push((0, 6));
        let g = Graph::from_edges(7, &edges).unwrap();
        let d = set(7, &[1, 2, 3, 4, 5]);
        let cs = enumerate_coronas(&g, &d).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].cores, vec![0, 6]);
    }
}
