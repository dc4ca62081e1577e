use crate::error::{Error, Result};

use super::VertexSet;

/// Undirected simple graph in compressed adjacency form.
///
/// Neighbor lists are sorted ascending with no duplicates or self-loops, and
/// the adjacency relation is symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an undirected edge list. Each edge may appear once,
    /// in either orientation.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut lists = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            lists[u].push(v);
            lists[v].push(u);
        }
        for (u, list) in lists.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidInput(format!(
                    "duplicate edge {{{u}, {}}}",
                    w[0]
                )));
            }
        }
        Ok(Self::from_lists_unchecked(lists))
    }

    /// Builds a graph from per-vertex neighbor lists, validating the invariants.
    pub fn from_adjacency(mut lists: Vec<Vec<usize>>) -> Result<Self> {
        let n = lists.len();
        for (u, list) in lists.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            for &v in list.iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if v == u {
                    return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
                }
            }
        }
        for (u, list) in lists.iter().enumerate() {
            for &v in list {
                if lists[v].binary_search(&u).is_err() {
                    return Err(Error::InvalidInput(format!(
                        "asymmetric adjacency: {v} in N({u}) but {u} not in N({v})"
                    )));
                }
            }
        }
        Ok(Self::from_lists_unchecked(lists))
    }

    /// Callers guarantee sorted, symmetric, loop-free lists.
    pub(crate) fn from_lists_unchecked(lists: Vec<Vec<usize>>) -> Self {
        let mut offsets = Vec::with_capacity(lists.len() + 1);
        let mut targets = Vec::with_capacity(lists.iter().map(Vec::len).sum());
        offsets.push(0);
        for list in lists {
            targets.extend(list);
            offsets.push(targets.len());
        }
        Self { offsets, targets }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Sorted closed neighborhood `N[v]`.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let nb = self.neighbors(v);
        let at = nb.partition_point(|&w| w < v);
        let mut out = Vec::with_capacity(nb.len() + 1);
        out.extend_from_slice(&nb[..at]);
        out.push(v);
        out.extend_from_slice(&nb[at..]);
        out
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| u < v)
                .map(move |&v| (u, v))
        })
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.iter().find(|&v| v >= self.n()) {
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            }),
            None => Ok(()),
        }
    }
}

/// True iff every vertex is in `s` or has a neighbor in `s`.
pub fn is_dominating(g: &Graph, s: &VertexSet) -> Result<bool> {
    g.check_set(s)?;
    Ok((0..g.n()).all(|v| s.contains(v) || g.neighbors(v).iter().any(|&w| s.contains(w))))
}

/// True iff no edge joins two members of `s`.
pub fn is_independent(g: &Graph, s: &VertexSet) -> Result<bool> {
    g.check_set(s)?;
    Ok(s.iter()
        .all(|v| g.neighbors(v).iter().all(|&w| !s.contains(w))))
}

/// True iff the hop distance between `u` and `v` is at most `d`.
pub fn hop_distance_within(g: &Graph, u: usize, v: usize, d: usize) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    Ok(BoundedBfs::new(g.n()).within(g, u, v, d))
}

/// Reusable scratch space for depth-truncated breadth-first searches.
///
/// Visited marks are epoch-stamped so consecutive searches cost only the size
/// of the explored ball.
#[derive(Debug, Clone)]
pub struct BoundedBfs {
    stamp: Vec<u32>,
    epoch: u32,
    frontier: Vec<usize>,
    next: Vec<usize>,
}

impl BoundedBfs {
    pub fn new(n: usize) -> Self {
        Self {
            stamp: vec![0; n],
            epoch: 0,
            frontier: Vec::new(),
            next: Vec::new(),
        }
    }

    fn bump(&mut self) {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.fill(0);
            self.epoch = 1;
        }
    }

    pub fn within(&mut self, g: &Graph, u: usize, v: usize, d: usize) -> bool {
        u == v || self.ball_any(g, u, d, |w| w == v)
    }

    /// Explores the closed `d`-ball around `source` and returns true as soon as
    /// `hit` accepts a visited vertex.
    pub fn ball_any(
        &mut self,
        g: &Graph,
        source: usize,
        d: usize,
        mut hit: impl FnMut(usize) -> bool,
    ) -> bool {
        self.bump();
        let epoch = self.epoch;
        self.stamp[source] = epoch;
        if hit(source) {
            return true;
        }
        self.frontier.clear();
        self.frontier.push(source);
        for _ in 0..d {
            self.next.clear();
            for &x in &self.frontier {
                for &y in g.neighbors(x) {
                    if self.stamp[y] != epoch {
                        self.stamp[y] = epoch;
                        if hit(y) {
                            return true;
                        }
                        self.next.push(y);
                    }
                }
            }
            if self.next.is_empty() {
                break;
            }
            std::mem::swap(&mut self.frontier, &mut self.next);
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|l| (0, l)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn set(n: usize, ids: &[usize]) -> VertexSet {
        VertexSet::new(n, ids.iter().copied()).unwrap()
    }

    #[test]
    fn domination_on_stars() {
        let g = star(5);
        assert!(is_dominating(&g, &set(6, &[0])).unwrap());
        assert!(!is_dominating(&g, &set(6, &[1])).unwrap());
        let empty = Graph::from_edges(3, &[]).unwrap();
        assert!(is_dominating(&empty, &set(3, &[0, 1, 2])).unwrap());
    }

    #[test]
    fn independence() {
        let g = star(5);
        assert!(is_independent(&g, &set(6, &[1, 2, 3, 4, 5])).unwrap());
        assert!(is_independent(&g, &set(6, &[])).unwrap());
        let e = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(!is_independent(&e, &set(2, &[0, 1])).unwrap());
    }

    #[test]
    fn out_of_range_sets_are_rejected() {
        let g = star(2);
        let s = set(10, &[7]);
        assert!(matches!(
            is_dominating(&g, &s),
            Err(Error::VertexOutOfRange { vertex: 7, n: 3 })
        ));
        assert!(is_independent(&g, &s).is_err());
        assert!(hop_distance_within(&g, 0, 3, 1).is_err());
    }

    #[test]
    fn truncated_hop_distance() {
        let g = path(5);
        assert!(hop_distance_within(&g, 2, 2, 0).unwrap());
        assert!(!hop_distance_within(&g, 0, 4, 3).unwrap());
        assert!(hop_distance_within(&g, 0, 4, 4).unwrap());
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!hop_distance_within(&split, 0, 3, 100).unwrap());
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
        assert!(Graph::from_adjacency(vec![vec![1], vec![]]).is_err());
    }

    #[test]
    fn closed_neighborhood_is_sorted() {
        let g = Graph::from_edges(5, &[(2, 0), (2, 4), (2, 1)]).unwrap();
        assert_eq!(g.closed_neighborhood(2), vec![0, 1, 2, 4]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 2), (2, 4)]);
        assert_eq!(g.m(), 3);
    }
}
