use crate::error::{Error, Result};
use crate::model::{Graph, VertexSet};

use super::bits::Bits;

/// Largest vertex subset accepted by [`max_independent_within`].
pub const MAX_EXACT_SUBSET: usize = 128;

const MIS_NODE_BUDGET: u64 = 20_000_000;

/// Degree-1 vertices at distance one (`k`) and exactly two (`l`) from a
/// generator vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PendantProfile {
    pub generator: usize,
    pub k: usize,
    pub l: usize,
}

pub fn pendant_profile(g: &Graph, v: usize) -> Result<PendantProfile> {
    g.check_vertex(v)?;
    let mut seen = vec![false; g.n()];
    seen[v] = true;
    for &w in g.neighbors(v) {
        seen[w] = true;
    }
    let k = g.neighbors(v).iter().filter(|&&w| g.degree(w) == 1).count();
    let mut l = 0;
    for &w in g.neighbors(v) {
        for &x in g.neighbors(w) {
            if !seen[x] {
                seen[x] = true;
                if g.degree(x) == 1 {
                    l += 1;
                }
            }
        }
    }
    Ok(PendantProfile { generator: v, k, l })
}

/// Induced subgraph on `vertices` as local bit rows.
fn induced(g: &Graph, vertices: &[usize]) -> Vec<Bits> {
    let s = vertices.len();
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in vertices.iter().enumerate() {
        local[v] = i;
    }
    vertices
        .iter()
        .map(|&v| {
            let mut row = Bits::new(s);
            for &w in g.neighbors(v) {
                if local[w] != usize::MAX {
                    row.insert(local[w]);
                }
            }
            row
        })
        .collect()
}

struct Mis<'a> {
    adj: &'a [Bits],
    best: usize,
    stop_at: usize,
    nodes: u64,
    budget: u64,
}

impl Mis<'_> {
    fn run(&mut self, cand: Bits, size: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Budget { limit: self.budget });
        }
        if self.best >= self.stop_at {
            return Ok(());
        }
        let left = cand.count();
        if size + left <= self.best {
            return Ok(());
        }
        if left == 0 {
            self.best = size;
            return Ok(());
        }
        // some vertex of N[v] is in every maximal independent set; branch on
        // the candidate with the smallest such neighborhood
        let v = cand
            .iter()
            .min_by_key(|&v| self.adj[v].intersection_count(&cand))
            .expect("non-empty");
        let mut options = vec![v];
        options.extend(self.adj[v].iter().filter(|&u| cand.contains(u)));
        for u in options {
            let mut next = cand.clone();
            next.remove(u);
            next.difference_with(&self.adj[u]);
            self.run(next, size + 1)?;
        }
        Ok(())
    }
}

fn independence_number(adj: &[Bits], stop_at: usize, budget: u64) -> Result<usize> {
    let mut search = Mis {
        adj,
        best: 0,
        stop_at,
        nodes: 0,
        budget,
    };
    search.run(Bits::full(adj.len()), 0)?;
    Ok(search.best)
}

/// Exact size of a maximum independent set of the subgraph induced by `s`.
pub fn max_independent_within(g: &Graph, s: &VertexSet) -> Result<usize> {
    g.check_set(s)?;
    if s.len() > MAX_EXACT_SUBSET {
        return Err(Error::Budget {
            limit: MAX_EXACT_SUBSET as u64,
        });
    }
    independence_number(&induced(g, s.as_slice()), usize::MAX, MIS_NODE_BUDGET)
}

/// True iff some vertex has at least `leaves` pairwise non-adjacent
/// neighbors, i.e. the graph contains an induced `K_{1,leaves}`.
pub fn has_induced_star(g: &Graph, leaves: usize) -> bool {
    (0..g.n()).any(|v| {
        let nb = g.neighbors(v);
        nb.len() >= leaves
            && independence_number(&induced(g, nb), leaves, u64::MAX).expect("unbounded search")
                >= leaves
    })
}

/// True iff the graph contains an induced `K_{2,3}`: two non-adjacent
/// vertices sharing three pairwise non-adjacent common neighbors.
pub fn has_induced_k23(g: &Graph) -> bool {
    for a in 0..g.n() {
        let mut common = Vec::new();
        for b in a + 1..g.n() {
            if g.is_adjacent(a, b) {
                continue;
            }
            common.clear();
            common.extend(
                g.neighbors(a)
                    .iter()
                    .copied()
                    .filter(|&x| g.is_adjacent(b, x)),
            );
            if common.len() < 3 {
                continue;
            }
            for (i, &x) in common.iter().enumerate() {
                for (j, &y) in common.iter().enumerate().skip(i + 1) {
                    if g.is_adjacent(x, y) {
                        continue;
                    }
                    if common[j + 1..]
                        .iter()
                        .any(|&z| !g.is_adjacent(x, z) && !g.is_adjacent(y, z))
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}
