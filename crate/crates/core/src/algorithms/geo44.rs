use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::model::{Algorithm, PointInstance, Solution, VertexSet};
use crate::spatial::{
    build_adjacency, build_grid, disks_common_intersection, geometric_mis, GridIndex,
};

use super::corona::group_coronas;
use super::{verify_independent_dominating, Corona, SolveOptions};

/// Cell offsets whose squares lie within Euclidean distance 4 (in cell units)
/// of the origin cell.
fn blocked_offsets() -> Vec<(i64, i64)> {
    let gap = |d: i64| (d.abs() - 1).max(0);
    let mut out = Vec::new();
    for dx in -5..=5 {
        for dy in -5..=5 {
            if gap(dx).pow(2) + gap(dy).pow(2) <= 16 {
                out.push((dx, dy));
            }
        }
    }
    out
}

/// Geometric 44/9-approximation working directly on the points.
///
/// Neighborhoods come from grid-vicinity scans; a corona is reducible when
/// some point of `S = (sole-dominated points) + petals` lies in the common
/// intersection of the threshold-radius disks around `S`. Reduced cores are
/// spread out by discarding candidates in cells within Euclidean distance 4
/// of an already chosen core's cell.
pub fn reduce44_geometric(inst: &PointInstance, opts: &SolveOptions) -> Result<Solution> {
    let n = inst.len();
    let grid = build_grid(inst);
    let start = geometric_mis(inst, &grid, &opts.order)?;
    let mut history = vec![start.len()];
    let offsets = blocked_offsets();
    let cap = n + 1;
    let mut iterations = 0;

    // everything below is indexed by grid storage position
    let mut in_d: Vec<bool> = grid.order().iter().map(|&v| start.contains(v)).collect();
    let mut passes = Pass::new(&grid);

    loop {
        iterations += 1;
        if iterations > cap {
            return Err(Error::IterationCap {
                algorithm: "geo44",
                cap,
            });
        }
        passes.collect_dominators(inst, &grid, &in_d)?;
        // grouped in storage order, cores mapped back to ids afterwards;
        // more than five dominators were already rejected with the right id
        let mut coronas = group_coronas(n, |q| in_d[q], |q, out| out.extend(passes.dominators(q)))?;
        for corona in &mut coronas {
            for core in &mut corona.cores {
                *core = grid.order()[*core];
            }
            corona.cores.sort_unstable();
        }

        let mut reducible: Vec<(usize, Corona)> = coronas
            .into_iter()
            .filter_map(|corona| {
                geometric_core(inst, &grid, &in_d, &passes, &corona).map(|core| (core, corona))
            })
            .collect();
        reducible.sort_by_key(|(core, _)| *core);

        let mut blocked: HashSet<(i64, i64)> = HashSet::new();
        let mut reduced = 0;
        for (core, corona) in &reducible {
            let (cx, cy) = grid.cell_key(grid.cell_of(*core));
            if blocked.contains(&(cx, cy)) {
                continue;
            }
            blocked.extend(offsets.iter().map(|&(dx, dy)| (cx + dx, cy + dy)));
            for &p in &corona.petals {
                in_d[grid.position(p)] = false;
            }
            in_d[grid.position(*core)] = true;
            reduced += 1;
        }
        if reduced == 0 {
            break;
        }
        history.push(history.last().unwrap() - 4 * reduced);
        if opts.check_iterations {
            let d = VertexSet::from_mask((0..n).map(|v| in_d[grid.position(v)]).collect());
            verify_independent_dominating(&build_adjacency(inst), &d, "geo44")?;
        }
    }
    let set = VertexSet::from_mask((0..n).map(|v| in_d[grid.position(v)]).collect());
    if opts.check_iterations {
        verify_independent_dominating(&build_adjacency(inst), &set, "geo44")?;
    }
    Ok(Solution {
        set,
        algorithm: Algorithm::Geo44,
        iterations,
        order: opts.order.clone(),
        history,
    })
}

/// Per-pass scratch: solution members per cell and each point's solution
/// neighbors, all by storage position.
struct Pass {
    solution: Vec<usize>,
    /// `solution[first[c]..first[c + 1]]` lie in cell `c`.
    first: Vec<usize>,
    dominators: Vec<[u32; 5]>,
    count: Vec<u8>,
}

impl Pass {
    fn new(grid: &GridIndex) -> Self {
        let n = grid.order().len();
        Self {
            solution: Vec::new(),
            first: vec![0; grid.num_cells() + 1],
            dominators: vec![[0; 5]; n],
            count: vec![0; n],
        }
    }

    /// Ids of the solution neighbors of the point at `pos`, ascending.
    fn dominators(&self, pos: usize) -> impl Iterator<Item = usize> + '_ {
        self.dominators[pos][..self.count[pos] as usize]
            .iter()
            .map(|&v| v as usize)
    }

    fn collect_dominators(
        &mut self,
        inst: &PointInstance,
        grid: &GridIndex,
        in_d: &[bool],
    ) -> Result<()> {
        let starts = grid.cell_starts();
        self.solution.clear();
        for cell in 0..grid.num_cells() {
            self.first[cell] = self.solution.len();
            self.solution
                .extend((starts[cell]..starts[cell + 1]).filter(|&q| in_d[q]));
        }
        self.first[grid.num_cells()] = self.solution.len();

        let coords = grid.coords();
        let t2 = inst.threshold2();
        for cell in 0..grid.num_cells() {
            for pos in starts[cell]..starts[cell + 1] {
                self.count[pos] = 0;
                if in_d[pos] {
                    continue;
                }
                let p = coords[pos];
                let mut found = 0;
                for r in grid.vicinity_cells(cell) {
                    for &q in &self.solution[self.first[r.start]..self.first[r.end]] {
                        if coords[q].dist2(p) <= t2 {
                            if found < 5 {
                                self.dominators[pos][found] = grid.order()[q] as u32;
                            }
                            found += 1;
                        }
                    }
                }
                if found > 5 {
                    return Err(Error::NotUnitDisk {
                        vertex: grid.order()[pos],
                        dominators: found,
                    });
                }
                self.dominators[pos][..found].sort_unstable();
                self.count[pos] = found as u8;
            }
        }
        Ok(())
    }
}

/// Smallest point of `S = sole-dominated + petals` inside the intersection of
/// the disks around `S`, confirmed with exact distances to all of `S`.
fn geometric_core(
    inst: &PointInstance,
    grid: &GridIndex,
    in_d: &[bool],
    pass: &Pass,
    corona: &Corona,
) -> Option<usize> {
    let coords = grid.coords();
    let t2 = inst.threshold2();
    let mut support: Vec<usize> = Vec::new();
    for &p in &corona.petals {
        let at = grid.position(p);
        for r in grid.vicinity_positions(grid.cell_of(p)) {
            support.extend(r.filter(|&q| {
                !in_d[q]
                    && coords[q].dist2(coords[at]) <= t2
                    && pass.dominators(q).all(|x| corona.has_petal(x))
            }));
        }
    }
    let mut support: Vec<usize> = support.into_iter().map(|q| grid.order()[q]).collect();
    support.extend_from_slice(&corona.petals);
    support.sort_unstable();
    support.dedup();

    let centers: Vec<_> = support.iter().map(|&v| inst.point(v)).collect();
    let region = disks_common_intersection(&centers, inst.threshold());
    if region.is_empty() {
        return None;
    }
    support.iter().copied().find(|&v| {
        let p = inst.point(v);
        region.contains(p) && centers.iter().all(|&c| c.dist2(p) <= t2)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{OrderPolicy, Point};

    #[test]
    fn offsets_cover_distance_four() {
        let offs = blocked_offsets();
        assert!(offs.contains(&(5, 0)));
        assert!(offs.contains(&(3, 3)));
        assert!(!offs.contains(&(4, 4)));
        assert!(!offs.contains(&(5, 2)));
        assert!(offs.contains(&(5, 1)));
    }

    #[test]
    fn clique_is_one_vertex() {
        let pts = (0..5).map(|i| Point::new(i * 2, i)).collect();
        let inst = PointInstance::new(pts, 100).unwrap();
        let s = reduce44_geometric(&inst, &SolveOptions::default()).unwrap();
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn star_layout_reduces_to_center() {
        // five leaves on a circle of radius t around the center, pairwise > t
        let t = 1000;
        let mut pts = vec![Point::new(0, 0)];
        for k in 0..5 {
            let a = k as f64 * std::f64::consts::TAU / 5.0;
            pts.push(Point::new(
                (999.0 * a.cos()) as i64,
                (999.0 * a.sin()) as i64,
            ));
        }
        let inst = PointInstance::new(pts, t).unwrap();
        let order = OrderPolicy::Explicit(vec![1, 2, 3, 4, 5, 0]);
        let s = reduce44_geometric(&inst, &SolveOptions::with_order(order)).unwrap();
        assert_eq!(s.set.as_slice(), &[0]);
        assert_eq!(s.history, vec![5, 1]);
    }
}
