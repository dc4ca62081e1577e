use std::ops::Range;

use crate::model::{Graph, Point, PointInstance};

/// Points bucketed into square cells whose side equals the adjacency
/// threshold. A point's neighbors all lie in the 3x3 closed vicinity of its
/// cell.
///
/// Cells are numbered in ascending key order and points are stored sorted by
/// `(cell key, id)` together with their coordinates, so a cell's vicinity is
/// at most three contiguous runs of positions. Nothing depends on hashing.
#[derive(Debug, Clone)]
pub struct GridIndex {
    cell_size: i64,
    keys: Vec<(i64, i64)>,
    /// `start[c]..start[c + 1]` are the positions of cell `c`.
    start: Vec<usize>,
    order: Vec<usize>,
    /// `(position, cell)` per point id; 32-bit to keep the tables that
    /// random-order scans touch small.
    slot: Vec<(u32, u32)>,
    coords: Vec<Point>,
    /// Per cell, the cell ranges of the three rows of its vicinity.
    vicinity: Vec<[(u32, u32); 3]>,
    /// The same rows as position ranges.
    vicinity_pos: Vec<[(u32, u32); 3]>,
}

impl GridIndex {
    pub fn cell_size(&self) -> i64 {
        self.cell_size
    }

    pub fn key_of(&self, p: Point) -> (i64, i64) {
        (
            p.x.div_euclid(self.cell_size),
            p.y.div_euclid(self.cell_size),
        )
    }

    pub fn num_cells(&self) -> usize {
        self.keys.len()
    }

    pub fn cell_index(&self, key: (i64, i64)) -> Option<usize> {
        self.keys.binary_search(&key).ok()
    }

    pub fn cell_key(&self, cell: usize) -> (i64, i64) {
        self.keys[cell]
    }

    /// Cell containing point `v`.
    #[inline]
    pub fn cell_of(&self, v: usize) -> usize {
        self.slot[v].1 as usize
    }

    /// Ids of the points in `cell`, ascending.
    #[inline]
    pub fn cell_points(&self, cell: usize) -> &[usize] {
        &self.order[self.start[cell]..self.start[cell + 1]]
    }

    /// Storage position of point `v`.
    #[inline]
    pub fn position(&self, v: usize) -> usize {
        self.slot[v].0 as usize
    }

    /// `(position(v), cell_of(v))` in one lookup.
    #[inline]
    pub fn slot(&self, v: usize) -> (usize, usize) {
        let (pos, cell) = self.slot[v];
        (pos as usize, cell as usize)
    }

    /// Point ids by storage position.
    #[inline]
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Coordinates by storage position.
    #[inline]
    pub fn coords(&self) -> &[Point] {
        &self.coords
    }

    /// First position of every cell plus the total count, so that cell `c`
    /// spans `cell_starts()[c]..cell_starts()[c + 1]`.
    #[inline]
    pub fn cell_starts(&self) -> &[usize] {
        &self.start
    }

    /// Cell ranges `lo..hi` covering the non-empty cells of the closed 3x3
    /// vicinity of `cell`, one per row; some may be empty.
    #[inline]
    pub fn vicinity_cells(&self, cell: usize) -> impl Iterator<Item = Range<usize>> + '_ {
        self.vicinity[cell]
            .iter()
            .map(|&(lo, hi)| lo as usize..hi as usize)
    }

    /// Row `row` (0..3) of [`Self::vicinity_cells`] and of
    /// [`Self::vicinity_positions`], as `(cells, positions)`.
    #[inline]
    pub fn vicinity_row(&self, cell: usize, row: usize) -> (Range<usize>, Range<usize>) {
        let (clo, chi) = self.vicinity[cell][row];
        let (plo, phi) = self.vicinity_pos[cell][row];
        (clo as usize..chi as usize, plo as usize..phi as usize)
    }

    /// Position ranges covering the closed vicinity of `cell`.
    #[inline]
    pub fn vicinity_positions(&self, cell: usize) -> impl Iterator<Item = Range<usize>> + '_ {
        self.vicinity_pos[cell]
            .iter()
            .map(|&(lo, hi)| lo as usize..hi as usize)
    }

    /// Every point in the closed vicinity of `v`'s cell, `v` included.
    pub fn near(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.vicinity_positions(self.cell_of(v))
            .flat_map(move |r| self.order[r].iter().copied())
    }
}

/// Builds the grid in `O(n log n)`.
///
/// # Panics
///
/// Panics if the instance has more than `u32::MAX` points.
pub fn build_grid(inst: &PointInstance) -> GridIndex {
    assert!(
        u32::try_from(inst.len()).is_ok(),
        "at most u32::MAX points are supported"
    );
    let cell_size = inst.threshold();
    let key_of = |p: Point| (p.x.div_euclid(cell_size), p.y.div_euclid(cell_size));
    let point_keys: Vec<(i64, i64)> = inst.points().iter().map(|&p| key_of(p)).collect();
    let sorted = sort_by_cell(&point_keys);

    let n = inst.len();
    let mut keys = Vec::new();
    let mut start = Vec::new();
    let mut order = Vec::with_capacity(n);
    let mut slot = vec![(0u32, 0u32); n];
    let mut coords = Vec::with_capacity(n);
    for (pos, &v) in sorted.iter().enumerate() {
        let key = point_keys[v];
        if keys.last() != Some(&key) {
            keys.push(key);
            start.push(pos);
        }
        order.push(v);
        slot[v] = (pos as u32, (keys.len() - 1) as u32);
        coords.push(inst.point(v));
    }
    start.push(n);

    // keys are sorted, so for each row offset both range ends only move
    // forward as the cells are swept in order
    let mut vicinity = vec![[(0u32, 0u32); 3]; keys.len()];
    for (row, dx) in [-1i64, 0, 1].into_iter().enumerate() {
        let (mut lo, mut hi) = (0, 0);
        for (c, &(cx, cy)) in keys.iter().enumerate() {
            while lo < keys.len() && keys[lo] < (cx + dx, cy - 1) {
                lo += 1;
            }
            hi = hi.max(lo);
            while hi < keys.len() && keys[hi] <= (cx + dx, cy + 1) {
                hi += 1;
            }
            vicinity[c][row] = (lo as u32, hi as u32);
        }
    }
    let vicinity_pos = vicinity
        .iter()
        .map(|rows| rows.map(|(lo, hi)| (start[lo as usize] as u32, start[hi as usize] as u32)))
        .collect();
    GridIndex {
        cell_size,
        keys,
        start,
        order,
        slot,
        coords,
        vicinity,
        vicinity_pos,
    }
}

/// Point ids sorted by `(cell key, id)`. When the cell extent and the id
/// range fit in 64 bits together, the triples are packed into `u64`s, which
/// sort several times faster than the tuples.
fn sort_by_cell(keys: &[(i64, i64)]) -> Vec<usize> {
    let bits = |span: u64| u64::BITS - span.leading_zeros();
    let (min_x, max_x) = keys.iter().fold((i64::MAX, i64::MIN), |(lo, hi), k| {
        (lo.min(k.0), hi.max(k.0))
    });
    let (min_y, max_y) = keys.iter().fold((i64::MAX, i64::MIN), |(lo, hi), k| {
        (lo.min(k.1), hi.max(k.1))
    });
    if keys.is_empty() {
        return Vec::new();
    }
    let id_bits = bits(keys.len() as u64 - 1);
    let y_bits = bits(max_y.abs_diff(min_y));
    let x_bits = bits(max_x.abs_diff(min_x));
    if x_bits + y_bits + id_bits <= 64 {
        let mut packed: Vec<u64> = keys
            .iter()
            .enumerate()
            .map(|(v, &(x, y))| {
                // a zero-width field contributes nothing; avoid shifting by 64
                let hi = x.abs_diff(min_x).checked_shl(y_bits + id_bits).unwrap_or(0);
                let mid = y.abs_diff(min_y).checked_shl(id_bits).unwrap_or(0);
                hi | mid | v as u64
            })
            .collect();
        packed.sort_unstable();
        let mask = 1u64.checked_shl(id_bits).map_or(u64::MAX, |b| b - 1);
        packed.into_iter().map(|k| (k & mask) as usize).collect()
    } else {
        let mut ids: Vec<usize> = (0..keys.len()).collect();
        ids.sort_unstable_by_key(|&v| (keys[v], v));
        ids
    }
}

/// Unit disk graph of the instance, computed by scanning grid vicinities with
/// exact integer distances.
pub fn build_adjacency(inst: &PointInstance) -> Graph {
    let grid = build_grid(inst);
    let t2 = inst.threshold2();
    let coords = grid.coords();
    let mut lists = vec![Vec::new(); inst.len()];
    for cell in 0..grid.num_cells() {
        for pos in grid.cell_starts()[cell]..grid.cell_starts()[cell + 1] {
            let p = coords[pos];
            let mut list = Vec::new();
            for r in grid.vicinity_positions(cell) {
                for q in r {
                    if q != pos && coords[q].dist2(p) <= t2 {
                        list.push(grid.order()[q]);
                    }
                }
            }
            list.sort_unstable();
            lists[grid.order()[pos]] = list;
        }
    }
    Graph::from_lists_unchecked(lists)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(points: &[(i64, i64)], t: i64) -> PointInstance {
        PointInstance::new(points.iter().map(|&p| p.into()).collect(), t).unwrap()
    }

    #[test]
    fn cells() {
        let g = build_grid(&inst(&[(0, 0)], 10));
        assert_eq!(g.num_cells(), 1);
        assert_eq!(g.cell_points(0), &[0]);

        let g = build_grid(&inst(&[(1, 1), (9, 3)], 10));
        assert_eq!(g.num_cells(), 1);
        assert_eq!(g.cell_points(0), &[0, 1]);

        let g = build_grid(&inst(&[(0, 0), (30, 0)], 10));
        assert_eq!(g.num_cells(), 2);
        assert_eq!(g.near(0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(g.near(1).collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn wide_extents_fall_back_to_tuple_sort() {
        let far = 1i64 << 60;
        let pts = [(far, 0), (-far, 5), (far, -far), (0, 0), (far, 0)];
        let g = build_grid(&inst(&pts, 1));
        let keys: Vec<_> = (0..g.num_cells()).map(|c| g.cell_key(c)).collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted);
        assert_eq!(g.cell_points(g.cell_of(0)), &[0, 4]);
        assert_eq!(sort_by_cell(&[(3, 1), (1, 2), (3, 0)]), vec![1, 2, 0]);
    }

    #[test]
    fn negative_coordinates_floor() {
        let g = build_grid(&inst(&[(-1, -1), (0, 0)], 10));
        assert_eq!(g.cell_key(g.cell_of(0)), (-1, -1));
        assert_eq!(g.cell_key(g.cell_of(1)), (0, 0));
        assert_eq!(g.near(0).count(), 2);
        assert_eq!(g.cell_index((0, 0)), Some(1));
        assert_eq!(g.cell_index((5, 5)), None);
    }

    #[test]
    fn adjacency_is_closed_at_threshold() {
        let g = build_adjacency(&inst(&[(0, 0), (6, 8), (20, 0), (20, 10)], 10));
        assert!(g.is_adjacent(0, 1));
        assert!(g.is_adjacent(2, 3));
        assert!(!g.is_adjacent(1, 2));
        // 10^2 + 1 is just beyond the threshold
        let g = build_adjacency(&inst(&[(0, 0), (10, 1)], 10));
        assert_eq!(g.m(), 0);
    }
}
