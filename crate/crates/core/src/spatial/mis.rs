use crate::error::{Error, Result};
use crate::model::{OrderPolicy, PointInstance, VertexSet};

use super::GridIndex;

const UNKNOWN: u8 = 0;
const IN: u8 = 1;
const OUT: u8 = 2;

/// Suspended neighbor scan of the point at `pos`: next candidate position
/// `q` in vicinity row `row`.
struct Frame {
    pos: usize,
    cell: usize,
    row: usize,
    q: usize,
}

/// Greedy maximal independent set computed directly on the points: the
/// result equals scanning in the order policy and keeping every point not yet
/// covered.
///
/// Instead of visiting points in that (typically random) order, it uses the
/// equivalent local rule "a point is chosen iff no earlier-ranked neighbor is
/// chosen" and resolves points in grid storage order, descending into
/// undecided earlier-ranked neighbors with an explicit stack. Every neighbor
/// pair is inspected at most twice, and memory is accessed cell by cell.
pub fn geometric_mis(
    inst: &PointInstance,
    grid: &GridIndex,
    order: &OrderPolicy,
) -> Result<VertexSet> {
    let n = inst.len();
    let coords = grid.coords();
    let starts = grid.cell_starts();
    let t2 = inst.threshold2();

    let mut rank = vec![0u32; n];
    for (i, v) in order.permutation(n)?.into_iter().enumerate() {
        rank[grid.position(v)] = i as u32;
    }

    let mut status = vec![UNKNOWN; n];
    let mut stack: Vec<Frame> = Vec::new();
    let frame = |pos: usize, cell: usize| Frame {
        pos,
        cell,
        row: 0,
        q: usize::MAX,
    };
    for cell in 0..grid.num_cells() {
        for pos in starts[cell]..starts[cell + 1] {
            if status[pos] != UNKNOWN {
                continue;
            }
            stack.push(frame(pos, cell));
            while let Some(top) = stack.last_mut() {
                let (v, p, r) = (top.pos, coords[top.pos], rank[top.pos]);
                let mut descend = None;
                let mut blocked = false;
                'scan: while top.row < 3 {
                    let (_, range) = grid.vicinity_row(top.cell, top.row);
                    let from = if top.q == usize::MAX {
                        range.start
                    } else {
                        top.q
                    };
                    for q in from..range.end {
                        let s = status[q];
                        if s == OUT || rank[q] >= r || coords[q].dist2(p) > t2 {
                            continue;
                        }
                        if s == IN {
                            blocked = true;
                            break 'scan;
                        }
                        // resume at q once it is decided
                        top.q = q;
                        descend = Some(q);
                        break 'scan;
                    }
                    top.row += 1;
                    top.q = usize::MAX;
                }
                if let Some(q) = descend {
                    let (cells, _) = grid.vicinity_row(top.cell, top.row);
                    let c = cells.start + starts[cells].partition_point(|&s| s <= q) - 1;
                    stack.push(frame(q, c));
                    continue;
                }
                status[v] = if blocked { OUT } else { IN };
                stack.pop();
            }
        }
    }

    let mut chosen = vec![false; n];
    for cell in 0..grid.num_cells() {
        let members = starts[cell]..starts[cell + 1];
        // a square of side `threshold` holds at most 4 points more than
        // `threshold` apart
        if members.clone().filter(|&q| status[q] == IN).count() > 4 {
            return Err(Error::Invariant(format!(
                "cell {:?} holds more than 4 independent points",
                grid.cell_key(cell)
            )));
        }
        for q in members.filter(|&q| status[q] == IN) {
            chosen[grid.order()[q]] = true;
        }
    }
    Ok(VertexSet::from_mask(chosen))
}
