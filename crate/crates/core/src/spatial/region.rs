use std::f64::consts::PI;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::model::Point;

/// Coordinate tolerance, in units of the radius.
const EPS: f64 = 1e-9;
/// Angular slack around arc endpoints within which neighbouring arcs are also
/// checked exactly.
const ANGLE_SLACK: f64 = 1e-7;
/// Below this distance from the interior reference point the angular lookup is
/// meaningless and queries fall back to checking every center.
const NEAR_ORIGIN: f64 = 1e-6;

/// Boundary piece of a [`Region`]: the part of the circle around
/// `centers()[center]` seen from the region's interior reference point under
/// polar angles `start..=end` (radians in `[-pi, pi]`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Arc {
    pub center: usize,
    pub start: f64,
    pub end: f64,
}

#[derive(Debug, Clone)]
enum Shape {
    Empty,
    /// Intersection is a single point or thinner than the tolerance.
    Degenerate,
    Arcs {
        origin: (f64, f64),
        arcs: Vec<Arc>,
    },
}

/// Common intersection of equal-radius disks around integer centers.
///
/// Membership queries locate the boundary arc in the query's direction by
/// binary search over arc angles, then confirm with exact integer distance
/// checks against that arc's center (and its neighbours near an endpoint).
#[derive(Debug, Clone)]
pub struct Region {
    centers: Vec<Point>,
    radius: i64,
    reference: Point,
    shape: Shape,
}

impl Region {
    pub fn centers(&self) -> &[Point] {
        &self.centers
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    pub fn is_empty(&self) -> bool {
        matches!(self.shape, Shape::Empty)
    }

    /// True when the intersection is too thin to carry an arc structure, for
    /// example two disks touching in a single point.
    pub fn is_degenerate(&self) -> bool {
        matches!(self.shape, Shape::Degenerate)
    }

    /// Boundary arcs ordered by angle; empty for empty or degenerate regions.
    pub fn arcs(&self) -> &[Arc] {
        match &self.shape {
            Shape::Arcs { arcs, .. } => arcs,
            _ => &[],
        }
    }

    pub fn contains(&self, p: Point) -> bool {
        match &self.shape {
            Shape::Empty => false,
            Shape::Degenerate => self.within_all(p),
            Shape::Arcs { origin, arcs } => {
                let (qx, qy) = self.normalize(p);
                let (dx, dy) = (qx - origin.0, qy - origin.1);
                if dx.hypot(dy) < NEAR_ORIGIN {
                    return self.within_all(p);
                }
                let theta = dy.atan2(dx);
                let r2 = (self.radius as i128).pow(2);
                let inside = |arc: &Arc| self.centers[arc.center].dist2(p) <= r2;

                let k = arcs.partition_point(|a| a.end < theta).min(arcs.len() - 1);
                if !inside(&arcs[k]) {
                    return false;
                }
                // neighbours whose span reaches within the slack of theta
                let len = arcs.len();
                let mut reach = theta - arcs[k].start;
                let mut i = k;
                for _ in 1..len {
                    if reach > ANGLE_SLACK {
                        break;
                    }
                    i = (i + len - 1) % len;
                    if !inside(&arcs[i]) {
                        return false;
                    }
                    reach += arcs[i].end - arcs[i].start;
                }
                let mut reach = arcs[k].end - theta;
                let mut i = k;
                for _ in 1..len {
                    if reach > ANGLE_SLACK {
                        break;
                    }
                    i = (i + 1) % len;
                    if !inside(&arcs[i]) {
                        return false;
                    }
                    reach += arcs[i].end - arcs[i].start;
                }
                true
            }
        }
    }

    fn within_all(&self, p: Point) -> bool {
        let r2 = (self.radius as i128).pow(2);
        self.centers.iter().all(|c| c.dist2(p) <= r2)
    }

    fn normalize(&self, p: Point) -> (f64, f64) {
        let r = self.radius as f64;
        (
            (p.x as i128 - self.reference.x as i128) as f64 / r,
            (p.y as i128 - self.reference.y as i128) as f64 / r,
        )
    }
}

/// Builds the intersection of the disks of radius `radius` around `centers`.
///
/// An interior reference point is the center of the minimum enclosing circle
/// of the centers (the intersection is non-empty iff that circle's radius is
/// at most `radius`). The boundary, seen from there in polar coordinates, is
/// the lower envelope of one radial function per disk; it is computed by
/// divide and conquer in `O(k log k)`.
///
/// # Panics
///
/// Panics if `centers` is empty or `radius` is not positive.
pub fn disks_common_intersection(centers: &[Point], radius: i64) -> Region {
    assert!(!centers.is_empty(), "at least one disk is required");
    assert!(radius > 0, "radius must be positive");
    let reference = centers[0];
    let mut region = Region {
        centers: centers.to_vec(),
        radius,
        reference,
        shape: Shape::Degenerate,
    };

    // distinct centers only; duplicates give identical radial functions
    let mut distinct: Vec<usize> = (0..centers.len()).collect();
    distinct.sort_by_key(|&i| (centers[i], i));
    distinct.dedup_by_key(|i| centers[*i]);
    let coords: Vec<(f64, f64)> = distinct
        .iter()
        .map(|&i| region.normalize(centers[i]))
        .collect();

    let (mx, my, mr) = min_enclosing_circle(&coords);
    region.shape = if mr > 1.0 + EPS {
        Shape::Empty
    } else if mr >= 1.0 - EPS {
        Shape::Degenerate
    } else {
        let origin = (mx, my);
        let rel: Vec<(f64, f64)> = coords.iter().map(|&(x, y)| (x - mx, y - my)).collect();
        let ids: Vec<usize> = (0..rel.len()).collect();
        let mut arcs = envelope(&rel, &ids);
        for a in &mut arcs {
            a.center = distinct[a.center];
        }
        Shape::Arcs { origin, arcs }
    };
    region
}

/// Membership test; see [`Region::contains`].
pub fn region_contains(region: &Region, p: Point) -> bool {
    region.contains(p)
}

/// Distance from the origin to the unit circle around `c` along direction
/// `theta`. Requires `|c| < 1`.
fn radial(c: (f64, f64), theta: f64) -> f64 {
    let (s, co) = theta.sin_cos();
    let b = co * c.0 + s * c.1;
    let disc = b * b - (c.0 * c.0 + c.1 * c.1 - 1.0);
    b + disc.max(0.0).sqrt()
}

fn envelope(rel: &[(f64, f64)], ids: &[usize]) -> Vec<Arc> {
    if ids.len() == 1 {
        return vec![Arc {
            center: ids[0],
            start: -PI,
            end: PI,
        }];
    }
    let (left, right) = ids.split_at(ids.len() / 2);
    merge(rel, &envelope(rel, left), &envelope(rel, right))
}

/// Angles (seen from the origin) of the two intersection points of the unit
/// circles around `a` and `b`.
fn crossings(a: (f64, f64), b: (f64, f64)) -> [f64; 2] {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let d = dx.hypot(dy);
    let h = (1.0 - d * d / 4.0).max(0.0).sqrt();
    let (mx, my) = ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0);
    let (ux, uy) = (-dy / d, dx / d);
    [
        (my + h * uy).atan2(mx + h * ux),
        (my - h * uy).atan2(mx - h * ux),
    ]
}

fn merge(rel: &[(f64, f64)], l: &[Arc], r: &[Arc]) -> Vec<Arc> {
    let mut out: Vec<Arc> = Vec::with_capacity(l.len() + r.len());
    let mut push = |center: usize, start: f64, end: f64| {
        if end <= start {
            return;
        }
        match out.last_mut() {
            Some(last) if last.center == center => last.end = end,
            _ => out.push(Arc { center, start, end }),
        }
    };
    let (mut i, mut j) = (0, 0);
    let mut lo = -PI;
    while i < l.len() && j < r.len() {
        let hi = l[i].end.min(r[j].end);
        let (a, b) = (l[i].center, r[j].center);
        let mut cuts = vec![lo];
        let mut xs = crossings(rel[a], rel[b]);
        xs.sort_by(f64::total_cmp);
        cuts.extend(xs.into_iter().filter(|&x| x > lo && x < hi));
        cuts.push(hi);
        for w in cuts.windows(2) {
            let mid = 0.5 * (w[0] + w[1]);
            let winner = if radial(rel[a], mid) <= radial(rel[b], mid) {
                a
            } else {
                b
            };
            push(winner, w[0], w[1]);
        }
        lo = hi;
        if l[i].end <= hi {
            i += 1;
        }
        if r[j].end <= hi {
            j += 1;
        }
    }
    if let Some(last) = out.last_mut() {
        last.end = PI;
    }
    out
}

/// Minimum enclosing circle by the randomised incremental method, returned as
/// `(x, y, radius)`.
fn min_enclosing_circle(points: &[(f64, f64)]) -> (f64, f64, f64) {
    let mut pts = points.to_vec();
    pts.shuffle(&mut ChaCha8Rng::seed_from_u64(0x5eed));
    let outside = |c: (f64, f64, f64), p: (f64, f64)| {
        (p.0 - c.0).hypot(p.1 - c.1) > c.2 * (1.0 + 1e-12) + 1e-15
    };
    let mut c = (pts[0].0, pts[0].1, 0.0);
    for i in 1..pts.len() {
        if !outside(c, pts[i]) {
            continue;
        }
        c = (pts[i].0, pts[i].1, 0.0);
        for j in 0..i {
            if !outside(c, pts[j]) {
                continue;
            }
            c = diametral(pts[i], pts[j]);
            for k in 0..j {
                if outside(c, pts[k]) {
                    c = circumcircle(pts[i], pts[j], pts[k]);
                }
            }
        }
    }
    c
}

fn diametral(a: (f64, f64), b: (f64, f64)) -> (f64, f64, f64) {
    (
        (a.0 + b.0) / 2.0,
        (a.1 + b.1) / 2.0,
        (a.0 - b.0).hypot(a.1 - b.1) / 2.0,
    )
}

fn circumcircle(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> (f64, f64, f64) {
    let (bx, by) = (b.0 - a.0, b.1 - a.1);
    let (cx, cy) = (c.0 - a.0, c.1 - a.1);
    let d = 2.0 * (bx * cy - by * cx);
    if d.abs() < 1e-18 {
        // collinear: the farthest pair spans the circle
        return [diametral(a, b), diametral(a, c), diametral(b, c)]
            .into_iter()
            .max_by(|p, q| p.2.total_cmp(&q.2))
            .unwrap();
    }
    let b2 = bx * bx + by * by;
    let c2 = cx * cx + cy * cy;
    let ux = (cy * b2 - by * c2) / d;
    let uy = (bx * c2 - cx * b2) / d;
    (a.0 + ux, a.1 + uy, ux.hypot(uy))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(centers: &[Point], r: i64, p: Point) -> bool {
        centers.iter().all(|c| c.dist2(p) <= (r as i128).pow(2))
    }

    #[test]
    fn single_disk() {
        let c = Point::new(5, -3);
        let region = disks_common_intersection(&[c], 10);
        assert!(!region.is_empty());
        assert!(region.contains(c));
        assert!(region.contains(Point::new(15, -3)));
        assert!(region.contains(Point::new(11, 5)));
        assert!(!region.contains(Point::new(16, -3)));
        assert_eq!(region.arcs().len(), 1);
    }

    #[test]
    fn tangent_pair_is_a_single_point() {
        let r = 1_000;
        let a = Point::new(0, 0);
        let b = Point::new(2 * r, 0);
        let region = disks_common_intersection(&[a, b], r);
        assert!(!region.is_empty());
        assert!(region.contains(Point::new(r, 0)));
        assert!(!region.contains(Point::new(r, 1)));
        assert!(!region.contains(Point::new(r - 1, 0)));
        assert!(!region.contains(a));
    }

    #[test]
    fn equilateral_triangle_contains_centroid() {
        // side = radius; centroid at radius / sqrt(3) from every vertex
        let r = 1_000_000;
        let h = 866_025; // r * sqrt(3) / 2, rounded
        let pts = [Point::new(0, 0), Point::new(r, 0), Point::new(r / 2, h)];
        let region = disks_common_intersection(&pts, r);
        assert!(region.contains(Point::new(r / 2, h / 3)));
        // one arc may be split at the angle seam
        let mut owners: Vec<usize> = region.arcs().iter().map(|a| a.center).collect();
        owners.sort_unstable();
        owners.dedup();
        assert_eq!(owners, vec![0, 1, 2]);
    }

    #[test]
    fn far_apart_centers_are_empty() {
        let region = disks_common_intersection(&[Point::new(0, 0), Point::new(2001, 0)], 1000);
        assert!(region.is_empty());
        assert!(!region.contains(Point::new(1000, 0)));
    }

    #[test]
    fn duplicate_centers() {
        let p = Point::new(3, 3);
        let region = disks_common_intersection(&[p, p, Point::new(4, 3)], 2);
        assert!(region.contains(Point::new(5, 3)));
        assert!(!region.contains(Point::new(6, 3)));
    }

    #[test]
    fn arcs_cover_the_circle_in_order() {
        let pts: Vec<Point> = (0..12)
            .map(|i| {
                let a = i as f64 * 0.5;
                Point::new((300.0 * a.cos()) as i64, (300.0 * a.sin()) as i64)
            })
            .collect();
        let region = disks_common_intersection(&pts, 1_000);
        let arcs = region.arcs();
        assert!(!arcs.is_empty());
        assert_eq!(arcs[0].start, -PI);
        assert_eq!(arcs.last().unwrap().end, PI);
        for w in arcs.windows(2) {
            assert_eq!(w[0].end, w[1].start);
            assert!(w[0].start < w[0].end);
        }
    }

    #[test]
    fn agrees_with_brute_force_including_ties() {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        // lattice vectors of length exactly 1000
        let ring = [
            (1000, 0),
            (0, 1000),
            (-1000, 0),
            (0, -1000),
            (600, 800),
            (800, 600),
            (-600, 800),
            (-800, 600),
            (600, -800),
            (800, -600),
            (-600, -800),
            (-800, -600),
            (280, 960),
            (960, 280),
            (-280, 960),
            (-960, -280),
        ];
        for _ in 0..200 {
            let k = rng.gen_range(1..=20);
            let spread = rng.gen_range(10..1200);
            let centers: Vec<Point> = (0..k)
                .map(|_| {
                    Point::new(
                        rng.gen_range(-spread..=spread),
                        rng.gen_range(-spread..=spread),
                    )
                })
                .collect();
            let region = disks_common_intersection(&centers, 1000);
            for _ in 0..200 {
                let q = if rng.gen_bool(0.3) {
                    let c = centers[rng.gen_range(0..k)];
                    let (dx, dy) = ring[rng.gen_range(0..ring.len())];
                    Point::new(c.x + dx, c.y + dy)
                } else {
                    Point::new(rng.gen_range(-1500..=1500), rng.gen_range(-1500..=1500))
                };
                assert_eq!(
                    region.contains(q),
                    brute(&centers, 1000, q),
                    "{centers:?} {q:?}"
                );
            }
        }
    }
}
