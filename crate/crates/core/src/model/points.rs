use crate::error::{Error, Result};

/// Largest accepted coordinate magnitude. Differences then stay below `2^62`,
/// so squared distances fit comfortably in `i128`.
pub const MAX_COORDINATE: i64 = 1 << 61;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    /// Exact squared Euclidean distance.
    #[inline]
    pub fn dist2(self, other: Point) -> i128 {
        let dx = self.x as i128 - other.x as i128;
        let dy = self.y as i128 - other.y as i128;
        dx * dx + dy * dy
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Self { x, y }
    }
}

/// Integer point set plus an integer adjacency threshold: vertices `u` and
/// `v` are adjacent iff `|p_u - p_v|^2 <= threshold^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointInstance {
    points: Vec<Point>,
    threshold: i64,
}

impl PointInstance {
    pub fn new(points: Vec<Point>, threshold: i64) -> Result<Self> {
        if threshold < 1 {
            return Err(Error::InvalidInput(format!(
                "threshold must be positive, got {threshold}"
            )));
        }
        if threshold > MAX_COORDINATE {
            return Err(Error::Overflow(threshold as i128));
        }
        for p in &points {
            for c in [p.x, p.y] {
                if c.unsigned_abs() > MAX_COORDINATE as u64 {
                    return Err(Error::Overflow(c as i128));
                }
            }
        }
        Ok(Self { points, threshold })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    #[inline]
    pub fn point(&self, v: usize) -> Point {
        self.points[v]
    }

    pub fn threshold(&self) -> i64 {
        self.threshold
    }

    #[inline]
    pub fn threshold2(&self) -> i128 {
        let t = self.threshold as i128;
        t * t
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.points[u].dist2(self.points[v]) <= self.threshold2()
    }
}
