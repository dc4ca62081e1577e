use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::model::{Point, PointInstance};

/// Disk diameter shared by both built-in instances.
pub const PAPER_THRESHOLD: i64 = 1_000_001;

/// `r*`, cores `c*_1..c*_4`, witnesses `w_1..w_4`.
const FIG4_NAMED: [(i64, i64); 9] = [
    (0, 0),
    (-2492384, 879081),
    (-1310377, 2686162),
    (1310377, 2686162),
    (2492384, 879081),
    (-492423, 870355),
    (-484809, 874619),
    (484809, 874619),
    (492423, 870355),
];

/// Each entry stands for `(x, y)` and `(-x, y)`.
const FIG4_MIRRORED: [(i64, i64); 12] = [
    (776025, 3531423),
    (1492384, 879081),
    (999986, 5235),
    (2309705, 2722805),
    (3491646, 917468),
    (3023782, 31960),
    (1776763, 3570742),
    (1840296, 1838114),
    (2022913, -3866),
    (503019, -864274),
    (2957226, 1764474),
    (810377, 1820137),
];

const FIG6_NAMED: [(i64, i64); 2] = [(0, 0), (0, 4500000)];

const FIG6_MIRRORED: [(i64, i64); 24] = [
    (336577, 3647829),
    (3372414, 3440722),
    (3657983, 1789254),
    (469471, 882947),
    (2857376, 5297889),
    (3887452, 5297889),
    (1043683, 2940723),
    (2506389, 2940723),
    (892089, 1789254),
    (2657983, 1789254),
    (1775036, 1258725),
    (529919, 5348048),
    (997564, 4430244),
    (4605648, 790625),
    (5515150, 1274216),
    (5515150, 2304292),
    (4605648, 2787883),
    (1775036, 2258725),
    (2373785, 4388387),
    (4657983, 1789254),
    (3372414, 4440722),
    (515038, -857167),
    (999780, 20942),
    (4371043, 4388387),
];

/// The two built-in lower-bound instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PaperInstance {
    /// 33 disks where four cores share one reliever; drives the corona
    /// reduction to ratio 4.8.
    Fig4,
    /// 50 disks driving the weak reduction to ratio 4.25.
    Fig6,
}

impl PaperInstance {
    pub const ALL: [PaperInstance; 2] = [PaperInstance::Fig4, PaperInstance::Fig6];

    pub fn name(self) -> &'static str {
        match self {
            PaperInstance::Fig4 => "fig4",
            PaperInstance::Fig6 => "fig6",
        }
    }
}

impl fmt::Display for PaperInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PaperInstance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        PaperInstance::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown built-in instance `{s}`")))
    }
}

fn expand(named: &[(i64, i64)], mirrored: &[(i64, i64)]) -> Vec<Point> {
    let mut points: Vec<Point> = named.iter().map(|&p| p.into()).collect();
    for &(x, y) in mirrored {
        points.push(Point::new(x, y));
        points.push(Point::new(-x, y));
    }
    points
}

/// Built-in instance with the mirrored table rows expanded as `(x, y)` then
/// `(-x, y)`, after the individually listed points.
///
/// For `fig4` the ids are: 0 = `r*`, 1..=4 = cores `c*_1..c*_4`, 5..=8 =
/// witnesses `w_1..w_4`, then the 24 expanded points.
pub fn paper_instance(which: PaperInstance) -> PointInstance {
    let points = match which {
        PaperInstance::Fig4 => expand(&FIG4_NAMED, &FIG4_MIRRORED),
        PaperInstance::Fig6 => expand(&FIG6_NAMED, &FIG6_MIRRORED),
    };
    PointInstance::new(points, PAPER_THRESHOLD).expect("built-in coordinates are in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_first_point() {
        let fig4 = paper_instance(PaperInstance::Fig4);
        assert_eq!(fig4.len(), 33);
        assert_eq!(fig4.point(0), Point::new(0, 0));
        assert_eq!(fig4.threshold(), 1_000_001);
        let fig6 = paper_instance(PaperInstance::Fig6);
        assert_eq!(fig6.len(), 50);
        assert_eq!(fig6.point(1), Point::new(0, 4_500_000));
    }

    #[test]
    fn names_round_trip() {
        for p in PaperInstance::ALL {
            assert_eq!(p.name().parse::<PaperInstance>().unwrap(), p);
        }
        assert!("fig5".parse::<PaperInstance>().is_err());
    }
}
