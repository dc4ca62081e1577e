use std::f64::consts::PI;

use crate::error::{Error, Result};

/// `floor(pi / sqrt(12) * 10^24)`; the true density lies strictly between this
/// over `10^24` and the next integer over `10^24`.
const DENSITY_SCALED: u128 = 906_899_682_117_108_925_297_039;
const DENSITY_SCALE: u128 = 1_000_000_000_000_000_000_000_000;

/// Largest `r` for which the scaled product below fits in 128 bits.
const MAX_PACKING_RADIUS: u64 = 8_000_000;

/// Upper bound `floor(pi (2r + 1)^2 / sqrt(12))` on the number of independent
/// vertices in the closed `r`-neighborhood of a vertex of a unit disk graph.
///
/// Evaluated with a rational enclosure of the packing density so the floor is
/// exact; fails if the enclosure straddles an integer.
pub fn packing_bound(r: u64) -> Result<u64> {
    if r == 0 || r > MAX_PACKING_RADIUS {
        return Err(Error::InvalidInput(format!(
            "packing radius must be in 1..={MAX_PACKING_RADIUS}, got {r}"
        )));
    }
    let side = (2 * r + 1) as u128;
    let area = side * side;
    let lo = area * DENSITY_SCALED / DENSITY_SCALE;
    let hi = (area * (DENSITY_SCALED + 1)).div_ceil(DENSITY_SCALE) - 1;
    if lo != hi {
        return Err(Error::Invariant(format!(
            "packing bound for r = {r} too close to an integer to floor exactly"
        )));
    }
    Ok(lo as u64)
}

/// Constants used by the approximation-factor analysis.
#[derive(Debug, Clone, PartialEq)]
pub struct LemmaConstants {
    /// Maximum packing density of congruent disks, `pi / sqrt(12)`.
    pub packing_density: f64,
    /// Area of the points within 1.5 of a unit semicircle, `3 + 17 pi / 4`.
    pub semicircle_area: f64,
    /// Area of the points within 1.5 of the hull of two opposite sixths of a
    /// unit disk, `7 sqrt(3) / 2 + 43 pi / 12`.
    pub opposite_sectors_area: f64,
    /// Disks of unit diameter that fit in the semicircle region.
    pub semicircle_disk_bound: f64,
    /// Disks of unit diameter that fit in the opposite-sectors region.
    pub opposite_sectors_disk_bound: f64,
    /// Independent vertices in the closed neighborhood of a clique.
    pub clique_neighborhood_independence: u64,
    /// Cores that may share a reliever with at most three solution neighbors.
    pub max_cores_per_low_reliever: u64,
    /// Average charge over one such reliever and its cores, `(3 + 14*5)/15`.
    pub low_reliever_average: f64,
    /// Average charge over a reliever with four solution neighbors and its at
    /// most eight cores, `(4 + 8*5)/9 = 44/9`.
    pub four_reliever_average: f64,
}

pub fn lemma_constants() -> LemmaConstants {
    let density = PI / 12f64.sqrt();
    let semicircle_area = 3.0 + 17.0 * PI / 4.0;
    let opposite_sectors_area = 7.0 * 3f64.sqrt() / 2.0 + 43.0 * PI / 12.0;
    // disks of area pi/4 at density at most pi/sqrt(12)
    let disks = |area: f64| area * density / (PI / 4.0);
    let independent_in_4_ball = packing_bound(4).expect("r = 4 is in range");
    LemmaConstants {
        packing_density: density,
        semicircle_area,
        opposite_sectors_area,
        semicircle_disk_bound: disks(semicircle_area),
        opposite_sectors_disk_bound: disks(opposite_sectors_area),
        clique_neighborhood_independence: 12,
        max_cores_per_low_reliever: (independent_in_4_ball - 3) / 5,
        low_reliever_average: (3.0 + 14.0 * 5.0) / 15.0,
        four_reliever_average: (4.0 + 8.0 * 5.0) / 9.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing_bounds() {
        assert_eq!(packing_bound(1).unwrap(), 8);
        assert_eq!(packing_bound(2).unwrap(), 22);
        assert_eq!(packing_bound(3).unwrap(), 44);
        assert_eq!(packing_bound(4).unwrap(), 73);
        assert_eq!(packing_bound(10).unwrap(), 399);
        assert_eq!(packing_bound(1_000_000).unwrap(), 3_627_602_356_068);
        assert!(packing_bound(0).is_err());
    }

    #[test]
    fn packing_bound_is_monotone() {
        let mut prev = 0;
        for r in 1..2000 {
            let b = packing_bound(r).unwrap();
            assert!(b >= prev);
            prev = b;
        }
    }

    #[test]
    fn charging_constants() {
        let c = lemma_constants();
        assert!((c.semicircle_disk_bound - 18.8814).abs() < 1e-3);
        assert!(c.semicircle_disk_bound < 19.0);
        assert!((c.opposite_sectors_disk_bound - 19.9989).abs() < 1e-3);
        assert!(c.opposite_sectors_disk_bound < 20.0);
        assert_eq!(c.max_cores_per_low_reliever, 14);
        assert!(c.low_reliever_average < 4.867);
        assert!((c.four_reliever_average - 44.0 / 9.0).abs() < 1e-12);
    }
}
