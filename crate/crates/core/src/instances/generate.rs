use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::{Point, PointInstance};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distribution {
    Uniform,
    /// Points scattered uniformly within `spread` (per axis) of one of
    /// `clusters` uniformly placed centers, clamped to the box.
    Clustered {
        clusters: usize,
        spread: i64,
    },
    /// `flowers` planted stars, each a center with five pairwise
    /// non-adjacent petals at distance `0.95..=1` thresholds, and the
    /// remaining points uniform. Greedy independent sets on these often
    /// contain whole coronas.
    Flowers {
        flowers: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub n: usize,
    pub box_side: i64,
    pub threshold: i64,
    pub seed: u64,
    pub distribution: Distribution,
}

impl GeneratorConfig {
    pub fn uniform(n: usize, box_side: i64, threshold: i64, seed: u64) -> Self {
        Self {
            n,
            box_side,
            threshold,
            seed,
            distribution: Distribution::Uniform,
        }
    }

    /// Uniform points whose box grows with `sqrt(n)` so that the expected
    /// number of points per `threshold x threshold` square stays at `density`.
    pub fn with_density(n: usize, threshold: i64, density: f64, seed: u64) -> Self {
        let side = (n as f64 / density).sqrt() * threshold as f64;
        Self::uniform(n, (side.ceil() as i64).max(threshold), threshold, seed)
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidInput("point count must be at least 1".into()));
        }
        if self.threshold < 1 || self.box_side < self.threshold {
            return Err(Error::InvalidInput(format!(
                "need 1 <= threshold <= box side, got threshold {} and box {}",
                self.threshold, self.box_side
            )));
        }
        match self.distribution {
            Distribution::Uniform => {}
            Distribution::Clustered { clusters, spread } => {
                if clusters == 0 || spread < 0 {
                    return Err(Error::InvalidInput(
                        "clustered generation needs at least one cluster and a non-negative spread"
                            .into(),
                    ));
                }
            }
            Distribution::Flowers { flowers } => {
                if flowers.saturating_mul(6) > self.n {
                    return Err(Error::InvalidInput(format!(
                        "{flowers} flowers need {} points, only {} requested",
                        flowers.saturating_mul(6),
                        self.n
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Deterministic point set for the configuration; coordinates lie in
/// `[0, box_side]`. The random stream is ChaCha8 seeded from `seed`.
pub fn generate(cfg: &GeneratorConfig) -> Result<PointInstance> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let side = cfg.box_side;
    let points = match cfg.distribution {
        Distribution::Uniform => (0..cfg.n)
            .map(|_| Point::new(rng.gen_range(0..=side), rng.gen_range(0..=side)))
            .collect(),
        Distribution::Clustered { clusters, spread } => {
            let centers: Vec<Point> = (0..clusters)
                .map(|_| Point::new(rng.gen_range(0..=side), rng.gen_range(0..=side)))
                .collect();
            (0..cfg.n)
                .map(|_| {
                    let c = centers[rng.gen_range(0..clusters)];
                    Point::new(
                        (c.x + rng.gen_range(-spread..=spread)).clamp(0, side),
                        (c.y + rng.gen_range(-spread..=spread)).clamp(0, side),
                    )
                })
                .collect()
        }
        Distribution::Flowers { flowers } => {
            let t = cfg.threshold as f64;
            let mut points = Vec::with_capacity(cfg.n);
            // keep whole flowers inside the box when it is large enough
            let margin = if side > 2 * cfg.threshold {
                cfg.threshold
            } else {
                0
            };
            for _ in 0..flowers {
                let c = Point::new(
                    rng.gen_range(margin..=side - margin),
                    rng.gen_range(margin..=side - margin),
                );
                points.push(c);
                let turn: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
                for k in 0..5 {
                    // +-3 degrees keeps neighbouring petals more than one
                    // threshold apart
                    let a = turn
                        + k as f64 * 72f64.to_radians()
                        + rng.gen_range(-3f64..=3.0).to_radians();
                    let r = t * rng.gen_range(0.95..=1.0);
                    let x = c.x + (r * a.cos()).round() as i64;
                    let y = c.y + (r * a.sin()).round() as i64;
                    points.push(Point::new(x.clamp(0, side), y.clamp(0, side)));
                }
            }
            while points.len() < cfg.n {
                points.push(Point::new(rng.gen_range(0..=side), rng.gen_range(0..=side)));
            }
            points
        }
    };
    PointInstance::new(points, cfg.threshold)
}
