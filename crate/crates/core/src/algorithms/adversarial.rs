use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::model::{OrderPolicy, Solution};

/// Result of [`adversarial_search`].
#[derive(Debug, Clone)]
pub struct AdversarialOutcome {
    /// Largest solution found.
    pub worst: Solution,
    /// Explicit order that produced `worst`.
    pub worst_order: Vec<usize>,
    pub evaluations: usize,
    /// How many evaluated orders produced each solution size.
    pub sizes: BTreeMap<usize, usize>,
}

/// Searches for an order policy that makes `solve` return a large solution.
///
/// Each step either draws a fresh random permutation or perturbs the current
/// worst one with a few transpositions; a candidate replaces the incumbent
/// when its (final size, initial independent set size) is at least as large.
/// Stops after `budget` evaluations or as soon as the size reaches `target`.
pub fn adversarial_search(
    n: usize,
    budget: usize,
    seed: u64,
    target: Option<usize>,
    mut solve: impl FnMut(&OrderPolicy) -> Result<Solution>,
) -> Result<AdversarialOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sizes = BTreeMap::new();
    let mut best: Option<((usize, usize), Vec<usize>, Solution)> = None;
    let mut evaluations = 0;
    for _ in 0..budget.max(1) {
        let order = match &best {
            Some((_, incumbent, _)) if n > 1 && !rng.gen_bool(0.2) => {
                let mut order = incumbent.clone();
                for _ in 0..rng.gen_range(1..=3) {
                    let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
                    order.swap(i, j);
                }
                order
            }
            _ => {
                let mut order: Vec<usize> = (0..n).collect();
                order.shuffle(&mut rng);
                order
            }
        };
        let solution = solve(&OrderPolicy::Explicit(order.clone()))?;
        evaluations += 1;
        *sizes.entry(solution.len()).or_insert(0) += 1;
        let fitness = (solution.len(), solution.history[0]);
        if best.as_ref().is_none_or(|(f, _, _)| fitness >= *f) {
            best = Some((fitness, order, solution));
        }
        if target.is_some_and(|t| best.as_ref().unwrap().2.len() >= t) {
            break;
        }
    }
    let (_, worst_order, worst) = best.expect("at least one evaluation");
    Ok(AdversarialOutcome {
        worst,
        worst_order,
        evaluations,
        sizes,
    })
}
