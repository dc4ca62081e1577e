use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// How the "arbitrary" choices of the algorithms are resolved: the order in
/// which the greedy independent set scans vertices, and the greedy order for
/// witness sets.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum OrderPolicy {
    /// Ascending vertex id.
    #[default]
    Id,
    /// A ChaCha8 permutation of the ids seeded with the given value.
    Seeded(u64),
    /// An explicit permutation of `0..n`.
    Explicit(Vec<usize>),
}

impl OrderPolicy {
    pub fn permutation(&self, n: usize) -> Result<Vec<usize>> {
        match self {
            OrderPolicy::Id => Ok((0..n).collect()),
            OrderPolicy::Seeded(seed) => {
                let mut order: Vec<usize> = (0..n).collect();
                order.shuffle(&mut ChaCha8Rng::seed_from_u64(*seed));
                Ok(order)
            }
            OrderPolicy::Explicit(order) => {
                if order.len() != n {
                    return Err(Error::InvalidInput(format!(
                        "explicit order has {} entries, expected {n}",
                        order.len()
                    )));
                }
                let mut seen = vec![false; n];
                for &v in order {
                    if v >= n || std::mem::replace(&mut seen[v], true) {
                        return Err(Error::InvalidInput(format!(
                            "explicit order is not a permutation (entry {v})"
                        )));
                    }
                }
                Ok(order.clone())
            }
        }
    }

    pub fn ranking(&self, n: usize) -> Result<Ranking> {
        Ok(Ranking::from_order(&self.permutation(n)?))
    }
}

impl fmt::Display for OrderPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderPolicy::Id => f.write_str("id"),
            OrderPolicy::Seeded(s) => write!(f, "seed:{s}"),
            OrderPolicy::Explicit(_) => f.write_str("explicit"),
        }
    }
}

impl FromStr for OrderPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "id" {
            return Ok(OrderPolicy::Id);
        }
        s.strip_prefix("seed:")
            .and_then(|rest| rest.parse().ok())
            .map(OrderPolicy::Seeded)
            .ok_or_else(|| Error::InvalidInput(format!("unknown order policy `{s}`")))
    }
}

/// Position of every vertex in an order: lower rank comes first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ranking(Vec<usize>);

impl Ranking {
    pub fn identity(n: usize) -> Self {
        Ranking((0..n).collect())
    }

    pub fn from_order(order: &[usize]) -> Self {
        let mut rank = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        Ranking(rank)
    }

    #[inline]
    pub fn rank(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_orders_are_reproducible_permutations() {
        let a = OrderPolicy::Seeded(9).permutation(50).unwrap();
        assert_eq!(a, OrderPolicy::Seeded(9).permutation(50).unwrap());
        assert_ne!(a, OrderPolicy::Seeded(10).permutation(50).unwrap());
        let mut sorted = a.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..50).collect::<Vec<_>>());
    }

    #[test]
    fn explicit_orders_are_validated() {
        assert!(OrderPolicy::Explicit(vec![1, 0, 2]).permutation(3).is_ok());
        assert!(OrderPolicy::Explicit(vec![1, 1, 2]).permutation(3).is_err());
        assert!(OrderPolicy::Explicit(vec![0, 1]).permutation(3).is_err());
    }

    #[test]
    fn parse_and_display() {
        for s in ["id", "seed:42"] {
            assert_eq!(s.parse::<OrderPolicy>().unwrap().to_string(), s);
        }
        assert!("seed:x".parse::<OrderPolicy>().is_err());
        let r = Ranking::from_order(&[2, 0, 1]);
        assert_eq!((r.rank(2), r.rank(0), r.rank(1)), (0, 1, 2));
    }
}
