use std::fmt;
use std::str::FromStr;

use crate::error::Error;

use super::{OrderPolicy, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    /// Greedy maximal independent set (5-approximation).
    Mis5,
    /// Graph-based corona reduction (44/9).
    Reduce44,
    /// Geometric corona reduction (44/9).
    Geo44,
    /// Weak corona reduction (43/9).
    Weak43,
    /// Exact branch-and-bound.
    Exact,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Mis5,
        Algorithm::Reduce44,
        Algorithm::Geo44,
        Algorithm::Weak43,
        Algorithm::Exact,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Algorithm::Mis5 => "mis5",
            Algorithm::Reduce44 => "reduce44",
            Algorithm::Geo44 => "geo44",
            Algorithm::Weak43 => "weak43",
            Algorithm::Exact => "exact",
        }
    }

    /// Proven approximation factor as `numerator / denominator`.
    pub fn ratio_bound(self) -> (u64, u64) {
        match self {
            Algorithm::Mis5 => (5, 1),
            Algorithm::Reduce44 | Algorithm::Geo44 => (44, 9),
            Algorithm::Weak43 => (43, 9),
            Algorithm::Exact => (1, 1),
        }
    }

    /// `size / optimum <= bound`, compared exactly in integers.
    pub fn respects_bound(self, size: usize, optimum: usize) -> bool {
        let (num, den) = self.ratio_bound();
        den * size as u64 <= num * optimum as u64
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.label() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown algorithm `{s}`")))
    }
}

/// An independent dominating set (or, for [`Algorithm::Exact`], a dominating
/// set) with the provenance of the run that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub set: VertexSet,
    pub algorithm: Algorithm,
    /// Passes of the main loop, including the final one that found nothing to
    /// reduce. Zero for algorithms without a loop.
    pub iterations: usize,
    pub order: OrderPolicy,
    /// `|D|` before the first pass and after each pass.
    pub history: Vec<usize>,
}

impl Solution {
    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_are_exact_integer_comparisons() {
        assert!(Algorithm::Reduce44.respects_bound(24, 5));
        assert!(!Algorithm::Reduce44.respects_bound(25, 5));
        assert!(Algorithm::Weak43.respects_bound(34, 8));
        assert!(Algorithm::Weak43.respects_bound(38, 8));
        assert!(!Algorithm::Weak43.respects_bound(39, 8));
        assert!(Algorithm::Mis5.respects_bound(5, 1));
        for a in Algorithm::ALL {
            assert_eq!(a.label().parse::<Algorithm>().unwrap(), a);
        }
    }
}
