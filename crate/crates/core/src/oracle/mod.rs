//! Exact solvers, structural checkers and the packing constants behind the
//! approximation guarantees. Everything here is meant for desk-scale inputs.

mod bits;
mod constants;
mod exact;
mod structure;

pub use constants::{lemma_constants, packing_bound, LemmaConstants};
pub use exact::{
    enumerate_min_dominating_set, exact_min_dominating_set, exact_min_independent_dominating_set,
    DEFAULT_BUDGET,
};
pub use structure::{
    has_induced_k23, has_induced_star, max_independent_within, pendant_profile, PendantProfile,
    MAX_EXACT_SUBSET,
};
