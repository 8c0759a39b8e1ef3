use crate::error::{Error, Result};

/// Caps for the exhaustive searches. Every enumeration checks its size up front
/// and refuses with [`Error::BudgetExceeded`] instead of running unbounded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Candidate vectors scanned by a single enumeration.
    pub max_vectors: u64,
    /// Subspaces produced by an all-subspace scan.
    pub max_subspaces: u64,
    /// Largest dimension for whole-algebra natural-basis enumeration.
    pub max_natural_dim: usize,
    /// Largest prime for whole-algebra natural-basis enumeration.
    pub max_natural_prime: u64,
    /// Candidate poset size for definable-lattice enumeration.
    pub max_lattice_size: usize,
    /// Combinations visited by subset and multiset searches.
    pub max_combinations: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vectors: 1_000_000,
            max_subspaces: 1_000_000,
            max_natural_dim: 4,
            max_natural_prime: 7,
            max_lattice_size: 12,
            max_combinations: 1_000_000,
        }
    }
}

impl Limits {
    pub(crate) fn check_vectors(&self, what: &str, needed: u128) -> Result<()> {
        if needed > self.max_vectors as u128 {
            return Err(Error::budget(what, needed, self.max_vectors));
        }
        Ok(())
    }

    pub(crate) fn check_subspaces(&self, what: &str, needed: u128) -> Result<()> {
        if needed > self.max_subspaces as u128 {
            return Err(Error::budget(what, needed, self.max_subspaces));
        }
        Ok(())
    }

    pub(crate) fn check_combinations(&self, what: &str, needed: u128) -> Result<()> {
        if needed > self.max_combinations as u128 {
            return Err(Error::budget(what, needed, self.max_combinations));
        }
        Ok(())
    }
}

/// `base^exp` saturating at `u128::MAX`.
pub(crate) fn pow_sat(base: u64, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}
