//! Resource guard for exhaustive enumeration over all labeled trees.

use crate::error::{Error, Result};

/// Environment variable overriding [`Guard::DEFAULT_MAX_TREES`].
pub const MAX_TREES_ENV: &str = "ARBOREAL_MAX_TREES";

/// Upper limit on the number of trees any single exhaustive pass may enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guard {
    max_trees: u128,
}

impl Guard {
    pub const DEFAULT_MAX_TREES: u128 = 100_000_000;

    pub fn new(max_trees: u128) -> Self {
        Self { max_trees }
    }

    pub fn unlimited() -> Self {
        Self {
            max_trees: u128::MAX,
        }
    }

    /// Reads the limit from `ARBOREAL_MAX_TREES`, falling back to the default
    /// when the variable is unset or unparsable.
    pub fn from_env() -> Self {
        std::env::var(MAX_TREES_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<u128>().ok())
            .map(Self::new)
            .unwrap_or_default()
    }

    pub fn max_trees(&self) -> u128 {
        self.max_trees
    }

    pub fn check(&self, requested: u128) -> Result<()> {
        if requested > self.max_trees {
            Err(Error::GuardExceeded {
                requested,
                limit: self.max_trees,
            })
        } else {
            Ok(())
        }
    }

    /// Checks that `n^{n-2}` trees may be enumerated.
    pub fn check_trees(&self, n: usize) -> Result<()> {
        self.check(crate::tree::tree_count_u128(n).unwrap_or(u128::MAX))
    }
}

impl Default for Guard {
    fn default() -> Self {
        Self::new(Self::DEFAULT_MAX_TREES)
    }
}
