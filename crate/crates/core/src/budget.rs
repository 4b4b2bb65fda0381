//! Node limits for the exponential searches used throughout the crate.
//!
//! Every exact search counts the nodes it expands and stops with
//! [`BudgetExceeded`] once its limit is reached. A budget hit is never
//! reported as a negative answer.

use thiserror::Error;

/// Environment variable that overrides every default search budget.
pub const BUDGET_ENV: &str = "CYCLEPACK_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search budget of {limit} nodes exceeded in {search}")]
pub struct BudgetExceeded {
    pub search: &'static str,
    pub limit: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Maximum independent set branch-and-bound.
    pub independence: u64,
    /// Exact maximum cycle packing.
    pub oracle: u64,
    /// Longest path in the remainder of a packing.
    pub longest_path: u64,
    /// Cycle enumeration inside one improvement move.
    pub cycle_enumeration: u64,
    /// Partial states explored when exchanging a pair of cycles.
    pub exchange: u64,
    /// Exact equitable coloring search.
    pub coloring: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            independence: 10_000_000,
            oracle: 20_000_000,
            longest_path: 1_000_000,
            cycle_enumeration: 1_000_000,
            exchange: 1_000_000,
            coloring: 10_000_000,
        }
    }
}

impl SearchBudget {
    /// The same node limit for every search.
    pub fn uniform(limit: u64) -> Self {
        SearchBudget {
            independence: limit,
            oracle: limit,
            longest_path: limit,
            cycle_enumeration: limit,
            exchange: limit,
            coloring: limit,
        }
    }

    /// Defaults, unless `CYCLEPACK_BUDGET` holds a node count.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
            .map(Self::uniform)
            .unwrap_or_default()
    }
}

/// Node counter shared by the recursive searches.
#[derive(Debug)]
pub struct Meter {
    search: &'static str,
    limit: u64,
    used: u64,
}

impl Meter {
    pub fn new(search: &'static str, limit: u64) -> Self {
        Meter {
            search,
            limit,
            used: 0,
        }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<(), BudgetExceeded> {
        self.used += 1;
        if self.used > self.limit {
            Err(BudgetExceeded {
                search: self.search,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}
