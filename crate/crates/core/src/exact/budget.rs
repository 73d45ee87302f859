use alloc::vec::Vec;

use crate::error::{invalid, Result};

/// Limits for the exact minimiser.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SearchBudget {
    /// Cap on the number of multiplicity vectors across all layers.
    pub max_states: u64,
    /// Wall-clock cap; enforced by the caller's [`Interrupt`].
    pub max_seconds: u64,
    /// Number of workers used for top-level branches.
    pub parallel_width: usize,
}

impl Default for SearchBudget {
    /// Large enough for `m = 3, n = 10` and too small for `n = 11`.
    fn default() -> Self {
        SearchBudget { max_states: 25_000_000, max_seconds: 3600, parallel_width: 1 }
    }
}

impl SearchBudget {
    pub fn with_states(max_states: u64) -> Self {
        SearchBudget { max_states, ..SearchBudget::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_states == 0 || self.max_seconds == 0 || self.parallel_width == 0 {
            return Err(invalid!("search budgets must be positive"));
        }
        Ok(())
    }
}

/// Cooperative cancellation, polled by long-running searches.
pub trait Interrupt: Sync {
    fn interrupted(&self) -> bool;
}

/// Never interrupts.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoInterrupt;

impl Interrupt for NoInterrupt {
    fn interrupted(&self) -> bool {
        false
    }
}

/// Best assignment found inside one top-level branch.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BranchOutcome {
    pub best: Option<(u128, Vec<u32>)>,
    pub states: u64,
    pub completed: bool,
}

/// Runs independent branch jobs and returns their outcomes in job order.
pub trait BranchExecutor: Sync {
    fn run(&self, jobs: usize, job: &(dyn Fn(usize) -> BranchOutcome + Sync)) -> Vec<BranchOutcome>;
}

/// Runs every job on the calling thread.
#[derive(Clone, Copy, Debug, Default)]
pub struct SerialExecutor;

impl BranchExecutor for SerialExecutor {
    fn run(&self, jobs: usize, job: &(dyn Fn(usize) -> BranchOutcome + Sync)) -> Vec<BranchOutcome> {
        (0..jobs).map(job).collect()
    }
}
